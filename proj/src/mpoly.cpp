#include "pv/mpoly.hpp"

#include <algorithm>
#include <map>

#include "pv/errors.hpp"

namespace pv {

PolyRing::PolyRing(std::vector<std::string> vars, MonomialOrder order) : vars_(std::move(vars)), order_(order) {
  if (order_.kind == OrderKind::Block && order_.split > vars_.size())
    throw Error(ErrorKind::VariableSetMismatch, "block split beyond variable count");
}

RingPtr PolyRing::make(std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(vars), order);
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

namespace {

int grevlex_range(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int PolyRing::compare(const Exponents& a, const Exponents& b) const {
  switch (order_.kind) {
    case OrderKind::GrevLex:
      return grevlex_range(a, b, 0, vars_.size());
    case OrderKind::Lex:
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case OrderKind::Block: {
      const int c = grevlex_range(a, b, 0, order_.split);
      if (c != 0) return c;
      return grevlex_range(a, b, order_.split, vars_.size());
    }
  }
  return 0;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b)) throw Error(ErrorKind::VariableSetMismatch, where);
}

std::uint32_t total_degree(const Exponents& e) {
  std::uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents quotient(const Exponents& b, const Exponents& a) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

MPoly::MPoly(RingPtr ring, const RatFunc& constant) : ring_(std::move(ring)) {
  if (!constant.is_zero()) terms_.push_back({Exponents(ring_->size(), 0), constant});
}

MPoly MPoly::variable(const RingPtr& ring, std::size_t index) {
  Exponents e(ring->size(), 0);
  e.at(index) = 1;
  return monomial(ring, std::move(e), RatFunc(1));
}

MPoly MPoly::variable(const RingPtr& ring, const std::string& name) {
  auto idx = ring->index_of(name);
  if (!idx) throw Error(ErrorKind::VariableSetMismatch, "unknown variable " + name);
  return variable(ring, *idx);
}

MPoly MPoly::monomial(const RingPtr& ring, Exponents exp, RatFunc coef) {
  MPoly p(ring);
  if (!coef.is_zero()) p.terms_.push_back({std::move(exp), std::move(coef)});
  return p;
}

MPoly MPoly::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  auto cmp = [&ring](const Exponents& a, const Exponents& b) { return ring->compare(a, b) > 0; };
  std::map<Exponents, RatFunc, decltype(cmp)> acc(cmp);
  for (auto& t : terms) {
    if (t.coef.is_zero()) continue;
    auto [it, inserted] = acc.try_emplace(std::move(t.exp), t.coef);
    if (!inserted) it->second += t.coef;
  }
  MPoly p(ring);
  p.terms_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({e, c});
  return p;
}

MPoly MPoly::from_sorted_terms(const RingPtr& ring, std::vector<Term> terms) {
  MPoly p(ring);
  p.terms_ = std::move(terms);
  return p;
}

Term MPoly::take_lead() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && pv::total_degree(terms_[0].exp) == 0);
}

std::optional<RatFunc> MPoly::as_constant() const {
  if (terms_.empty()) return RatFunc();
  if (is_constant()) return terms_[0].coef;
  return std::nullopt;
}

RatFunc MPoly::constant_term() const {
  if (!terms_.empty() && pv::total_degree(terms_.back().exp) == 0) return terms_.back().coef;
  return RatFunc();
}

RatFunc MPoly::coefficient(const Exponents& e) const {
  for (const auto& t : terms_)
    if (t.exp == e) return t.coef;
  return RatFunc();
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(pv::total_degree(t.exp)));
  return d;
}

std::uint32_t MPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

bool MPoly::uses_variable(std::size_t var) const { return degree_in(var) > 0; }

std::vector<bool> MPoly::support() const {
  std::vector<bool> s(ring_ ? ring_->size() : 0, false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (t.exp[i] > 0) s[i] = true;
  return s;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) {
    if (!ring_) ring_ = o.ring_;
    return *this;
  }
  if (!ring_) ring_ = o.ring_;
  require_same_ring(ring_, o.ring_, "addition of polynomials over different variables");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = ring_->compare(terms_[i].exp, o.terms_[j].exp);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      RatFunc s = terms_[i].coef + o.terms_[j].coef;
      if (!s.is_zero()) out.push_back({std::move(terms_[i].exp), std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    MPoly z(a.ring_ ? a.ring_ : b.ring_);
    return z;
  }
  require_same_ring(a.ring_, b.ring_, "product of polynomials over different variables");
  if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].exp, a.terms_[0].coef);
  if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].exp, b.terms_[0].coef);
  const RingPtr& ring = a.ring_;
  auto cmp = [&ring](const Exponents& x, const Exponents& y) { return ring->compare(x, y) > 0; };
  std::map<Exponents, RatFunc, decltype(cmp)> acc(cmp);
  Exponents e(ring->size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ta.exp[k] + tb.exp[k];
      RatFunc c = ta.coef * tb.coef;
      auto [it, inserted] = acc.try_emplace(e, c);
      if (!inserted) it->second += c;
    }
  }
  MPoly p(ring);
  p.terms_.reserve(acc.size());
  for (auto& [ex, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({ex, c});
  return p;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (!(a.ring_ == b.ring_ || a.ring_->same_as(*b.ring_))) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

MPoly MPoly::mul_term(const Exponents& e, const RatFunc& c) const {
  MPoly r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents x(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) x[k] = t.exp[k] + e[k];
    r.terms_.push_back({std::move(x), t.coef * c});
  }
  return r;
}

void MPoly::sub_mul_term(const RatFunc& c, const Exponents& e, const MPoly& g) {
  // Multiplying by a monomial preserves the order, so this is a merge.
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Exponents x(e.size());
  auto shifted = [&](std::size_t idx) {
    for (std::size_t k = 0; k < e.size(); ++k) x[k] = g.terms_[idx].exp[k] + e[k];
  };
  bool have = false;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size() && !have) {
      shifted(j);
      have = true;
    }
    int cmp;
    if (i >= terms_.size()) cmp = -1;
    else if (j >= g.terms_.size()) cmp = 1;
    else cmp = ring_->compare(terms_[i].exp, x);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({x, -(g.terms_[j].coef * c)});
      ++j;
      have = false;
    } else {
      RatFunc s = terms_[i].coef - g.terms_[j].coef * c;
      if (!s.is_zero()) out.push_back({std::move(terms_[i].exp), std::move(s)});
      ++i;
      ++j;
      have = false;
    }
  }
  terms_ = std::move(out);
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(ring_, RatFunc(1)), base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * terms_[0].coef.inverse();
}

MPoly MPoly::partial(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exp[var] == 0) continue;
    Exponents x = t.exp;
    const auto k = static_cast<long>(x[var]);
    --x[var];
    out.push_back({std::move(x), t.coef * RatFunc(k)});
  }
  // Lowering one exponent keeps the monomials distinct but not necessarily ordered.
  return from_terms(ring_, std::move(out));
}

MPoly MPoly::map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const {
  MPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    RatFunc c = f(t.coef);
    if (!c.is_zero()) r.terms_.push_back({t.exp, std::move(c)});
  }
  return r;
}

MPoly MPoly::substitute(const RingPtr& target, std::span<const MPoly> images) const {
  if (images.size() != (ring_ ? ring_->size() : 0))
    throw Error(ErrorKind::VariableSetMismatch, "substitution image count differs from variable count");
  std::vector<std::vector<MPoly>> powers(images.size());
  auto power = [&](std::size_t v, std::uint32_t k) -> const MPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.emplace_back(target, RatFunc(1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[v]);
    return cache[k];
  };
  MPoly result(target);
  for (const auto& t : terms_) {
    MPoly prod(target, t.coef);
    for (std::size_t v = 0; v < t.exp.size() && !prod.is_zero(); ++v)
      if (t.exp[v] > 0) prod *= power(v, t.exp[v]);
    result += prod;
  }
  return result;
}

MPoly MPoly::embed(const RingPtr& target, std::span<const std::size_t> var_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents x(target->size(), 0);
    for (std::size_t i = 0; i < t.exp.size(); ++i) x[var_map[i]] += t.exp[i];
    out.push_back({std::move(x), t.coef});
  }
  return from_terms(target, std::move(out));
}

MPoly MPoly::embed_by_name(const RingPtr& target) const {
  std::vector<std::size_t> map;
  const std::size_t n = ring_ ? ring_->size() : 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto idx = target->index_of(ring_->variables()[i]);
    if (!idx) {
      if (uses_variable(i)) throw Error(ErrorKind::VariableSetMismatch, "variable " + ring_->variables()[i] + " missing in target");
      map.push_back(0);
      continue;
    }
    map.push_back(*idx);
  }
  if (!ring_) return MPoly(target);
  return embed(target, map);
}

std::string monomial_to_string(const PolyRing& ring, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.variables()[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    const std::string mono = monomial_to_string(*ring_, t.exp);
    const bool negative = t.coef.looks_negative();
    const RatFunc mag = negative ? -t.coef : t.coef;
    std::string term;
    if (mono.empty()) {
      term = mag.is_simple() || terms_.size() == 1 ? mag.to_string() : "(" + mag.to_string() + ")";
    } else if (mag.is_one()) {
      term = mono;
    } else if (mag.is_simple() || !mag.is_polynomial()) {
      // A quotient n/d is a left-associative product factor already.
      term = mag.to_string() + "*" + mono;
    } else {
      term = "(" + mag.to_string() + ")*" + mono;
    }
    if (out.empty()) out = (negative ? "-" : "") + term;
    else out += (negative ? "-" : "+") + term;
  }
  return out;
}

}  // namespace pv
