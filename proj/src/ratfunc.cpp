#include "pv/ratfunc.hpp"

#include "pv/errors.hpp"

namespace pv {

UPoly::UPoly(const Scalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::t() { return UPoly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

UPoly UPoly::monomial(const Scalar& c, int degree) {
  if (c.is_zero()) return {};
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar(0));
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UPoly::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(0);
  return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  UPoly rem = *this;
  const int dd = divisor.degree();
  if (rem.degree() < dd) return {UPoly(), rem};
  std::vector<Scalar> q(static_cast<std::size_t>(rem.degree() - dd) + 1, Scalar(0));
  const Scalar inv_lead = divisor.lead().inverse();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    const Scalar f = rem.lead() * inv_lead;
    q[static_cast<std::size_t>(shift)] = f;
    for (int i = 0; i <= dd; ++i) rem.c_[static_cast<std::size_t>(shift + i)] -= f * divisor.c_[static_cast<std::size_t>(i)];
    rem.trim();
  }
  return {UPoly(std::move(q)), rem};
}

UPoly UPoly::exact_div(const UPoly& divisor) const {
  if (divisor.is_constant()) {
    UPoly r = *this;
    return r *= divisor.lead().inverse();
  }
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw Error(ErrorKind::DivisionByZero, "inexact polynomial division");
  return q;
}

UPoly UPoly::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  UPoly r = *this;
  return r *= lead().inverse();
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Scalar(static_cast<long>(i));
  return UPoly(std::move(r));
}

UPoly UPoly::shifted(int by) const {
  // Horner in (t + by).
  UPoly lin(std::vector<Scalar>{Scalar(by), Scalar(1)});
  UPoly r;
  for (std::size_t k = c_.size(); k-- > 0;) {
    r *= lin;
    r += UPoly(c_[k]);
  }
  return r;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result(Scalar(1)), base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Scalar UPoly::evaluate(const Scalar& at) const {
  Scalar r(0);
  for (std::size_t k = c_.size(); k-- > 0;) r = r * at + c_[k];
  return r;
}

bool UPoly::is_simple() const {
  int terms = 0;
  for (const auto& c : c_) terms += c.is_zero() ? 0 : 1;
  if (terms == 0) return true;
  if (terms > 1) return false;
  for (const auto& c : c_)
    if (!c.is_zero()) return c.is_simple();
  return true;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  const bool single = is_simple();
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Scalar& c = c_[k];
    if (c.is_zero()) continue;
    const std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string term;
    bool negative = false;
    if (c.is_simple()) {
      negative = c.looks_negative();
      const Scalar mag = negative ? -c : c;
      if (mono.empty()) term = mag.to_string();
      else if (mag.is_one()) term = mono;
      else term = mag.to_string() + "*" + mono;
    } else {
      const std::string inner = "(" + c.to_string() + ")";
      term = mono.empty() ? (single ? c.to_string() : inner) : inner + "*" + mono;
    }
    if (out.empty()) out = (negative ? "-" : "") + term;
    else out += (negative ? "-" : "+") + term;
  }
  return out;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

UPoly lcm(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (a.exact_div(gcd(a, b)) * b).monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return UPoly(Scalar(1));
  return p.exact_div(gcd(p, p.derivative())).monic();
}

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = UPoly(Scalar(1));
    return;
  }
  if (!den_.is_constant()) {
    UPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  if (!den_.lead().is_one()) {
    const Scalar inv = den_.lead().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc ratfunc_normalize(const UPoly& num, const UPoly& den) { return RatFunc(num, den); }

Scalar RatFunc::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::FieldMismatch, "rational function is not a constant");
  return num_.coefficient(0);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_one()) {
      num_ += o.num_;
      return *this;
    }
    *this = RatFunc(num_ + o.num_, den_);
    return *this;
  }
  const UPoly g = gcd(den_, o.den_);
  const UPoly a = den_.exact_div(g);
  const UPoly b = o.den_.exact_div(g);
  *this = RatFunc(num_ * b + o.num_ * a, a * o.den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  const UPoly g1 = gcd(num_, o.den_);
  const UPoly g2 = gcd(o.num_, den_);
  UPoly n = num_.exact_div(g1) * o.num_.exact_div(g2);
  UPoly d = den_.exact_div(g2) * o.den_.exact_div(g1);
  if (!d.lead().is_one()) {
    const Scalar inv = d.lead().inverse();
    n *= inv;
    d *= inv;
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::derivative() const {
  if (den_.is_one()) return RatFunc(num_.derivative());
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::shifted(int by) const {
  if (is_constant()) return *this;
  return RatFunc(num_.shifted(by), den_.shifted(by));
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
  return r;
}

bool RatFunc::is_simple() const { return den_.is_one() && num_.is_simple(); }

bool RatFunc::looks_negative() const {
  if (!num_.is_simple() || num_.is_zero()) return false;
  return num_.lead().looks_negative();
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  const std::string n = num_.is_simple() ? num_.to_string() : "(" + num_.to_string() + ")";
  const std::string d = den_.is_simple() ? den_.to_string() : "(" + den_.to_string() + ")";
  return n + "/" + d;
}

}  // namespace pv
