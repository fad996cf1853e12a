#include "pv/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pv/errors.hpp"

namespace pv {

namespace {

const MPoly* find_reducer(const std::vector<MPoly>& divisors, const Exponents& e) {
  for (const auto& g : divisors)
    if (divides(g.lead().exp, e)) return &g;
  return nullptr;
}

// Full reduction by monic divisors.
MPoly reduce(MPoly p, const std::vector<MPoly>& divisors) {
  std::vector<Term> rest;
  const RingPtr ring = p.ring();
  while (!p.is_zero()) {
    const MPoly* g = find_reducer(divisors, p.lead().exp);
    if (g) {
      const RatFunc c = p.lead().coef;
      const Exponents q = quotient(p.lead().exp, g->lead().exp);
      p.sub_mul_term(c, q, *g);
    } else {
      rest.push_back(p.take_lead());
    }
  }
  return MPoly::from_sorted_terms(ring, std::move(rest));
}

struct Pair {
  std::size_t i, j;
  Exponents lcm;
  std::uint32_t degree;
};

}  // namespace

bool IdealGB::is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }

MPoly IdealGB::normal_form(const MPoly& f) const {
  if (f.is_zero()) return MPoly(ring_);
  require_same_ring(ring_, f.ring(), "normal form over a different ring");
  return reduce(f, basis_);
}

MPoly normal_form(const MPoly& f, const IdealGB& ideal) { return ideal.normal_form(f); }

MPoly s_polynomial(const MPoly& f, const MPoly& g) {
  const Exponents l = lcm(f.lead().exp, g.lead().exp);
  MPoly a = f.mul_term(quotient(l, f.lead().exp), f.lead().coef.inverse());
  a.sub_mul_term(g.lead().coef.inverse(), quotient(l, g.lead().exp), g);
  return a;
}

IdealGB groebner(const RingPtr& ring, std::vector<MPoly> gens) {
  IdealGB out(ring);
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring, g.ring(), "ideal generator over a different ring");
    out.generators_.push_back(g);
  }

  std::vector<MPoly> G;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  bool unit = false;

  auto add = [&](MPoly h) {
    h = h.monic();
    if (h.is_constant()) {
      unit = true;
      return;
    }
    const std::size_t idx = G.size();
    G.push_back(std::move(h));
    for (std::size_t k = 0; k < idx; ++k) {
      Exponents l = lcm(G[k].lead().exp, G[idx].lead().exp);
      const auto deg = total_degree(l);
      pairs.push_back({k, idx, std::move(l), deg});
      pending.insert({k, idx});
    }
  };

  for (const auto& g : out.generators_) {
    MPoly h = reduce(g, G);
    if (!h.is_zero()) add(std::move(h));
    if (unit) break;
  }

  while (!unit && !pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = pairs.begin(); it != pairs.end(); ++it) {
      if (it->degree < best->degree || (it->degree == best->degree && ring->compare(it->lcm, best->lcm) < 0)) best = it;
    }
    Pair p = std::move(*best);
    pairs.erase(best);
    pending.erase({p.i, p.j});

    const Exponents& a = G[p.i].lead().exp;
    const Exponents& b = G[p.j].lead().exp;
    bool coprime = true;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] > 0 && b[k] > 0) coprime = false;
    if (coprime) continue;

    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!divides(G[k].lead().exp, p.lcm)) continue;
      const auto ik = std::minmax(p.i, k);
      const auto jk = std::minmax(p.j, k);
      if (!pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second})) chain = true;
    }
    if (chain) continue;

    MPoly h = reduce(s_polynomial(G[p.i], G[p.j]), G);
    if (!h.is_zero()) add(std::move(h));
  }

  if (unit) {
    out.basis_ = {MPoly(ring, RatFunc(1))};
    return out;
  }

  std::vector<MPoly> minimal;
  for (std::size_t k = 0; k < G.size(); ++k) {
    bool redundant = false;
    for (const auto& m : minimal)
      if (divides(m.lead().exp, G[k].lead().exp)) redundant = true;
    if (redundant) continue;
    minimal.erase(std::remove_if(minimal.begin(), minimal.end(),
                                 [&](const MPoly& m) { return divides(G[k].lead().exp, m.lead().exp); }),
                  minimal.end());
    minimal.push_back(G[k]);
  }

  std::vector<MPoly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<MPoly> others;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(minimal[m]);
    MPoly g = minimal[k];
    Term lt = g.take_lead();
    MPoly tail = reduce(std::move(g), others);
    std::vector<Term> terms{std::move(lt)};
    for (const auto& t : tail.terms()) terms.push_back(t);
    reduced.push_back(MPoly::from_sorted_terms(ring, std::move(terms)).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [&ring](const MPoly& x, const MPoly& y) { return ring->compare(x.lead().exp, y.lead().exp) > 0; });
  out.basis_ = std::move(reduced);
  return out;
}

bool ideal_equal(const IdealGB& a, const IdealGB& b) {
  require_same_ring(a.ring(), b.ring(), "comparing ideals over different rings");
  return a.basis() == b.basis();
}

IdealGB ideal_sum(const IdealGB& a, const std::vector<MPoly>& extra) {
  std::vector<MPoly> gens = a.basis();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return groebner(a.ring(), std::move(gens));
}

bool satisfies_buchberger_criterion(const IdealGB& ideal) {
  const auto& B = ideal.basis();
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j)
      if (!reduce(s_polynomial(B[i], B[j]), B).is_zero()) return false;
  return true;
}

std::vector<Exponents> standard_monomials(const IdealGB& ideal, int max_degree) {
  std::vector<Exponents> out;
  if (ideal.is_unit() || max_degree < 0) return out;
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->size();
  Exponents e(n, 0);
  // Enumerate exponent vectors with total degree <= max_degree, pruning
  // as soon as a prefix is already a multiple of a leading monomial.
  auto standard = [&](const Exponents& x) {
    for (const auto& g : ideal.basis())
      if (divides(g.lead().exp, x)) return false;
    return true;
  };
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (!standard(e)) return;
    if (v == n) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[v] = static_cast<std::uint32_t>(k);
      rec(v + 1, left - k);
      if (!standard(e)) break;
    }
    e[v] = 0;
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end(), [&ring](const Exponents& a, const Exponents& b) {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return ring->compare(a, b) < 0;
  });
  return out;
}

int krull_dimension(const IdealGB& ideal) {
  if (ideal.is_unit()) return -1;
  const std::size_t n = ideal.ring()->size();
  std::vector<std::vector<bool>> supports;
  for (const auto& g : ideal.basis()) {
    std::vector<bool> s(n, false);
    for (std::size_t k = 0; k < n; ++k) s[k] = g.lead().exp[k] > 0;
    supports.push_back(std::move(s));
  }
  // Largest set of variables containing the support of no leading monomial.
  std::vector<bool> chosen(n, false);
  int best = 0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int size) {
    if (size + static_cast<int>(n - v) <= best) return;
    if (v == n) {
      best = size;
      return;
    }
    chosen[v] = true;
    bool ok = true;
    for (const auto& s : supports) {
      bool inside = true;
      for (std::size_t k = 0; k < n && inside; ++k)
        if (s[k] && !chosen[k]) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) rec(v + 1, size + 1);
    chosen[v] = false;
    rec(v + 1, size);
  };
  rec(0, 0);
  return best;
}

}  // namespace pv
