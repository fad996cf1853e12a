#include "pv/solring.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "pv/ansatz.hpp"
#include "pv/errors.hpp"
#include "pv/parse.hpp"

namespace pv {

std::string entry_name(const std::string& stem, std::size_t i, std::size_t j) {
  if (i < 9 && j < 9) return stem + std::to_string(i + 1) + std::to_string(j + 1);
  return stem + std::to_string(i + 1) + "c" + std::to_string(j + 1);
}

std::vector<std::string> universal_variables(std::size_t n) {
  std::vector<std::string> vars{"d"};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) vars.push_back(entry_name("x", i, j));
  return vars;
}

namespace {

PolyMatrix variable_matrix(const RingPtr& ring, std::size_t n, std::size_t offset) {
  PolyMatrix x(n, n, MPoly(ring));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = MPoly::variable(ring, offset + i * n + j);
  return x;
}

PolyMatrix lift(const RatMatrix& a, const RingPtr& ring) {
  return a.map([&](const RatFunc& f) { return MPoly(ring, f); });
}

std::string fresh_name(const PolyRing& ring, const std::string& stem) {
  std::string name = stem;
  for (int k = 0; ring.index_of(name); ++k) name = stem + std::to_string(k);
  return name;
}

}  // namespace

SolutionRing universal_solution_ring(const CModule& m) {
  const std::size_t n = m.rank();
  auto ring = PolyRing::make(universal_variables(n));
  const PolyMatrix X = variable_matrix(ring, n, 1);
  const MPoly d = MPoly::variable(ring, 0);
  const MPoly det = X.determinant_expansion();
  IdealGB rel = groebner(ring, {d * det - MPoly(ring, RatFunc(1))});

  const PolyMatrix AX = lift(m.matrix(), ring) * X;
  std::vector<MPoly> action(ring->size(), MPoly(ring));
  if (m.setting().is_differential()) {
    action[0] = d * (-m.matrix().trace());
  } else {
    action[0] = d * m.matrix().determinant().inverse();
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) action[1 + i * n + j] = AX(i, j);

  SolutionRing r;
  r.algebra = OperatorAlgebra(m.setting(), std::move(rel), std::move(action));
  r.module = m;
  r.fundamental = X;
  r.det_inverse = d;
  r.has_fundamental = true;
  return r;
}

SolutionRing quotient_ring(const SolutionRing& u, const std::vector<MPoly>& gens) {
  IdealGB I = ideal_sum(u.algebra.relations(), gens);
  if (I.is_unit()) throw Error(ErrorKind::TrivialQuotient, "the generators span the unit ideal");
  if (!verify_operator_stable(u.algebra, I)) throw Error(ErrorKind::NotCIdeal, "the ideal is not operator-stable");
  SolutionRing r = u;
  r.algebra = quotient_algebra(u.algebra, I);
  if (r.has_fundamental) {
    r.fundamental = u.fundamental.map([&](const MPoly& f) { return I.normal_form(f); });
    r.det_inverse = I.normal_form(u.det_inverse);
  }
  return r;
}

SolutionRing foreign_ring(const OperatorAlgebra& alg, const CModule& m) {
  SolutionRing r;
  r.algebra = alg;
  r.module = m;
  r.has_fundamental = false;
  return r;
}

bool fundamental_equation_holds(const SolutionRing& r) {
  if (!r.has_fundamental) return false;
  const auto& alg = r.algebra;
  const PolyMatrix AX = lift(r.module.matrix(), alg.ring()) * r.fundamental;
  for (std::size_t i = 0; i < AX.rows(); ++i)
    for (std::size_t j = 0; j < AX.cols(); ++j)
      if (extend_action(alg, r.fundamental(i, j)) != alg.reduce(AX(i, j))) return false;
  return true;
}

bool unit_determinant_holds(const SolutionRing& r) {
  if (!r.has_fundamental) return false;
  const MPoly det = r.fundamental.rows() == 0 ? r.algebra.one() : r.fundamental.determinant_expansion();
  return r.algebra.reduce(det * r.det_inverse - r.algebra.one()).is_zero();
}

std::optional<MPoly> unit_inverse(const OperatorAlgebra& alg, const MPoly& f) {
  const RingPtr& ring = alg.ring();
  std::vector<std::string> vars{fresh_name(*ring, "y")};
  for (const auto& v : ring->variables()) vars.push_back(v);
  auto big = PolyRing::make(vars, MonomialOrder::block(1));
  std::vector<MPoly> gens;
  for (const auto& b : alg.relations().basis()) gens.push_back(b.embed_by_name(big));
  const MPoly y = MPoly::variable(big, 0);
  gens.push_back(y * f.embed_by_name(big) - MPoly(big, RatFunc(1)));
  IdealGB G = groebner(big, std::move(gens));
  if (G.is_unit()) return std::nullopt;
  MPoly g = G.normal_form(y);
  if (g.uses_variable(0)) return std::nullopt;
  MPoly back = alg.reduce(g.embed_by_name(ring));
  if (!alg.reduce(back * f - alg.one()).is_zero()) return std::nullopt;
  return back;
}

bool is_unit_element(const OperatorAlgebra& alg, const MPoly& f) {
  return ideal_sum(alg.relations(), {f}).is_unit();
}

AlgebraConstants algebra_module_constants(const OperatorAlgebra& alg, const CModule& m, int degree_bound) {
  if (degree_bound < 0) throw Error(ErrorKind::PreconditionFailed, "degree bound must be nonnegative");
  AlgebraConstants out;
  out.degree_bound = degree_bound;
  const RingPtr& ring = alg.ring();
  const std::size_t n = m.rank();
  if (alg.relations().is_unit() || n == 0) return out;

  const auto mons = standard_monomials(alg.relations(), degree_bound);
  out.monomials = mons.size();
  std::vector<MPoly> images;
  images.reserve(mons.size());
  std::vector<RatFunc> dens(m.matrix().data());
  for (const auto& e : mons) {
    images.push_back(extend_action(alg, MPoly::monomial(ring, e, RatFunc(1))));
    for (const auto& t : images.back().terms()) dens.push_back(t.coef);
  }
  const UPoly L = common_denominator(dens);
  const bool diff = alg.setting().is_differential();
  const UPoly D = ansatz_denominator(alg.setting(), L, degree_bound, !diff);
  const int kappa = D.degree() > 0 ? degree_bound : 0;
  const int N = degree_bound + kappa * D.degree();
  const UPoly Dk = D.pow(static_cast<unsigned>(kappa));
  const UPoly Dks = Dk.shifted(1);
  out.denominator = Dk;

  const std::size_t per = static_cast<std::size_t>(N) + 1;
  const std::size_t M = mons.size();
  out.unknowns = n * M * per;
  CoefficientSystem sys(out.unknowns);

  // Every residual is scaled by G so that all coefficients are polynomials.
  const UPoly G = diff ? L * D * Dk : L * Dk * Dks;
  const UPoly t = UPoly::t();
  const UPoly one(Scalar(1));

  auto key_for = [](std::size_t comp, const Exponents& e) {
    CoefficientSystem::Key k;
    k.reserve(e.size() + 2);
    k.push_back(static_cast<std::uint32_t>(comp));
    for (auto x : e) k.push_back(x);
    return k;
  };
  auto poly_of = [](const RatFunc& f) {
    if (!f.is_polynomial()) throw Error(ErrorKind::PreconditionFailed, "internal: denominator not cleared");
    return f.num();
  };

  for (int e = 0; e <= N; ++e) {
    const RatFunc c(t.pow(static_cast<unsigned>(e)), Dk);
    // Diagonal action factor and the plain factor of the coefficient.
    const RatFunc act_c = diff ? c.derivative() : c.shifted(1);
    const RatFunc Gc = RatFunc(G) * c;
    const RatFunc Gact = RatFunc(G) * act_c;
    for (std::size_t mi = 0; mi < M; ++mi) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t u = (j * M + mi) * per + static_cast<std::size_t>(e);
        for (std::size_t i = 0; i < n; ++i) {
          const RatFunc& a = m.matrix()(i, j);
          if (!a.is_zero()) sys.add_upoly(u, key_for(i, mons[mi]), -poly_of(a * Gc));
          if (i != j) continue;
          if (diff) {
            sys.add_upoly(u, key_for(i, mons[mi]), poly_of(Gact));
            for (const auto& term : images[mi].terms()) sys.add_upoly(u, key_for(i, term.exp), poly_of(Gc * term.coef));
          } else {
            for (const auto& term : images[mi].terms())
              sys.add_upoly(u, key_for(i, term.exp), poly_of(Gact * term.coef));
          }
        }
      }
    }
  }

  for (const auto& kv : sys.kernel()) {
    std::vector<MPoly> v;
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Term> terms;
      for (std::size_t mi = 0; mi < M; ++mi) {
        std::vector<Scalar> coeffs(per);
        bool any = false;
        for (std::size_t e = 0; e < per; ++e) {
          coeffs[e] = kv[(j * M + mi) * per + e];
          any = any || !coeffs[e].is_zero();
        }
        if (any) terms.push_back({mons[mi], RatFunc(UPoly(std::move(coeffs)), Dk)});
      }
      v.push_back(MPoly::from_terms(ring, std::move(terms)));
    }
    out.vectors.push_back(std::move(v));
  }
  return out;
}

SolutionRingVerdict verify_solution_ring(const SolutionRing& r, const CModule& m, int degree_bound) {
  SolutionRingVerdict v;
  const auto& alg = r.algebra;
  if (alg.relations().is_unit()) {
    v.method = "zero ring";
    return v;
  }
  if (r.has_fundamental && r.module.rank() == m.rank() && r.module.matrix() == m.matrix()) {
    v.method = "fundamental matrix";
    v.holds = fundamental_equation_holds(r) && unit_determinant_holds(r);
    if (v.holds) v.witness = r.fundamental;
    return v;
  }
  v.method = "bounded search";
  const std::size_t n = m.rank();
  if (n == 0) {
    v.holds = true;
    v.witness = PolyMatrix(0, 0, alg.zero());
    return v;
  }
  const auto sols = algebra_module_constants(alg, m, degree_bound);
  if (sols.vectors.size() < n) return v;
  // Try n-subsets of the solution basis for a matrix with unit determinant.
  std::vector<std::size_t> pick(n);
  for (std::size_t k = 0; k < n; ++k) pick[k] = k;
  const std::size_t total = sols.vectors.size();
  int tries = 0;
  for (;;) {
    PolyMatrix Y(n, n, alg.zero());
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t i = 0; i < n; ++i) Y(i, c) = sols.vectors[pick[c]][i];
    if (is_unit_element(alg, alg.reduce(Y.determinant_expansion()))) {
      v.holds = true;
      v.witness = Y;
      return v;
    }
    if (++tries >= 256) return v;
    std::size_t k = n;
    while (k > 0 && pick[k - 1] == total - n + k - 1) --k;
    if (k == 0) return v;
    ++pick[k - 1];
    for (std::size_t l = k; l < n; ++l) pick[l] = pick[l - 1] + 1;
  }
}

RingConstants ring_constants(const OperatorAlgebra& alg, int degree_bound) {
  RingConstants rc;
  rc.degree_bound = degree_bound;
  const auto sols = algebra_module_constants(alg, unit_object(alg.setting()), degree_bound);
  for (const auto& v : sols.vectors) rc.basis.push_back(v[0]);
  const std::string k = base_constants(alg.setting()).name();
  rc.equals_k = rc.basis.size() == 1 && rc.basis[0].is_constant();
  if (rc.equals_k) {
    rc.description = k;
  } else {
    rc.description = std::to_string(rc.basis.size()) + "-dimensional over " + k;
    if (rc.basis.size() > 1) {
      bool all = true;
      for (const auto& b : rc.basis) all = all && is_unit_element(alg, b);
      rc.units_found = all;
    }
  }
  return rc;
}

std::string to_string(SimplicityStatus s) {
  switch (s) {
    case SimplicityStatus::Refuted:
      return "refuted";
    case SimplicityStatus::PassedBounded:
      return "passed_bounded";
    case SimplicityStatus::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// Deterministic draws from the seeded engine.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

SimplicityVerdict simplicity_check(const OperatorAlgebra& alg, int degree_bound, int samples, std::uint64_t seed,
                                   const std::vector<MPoly>& extra_candidates) {
  SimplicityVerdict v;
  v.degree_bound = degree_bound;
  v.samples = samples;
  v.seed = seed;
  const RingPtr& ring = alg.ring();
  if (alg.relations().is_unit()) {
    v.status = SimplicityStatus::Refuted;
    v.note = "zero ring";
    return v;
  }

  std::size_t inconclusive = 0;
  auto refutes = [&](const MPoly& f) -> bool {
    const MPoly g = alg.reduce(f);
    if (g.is_zero() || g.is_constant()) return false;
    ++v.candidates_tested;
    try {
      IdealGB closure = operator_closure(alg, {g});
      if (closure.is_unit()) return false;
      if (!verify_operator_stable(alg, closure)) return false;
      v.status = SimplicityStatus::Refuted;
      v.witness = g;
      v.witness_ideal = closure.basis();
      return true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Inconclusive) throw;
      ++inconclusive;
      return false;
    }
  };

  // Phase (a): a fixed finite family of low-degree candidates.
  const auto mons = standard_monomials(alg.relations(), degree_bound);
  std::vector<MPoly> linear;
  for (const auto& e : mons)
    if (total_degree(e) == 1) linear.push_back(MPoly::monomial(ring, e, RatFunc(1)));
  // Variables named d (inverse determinants) go last.
  std::stable_sort(linear.begin(), linear.end(), [&](const MPoly& a, const MPoly& b) {
    auto name = [&](const MPoly& p) {
      for (std::size_t k = 0; k < ring->size(); ++k)
        if (p.lead().exp[k]) return ring->variables()[k];
      return std::string();
    };
    auto rank = [&](const MPoly& p) {
      const std::string nm = name(p);
      const std::size_t idx = *ring->index_of(nm);
      return std::make_pair(nm == "d" ? 1 : 0, idx);
    };
    return rank(a) < rank(b);
  });
  std::vector<MPoly> candidates;
  const MPoly one = alg.one();
  auto push_shifts = [&](const MPoly& m) {
    candidates.push_back(m);
    candidates.push_back(m - one);
    candidates.push_back(m + one);
  };
  for (const auto& m : linear) push_shifts(m);
  if (degree_bound >= 2)
    for (const auto& e : mons)
      if (total_degree(e) == 2) push_shifts(MPoly::monomial(ring, e, RatFunc(1)));
  for (std::size_t a = 0; a < linear.size(); ++a)
    for (std::size_t b = a + 1; b < linear.size(); ++b) {
      candidates.push_back(linear[a] - linear[b]);
      candidates.push_back(linear[a] + linear[b]);
    }
  for (const auto& c : extra_candidates) candidates.push_back(c);
  for (const auto& c : candidates)
    if (refutes(c)) return v;

  // Phase (b): pseudorandom elements must generate the unit stable ideal.
  Sampler rng(seed);
  const UPoly t = UPoly::t();
  for (int s = 0; s < samples && !mons.empty(); ++s) {
    MPoly r(ring);
    for (int attempt = 0; attempt < 16 && r.is_zero(); ++attempt) {
      const long terms = rng.between(1, 3);
      for (long k = 0; k < terms; ++k) {
        const auto& e = mons[rng.below(mons.size())];
        UPoly c = UPoly(Scalar(rng.between(-3, 3))) + t * Scalar(rng.between(-1, 1));
        if (c.is_zero()) c = UPoly(Scalar(1));
        r += MPoly::monomial(ring, e, RatFunc(c));
      }
      r = alg.reduce(r);
    }
    if (r.is_zero()) continue;
    try {
      IdealGB closure = operator_closure(alg, {r});
      if (!closure.is_unit()) {
        v.status = SimplicityStatus::Refuted;
        v.witness = r;
        v.witness_ideal = closure.basis();
        v.note = "sampled element generates a proper stable ideal";
        return v;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Inconclusive) throw;
      ++inconclusive;
    }
  }
  if (inconclusive > 0) {
    v.status = SimplicityStatus::Inconclusive;
    v.note = std::to_string(inconclusive) + " closures hit the iteration cap";
  } else {
    v.status = SimplicityStatus::PassedBounded;
    v.note = "bounded evidence: no proper stable ideal among candidates and samples";
  }
  return v;
}

SubalgebraMembership::SubalgebraMembership(const IdealGB& relations, std::vector<MPoly> gens, RingPtr target)
    : source_(relations.ring()) {
  const std::size_t k = gens.size();
  if (!target) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back("y" + std::to_string(i + 1));
    target = PolyRing::make(names);
  }
  if (target->size() != k) throw Error(ErrorKind::VariableSetMismatch, "one target variable per generator");
  target_ = target;
  std::vector<std::string> vars = source_->variables();
  for (std::size_t i = 0; i < k; ++i) {
    PolyRing probe(vars, MonomialOrder::grevlex());
    vars.push_back(fresh_name(probe, "g" + std::to_string(i + 1)));
  }
  big_ = PolyRing::make(vars, MonomialOrder::block(source_->size()));
  std::vector<MPoly> ideal;
  for (const auto& b : relations.basis()) ideal.push_back(b.embed_by_name(big_));
  for (std::size_t i = 0; i < k; ++i)
    ideal.push_back(MPoly::variable(big_, source_->size() + i) - gens[i].embed_by_name(big_));
  gb_ = groebner(big_, std::move(ideal));
}

std::optional<MPoly> SubalgebraMembership::express(const MPoly& f) const {
  const MPoly nf = gb_.normal_form(f.embed_by_name(big_));
  for (std::size_t v = 0; v < source_->size(); ++v)
    if (nf.uses_variable(v)) return std::nullopt;
  std::vector<MPoly> images;
  for (std::size_t v = 0; v < source_->size(); ++v) images.push_back(MPoly(target_));
  for (std::size_t i = 0; i < target_->size(); ++i) images.push_back(MPoly::variable(target_, i));
  return nf.substitute(target_, images);
}

IdealGB SubalgebraMembership::kernel() const {
  std::vector<MPoly> images;
  for (std::size_t v = 0; v < source_->size(); ++v) images.push_back(MPoly(target_));
  for (std::size_t i = 0; i < target_->size(); ++i) images.push_back(MPoly::variable(target_, i));
  std::vector<MPoly> out;
  for (const auto& b : gb_.basis()) {
    bool eliminated = true;
    for (std::size_t v = 0; v < source_->size() && eliminated; ++v) eliminated = !b.uses_variable(v);
    if (eliminated) out.push_back(b.substitute(target_, images));
  }
  return groebner(target_, std::move(out));
}

bool in_subalgebra(const IdealGB& relations, const std::vector<MPoly>& gens, const MPoly& f) {
  return SubalgebraMembership(relations, gens).contains(f);
}

bool in_subalgebra(const OperatorAlgebra& alg, const std::vector<MPoly>& gens, const MPoly& f) {
  return in_subalgebra(alg.relations(), gens, f);
}

AlgebraMorphism check_morphism(const OperatorAlgebra& source, const OperatorAlgebra& target,
                               std::vector<MPoly> images) {
  AlgebraMorphism f;
  if (images.size() != source.ring()->size())
    throw Error(ErrorKind::VariableSetMismatch, "morphism needs one image per source variable");
  for (auto& im : images) im = target.reduce(im);
  f.images = images;
  f.respects_relations = true;
  for (const auto& b : source.relations().basis())
    if (!target.reduce(b.substitute(target.ring(), images)).is_zero()) f.respects_relations = false;
  f.equivariant = true;
  for (std::size_t v = 0; v < images.size(); ++v) {
    const MPoly lhs = extend_action(target, images[v]);
    const MPoly rhs = target.reduce(source.action()[v].substitute(target.ring(), images));
    if (lhs != rhs) f.equivariant = false;
  }
  f.surjective = true;
  const SubalgebraMembership image(target.relations(), images);
  for (std::size_t v = 0; v < target.ring()->size() && f.surjective; ++v)
    if (!image.contains(MPoly::variable(target.ring(), v))) f.surjective = false;
  return f;
}

AlgebraMorphism canonical_morphism(const SolutionRing& u, const SolutionRing& r, int degree_bound,
                                   const std::optional<PolyMatrix>& fundamental) {
  const std::size_t n = u.module.rank();
  PolyMatrix Y;
  std::optional<MPoly> dinv;
  if (fundamental) {
    Y = *fundamental;
  } else if (r.has_fundamental) {
    Y = r.fundamental;
    dinv = r.det_inverse;
  } else {
    auto verdict = verify_solution_ring(r, u.module, degree_bound);
    if (!verdict.holds || !verdict.witness)
      throw Error(ErrorKind::SearchExhausted, "no fundamental matrix found within the degree bound");
    Y = *verdict.witness;
  }
  if (Y.rows() != n || Y.cols() != n) throw Error(ErrorKind::PreconditionFailed, "fundamental matrix has the wrong size");
  if (!dinv) {
    dinv = unit_inverse(r.algebra, n == 0 ? r.algebra.one() : Y.determinant_expansion());
    if (!dinv) throw Error(ErrorKind::PreconditionFailed, "candidate fundamental matrix is not invertible");
  }
  std::vector<MPoly> images{*dinv};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) images.push_back(Y(i, j));
  return check_morphism(u.algebra, r.algebra, std::move(images));
}

bool same_image(const OperatorAlgebra& target, const AlgebraMorphism& f, const AlgebraMorphism& g) {
  const SubalgebraMembership fi(target.relations(), f.images), gi(target.relations(), g.images);
  for (const auto& x : f.images)
    if (!gi.contains(x)) return false;
  for (const auto& x : g.images)
    if (!fi.contains(x)) return false;
  return true;
}

PVReport pv_verify(const SolutionRing& r, const CModule& m, const PVOptions& options) {
  PVReport rep;
  // All four sub-verdicts are computed so that reports show each of them.
  rep.solution_ring = verify_solution_ring(r, m, options.degree_bound);
  rep.simplicity = simplicity_check(r.algebra, options.simplicity_degree, options.samples, options.seed,
                                    options.simplicity_candidates);
  rep.constants = ring_constants(r.algebra, options.degree_bound);

  std::vector<MPoly> gens;
  if (r.has_fundamental) {
    gens = r.fundamental.data();
    gens.push_back(r.det_inverse);
    rep.minimality_method = "generated by the fundamental matrix and its inverse determinant";
  } else if (rep.solution_ring.witness) {
    const auto& Y = *rep.solution_ring.witness;
    gens = Y.data();
    auto dinv = unit_inverse(r.algebra, Y.rows() == 0 ? r.algebra.one() : Y.determinant_expansion());
    if (dinv) gens.push_back(*dinv);
    rep.minimality_method = "generated by the found fundamental matrix and its inverse determinant";
  }
  if (!gens.empty() || r.algebra.ring()->size() == 0) {
    rep.minimal = true;
    const SubalgebraMembership generated(r.algebra.relations(), gens);
    for (std::size_t v = 0; v < r.algebra.ring()->size() && rep.minimal; ++v) {
      const MPoly x = r.algebra.reduce(MPoly::variable(r.algebra.ring(), v));
      bool direct = x.is_constant();
      for (const auto& g : gens) direct = direct || g == x;
      if (!direct && !generated.contains(x)) rep.minimal = false;
    }
  } else {
    rep.minimality_method = "no fundamental matrix";
  }
  return rep;
}

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs_in) {
  std::vector<Rational> c = coeffs_in;
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() <= 1) return roots;
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(Rational(0));
    c.erase(c.begin(), c.begin() + static_cast<long>(low));
  }
  if (c.size() <= 1) return roots;
  mpz_class den = 1;
  for (const auto& q : c) den = lcm(den, mpz_class(q.get_den()));
  std::vector<mpz_class> z;
  for (const auto& q : c) z.push_back(mpz_class(q * den));
  auto divisors = [](mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> out;
    if (v > mpz_class("1000000000000")) throw Error(ErrorKind::Inconclusive, "rational root search: coefficient too large");
    for (mpz_class d = 1; d * d <= v; ++d) {
      if (v % d == 0) {
        out.push_back(d);
        if (d * d != v) out.push_back(v / d);
      }
    }
    return out;
  };
  const auto ps = divisors(z.front());
  const auto qs = divisors(z.back());
  std::set<Rational> found;
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int sign : {1, -1}) {
        Rational r(p * sign, q);
        r.canonicalize();
        Rational acc = 0;
        for (std::size_t k = z.size(); k-- > 0;) acc = acc * r + Rational(z[k]);
        if (acc == 0) found.insert(r);
      }
  for (const auto& r : found) roots.push_back(r);
  std::sort(roots.begin(), roots.end());
  return roots;
}

FieldPtr make_extension(const std::string& generator, const std::string& min_poly) {
  std::vector<Rational> c = parse_rational_upoly(min_poly, generator);
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.size() <= 2) throw Error(ErrorKind::NotAFieldExtension, "minimal polynomial must have degree at least 2");
  if (!rational_roots(c).empty())
    throw Error(ErrorKind::NotAFieldExtension, "minimal polynomial " + min_poly + " has a rational root");
  return std::make_shared<const NumberField>(generator, c);
}

SolutionRing rebase_ring(const SolutionRing& r, const FieldPtr& field) {
  SolutionRing out;
  const auto& alg = r.algebra;
  std::vector<MPoly> rel, action;
  for (const auto& b : alg.relations().basis()) rel.push_back(coerce(b, field));
  for (const auto& a : alg.action()) action.push_back(coerce(a, field));
  out.algebra = OperatorAlgebra(alg.setting().rebased(field), groebner(alg.ring(), rel), std::move(action));
  out.module = rebase_module(r.module, field);
  out.has_fundamental = r.has_fundamental;
  if (r.has_fundamental) {
    out.fundamental = r.fundamental.map([&](const MPoly& f) { return coerce(f, field); });
    out.det_inverse = coerce(r.det_inverse, field);
  }
  return out;
}

std::pair<CModule, SolutionRing> rebase_constants(const CModule& m, const SolutionRing& r, const std::string& generator,
                                                 const std::string& min_poly) {
  FieldPtr field = make_extension(generator, min_poly);
  return {rebase_module(m, field), rebase_ring(r, field)};
}

std::string to_string(MorphismSearch::Outcome o) {
  switch (o) {
    case MorphismSearch::Outcome::Found:
      return "found";
    case MorphismSearch::Outcome::NoneExists:
      return "none";
    case MorphismSearch::Outcome::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

struct PointSearch {
  bool exhaustive = true;
};

// Roots in k of a univariate polynomial with coefficients in k.
std::vector<Scalar> roots_in_k(const std::vector<Scalar>& c, const FieldPtr& field, PointSearch& state) {
  std::vector<Scalar> out;
  if (c.size() == 2) {
    out.push_back(-c[0] / c[1]);
    return out;
  }
  bool rational = true;
  for (const auto& s : c) rational = rational && s.is_rational();
  if (!rational) {
    state.exhaustive = false;
    return out;
  }
  std::vector<Rational> q;
  for (const auto& s : c) q.push_back(s.to_rational());
  for (const auto& r : rational_roots(q)) out.push_back(Scalar(r));
  if (field) state.exhaustive = false;
  return out;
}

// A k-rational point of the ideal generated by `polys` (lex ring over k).
std::optional<std::vector<Scalar>> find_point(const RingPtr& ring, std::vector<MPoly> polys,
                                              std::vector<std::optional<Scalar>> assigned, const FieldPtr& field,
                                              PointSearch& state, int depth = 0) {
  IdealGB G = groebner(ring, std::move(polys));
  if (G.is_unit()) return std::nullopt;
  std::size_t v = ring->size();
  while (v > 0 && assigned[v - 1]) --v;
  if (v == 0) {
    std::vector<Scalar> out;
    for (const auto& a : assigned) out.push_back(*a);
    return out;
  }
  const std::size_t var = v - 1;
  // Elimination ideal in the lowest unassigned variable.
  std::optional<MPoly> uni;
  for (const auto& b : G.basis()) {
    bool only = true;
    for (std::size_t k = 0; k < ring->size() && only; ++k)
      if (k != var && b.uses_variable(k)) only = false;
    if (only && b.uses_variable(var)) uni = b;
  }
  std::vector<Scalar> values;
  if (uni) {
    std::vector<Scalar> coeffs(uni->degree_in(var) + 1, Scalar(0));
    for (const auto& t : uni->terms()) coeffs[t.exp[var]] = t.coef.constant_value();
    values = roots_in_k(coeffs, field, state);
  } else {
    // A free direction: try a few small values.
    state.exhaustive = false;
    for (long x : {1L, 0L, -1L, 2L, -2L}) values.push_back(Scalar(x));
  }
  if (depth > 64) {
    state.exhaustive = false;
    return std::nullopt;
  }
  for (const auto& x : values) {
    std::vector<MPoly> images;
    for (std::size_t k = 0; k < ring->size(); ++k)
      images.push_back(k == var ? MPoly(ring, RatFunc(x)) : MPoly::variable(ring, k));
    std::vector<MPoly> next;
    for (const auto& b : G.basis()) next.push_back(b.substitute(ring, images));
    auto a = assigned;
    a[var] = x;
    if (auto p = find_point(ring, std::move(next), std::move(a), field, state, depth + 1)) return p;
  }
  return std::nullopt;
}

// Points over k = Q(alpha) of a system over k, found as Q-points of the
// system obtained by writing each unknown in the power basis of k.
std::optional<std::vector<Scalar>> restricted_point(const RingPtr& ring, const std::vector<MPoly>& polys,
                                                    const FieldPtr& field, PointSearch& state) {
  const std::size_t d = static_cast<std::size_t>(field->degree());
  const std::size_t nv = ring->size();
  std::vector<std::string> names;
  for (const auto& v : ring->variables())
    for (std::size_t i = 0; i < d; ++i) names.push_back(v + "p" + std::to_string(i));
  names.push_back(field->generator());
  auto wa = PolyRing::make(names, MonomialOrder::lex());
  const std::size_t a = names.size() - 1;
  const MPoly alpha = MPoly::variable(wa, a);
  std::vector<MPoly> images;
  for (std::size_t v = 0; v < nv; ++v) {
    MPoly im(wa);
    for (std::size_t i = 0; i < d; ++i) im += MPoly::variable(wa, v * d + i) * alpha.pow(static_cast<unsigned>(i));
    images.push_back(im);
  }
  std::vector<Term> mterms;
  for (std::size_t j = 0; j < field->min_poly().size(); ++j) {
    Exponents e(names.size(), 0);
    e[a] = static_cast<std::uint32_t>(j);
    mterms.push_back({e, RatFunc(Scalar(field->min_poly()[j]))});
  }
  IdealGB modulus = groebner(wa, {MPoly::from_terms(wa, std::move(mterms))});

  auto w = PolyRing::make(std::vector<std::string>(names.begin(), names.end() - 1), MonomialOrder::lex());
  std::vector<MPoly> rational;
  for (const auto& p : polys) {
    const MPoly sub = p.substitute(wa, images);
    std::vector<Term> expanded;
    for (const auto& t : sub.terms()) {
      const Scalar c = t.coef.constant_value();
      const auto& cs = c.coefficients();
      for (std::size_t j = 0; j < cs.size(); ++j) {
        Exponents e = t.exp;
        e[a] += static_cast<std::uint32_t>(j);
        expanded.push_back({e, RatFunc(Scalar(cs[j]))});
      }
    }
    const MPoly reduced = modulus.normal_form(MPoly::from_terms(wa, std::move(expanded)));
    std::map<std::uint32_t, std::vector<Term>> parts;
    for (const auto& t : reduced.terms())
      parts[t.exp[a]].push_back({Exponents(t.exp.begin(), t.exp.end() - 1), t.coef});
    for (auto& [j, ts] : parts) rational.push_back(MPoly::from_terms(w, std::move(ts)));
  }
  auto q = find_point(w, rational, std::vector<std::optional<Scalar>>(w->size()), nullptr, state);
  if (!q) return std::nullopt;
  std::vector<Scalar> out;
  for (std::size_t v = 0; v < nv; ++v) {
    std::vector<Rational> cs;
    for (std::size_t i = 0; i < d; ++i) cs.push_back((*q)[v * d + i].to_rational());
    out.push_back(Scalar::from_coefficients(field, std::move(cs)));
  }
  return out;
}

}  // namespace

MorphismSearch equivariant_morphisms(const SolutionRing& r1, const SolutionRing& r2) {
  MorphismSearch out;
  if (!r1.has_fundamental || !r2.has_fundamental || r1.module.rank() != r2.module.rank())
    throw Error(ErrorKind::PreconditionFailed, "morphism search needs two quotients of the same universal ring");
  const std::size_t n = r1.module.rank();
  const auto& a2 = r2.algebra;
  const RingPtr& ring2 = a2.ring();

  std::vector<std::string> cvars;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cvars.push_back(entry_name("c", i, j));
  cvars.push_back("e");
  std::vector<std::string> vars = ring2->variables();
  for (const auto& c : cvars) vars.push_back(c);
  auto big = PolyRing::make(vars, MonomialOrder::block(ring2->size()));
  std::vector<MPoly> rel;
  for (const auto& b : a2.relations().basis()) rel.push_back(b.embed_by_name(big));
  IdealGB I = groebner(big, rel);

  PolyMatrix C(n, n, MPoly(big));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) C(i, j) = MPoly::variable(big, ring2->size() + i * n + j);
  const MPoly e = MPoly::variable(big, ring2->size() + n * n);
  const PolyMatrix X2 = r2.fundamental.map([&](const MPoly& f) { return f.embed_by_name(big); });
  const PolyMatrix Y = X2 * C;
  std::vector<MPoly> images{r2.det_inverse.embed_by_name(big) * e};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) images.push_back(Y(i, j));

  // Conditions on (C, e): every relation of R1 maps into the ideal of R2.
  auto qring = PolyRing::make(cvars, MonomialOrder::lex());
  std::vector<MPoly> eqs;
  const std::size_t split = ring2->size();
  std::vector<MPoly> conds;
  for (const auto& b : r1.algebra.relations().basis()) conds.push_back(I.normal_form(b.substitute(big, images)));
  for (const auto& h : conds) {
    std::map<Exponents, std::vector<Term>> groups;
    for (const auto& t : h.terms()) {
      Exponents outer(t.exp.begin(), t.exp.begin() + static_cast<long>(split));
      Exponents inner(t.exp.begin() + static_cast<long>(split), t.exp.end());
      groups[outer].push_back({inner, t.coef});
    }
    for (auto& [outer, terms] : groups) {
      std::vector<RatFunc> cs;
      for (const auto& t : terms) cs.push_back(t.coef);
      const RatFunc L(common_denominator(cs));
      std::map<int, std::vector<Term>> by_power;
      for (const auto& t : terms) {
        const UPoly num = (t.coef * L).num();
        for (int k = 0; k <= num.degree(); ++k)
          if (!num.coefficient(k).is_zero()) by_power[k].push_back({t.exp, RatFunc(num.coefficient(k))});
      }
      for (auto& [k, ts] : by_power) eqs.push_back(MPoly::from_terms(qring, std::move(ts)));
    }
  }
  IdealGB S = groebner(qring, eqs);
  for (const auto& b : S.basis()) out.system.push_back(b.to_string());
  if (S.is_unit()) {
    out.outcome = MorphismSearch::Outcome::NoneExists;
    out.note = "the conditions on C are inconsistent over k";
    return out;
  }
  PointSearch state;
  const FieldPtr field = a2.setting().field();
  auto point = field && field->degree() > 1
                   ? restricted_point(qring, S.basis(), field, state)
                   : find_point(qring, S.basis(), std::vector<std::optional<Scalar>>(cvars.size()), field, state);
  if (!point) {
    out.outcome = state.exhaustive ? MorphismSearch::Outcome::NoneExists : MorphismSearch::Outcome::Inconclusive;
    out.note = state.exhaustive ? "the conditions on C have no point over k"
                                : "no point found; roots outside the rational search were not explored";
    return out;
  }
  std::vector<MPoly> subst;
  for (std::size_t v = 0; v < ring2->size(); ++v) subst.push_back(MPoly::variable(ring2, v));
  for (const auto& x : *point) subst.push_back(MPoly(ring2, RatFunc(x)));
  std::vector<MPoly> final_images;
  for (const auto& im : images) final_images.push_back(im.substitute(ring2, subst));
  out.morphism = check_morphism(r1.algebra, a2, std::move(final_images));

  const RingPtr& ring1 = r1.algebra.ring();
  RatMatrix Cv(n, n, RatFunc(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) Cv(i, j) = RatFunc((*point)[i * n + j]);
  if (auto Ci = Cv.inverse()) {
    const PolyMatrix back = r1.fundamental * lift(*Ci, ring1);
    std::vector<MPoly> inv{r1.det_inverse * (n == 0 ? RatFunc(1) : Cv.determinant())};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv.push_back(back(i, j));
    out.inverse = check_morphism(a2, r1.algebra, std::move(inv));
    out.isomorphism = verify_algebra_isomorphism(r1.algebra, a2, out.morphism->images, out.inverse->images);
  }
  out.outcome = MorphismSearch::Outcome::Found;
  out.note = "point found by exact search";
  return out;
}

bool verify_algebra_isomorphism(const OperatorAlgebra& a, const OperatorAlgebra& b, const std::vector<MPoly>& f,
                                const std::vector<MPoly>& g) {
  const auto fm = check_morphism(a, b, f);
  const auto gm = check_morphism(b, a, g);
  if (!fm.respects_relations || !fm.equivariant || !gm.respects_relations || !gm.equivariant) return false;
  for (std::size_t v = 0; v < a.ring()->size(); ++v)
    if (a.reduce(fm.images[v].substitute(a.ring(), gm.images)) != a.reduce(MPoly::variable(a.ring(), v))) return false;
  for (std::size_t v = 0; v < b.ring()->size(); ++v)
    if (b.reduce(gm.images[v].substitute(b.ring(), fm.images)) != b.reduce(MPoly::variable(b.ring(), v))) return false;
  return true;
}

}  // namespace pv
