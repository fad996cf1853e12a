// One line per acceptance criterion; exit status 0 iff every line passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "pv/cli.hpp"
#include "pv/errors.hpp"

using namespace pvtest;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool criterion(int number, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double elapsed = seconds_since(start);
  if (o.ok && elapsed >= limit) {
    o.ok = false;
    o.detail = "time limit exceeded";
  }
  std::printf("criterion %2d %s  %s (%.2f s, limit %.0f s)%s%s\n", number, o.ok ? "PASS" : "FAIL", title.c_str(),
              elapsed, limit, o.detail.empty() ? "" : ": ", o.detail.c_str());
  return o.ok;
}

std::vector<std::pair<std::string, Example>> catalog_examples() {
  return {{"exp", exp_example()},           {"log", log_example()},       {"sqrt", sqrt_example()},
          {"sqrt-neg", sqrt_neg_example()}, {"circle", circle_example()}, {"difference-sign", sign_example()}};
}

std::vector<std::string> basis_strings(const IdealGB& ideal) {
  std::vector<std::string> out;
  for (const auto& b : ideal.basis()) out.push_back(b.to_string());
  return out;
}

MPoly sq(const HopfPresentation& h, const MPoly& a, const MPoly& b) {
  return into_copy(a, h.square_ring, 0) * into_copy(b, h.square_ring, 1);
}

}  // namespace

int main() {
  bool all = true;
  const auto examples = catalog_examples();

  all &= criterion(1, "universal ring shape", 1, [&](Outcome& o) {
    for (const auto& spec : catalog()) {
      const auto start = Clock::now();
      const auto report = run_pipeline(spec, {Stage::Universal});
      const auto& u = report.document["stages"]["universal"];
      o.require(u["status"] == "pass", spec.name + ": universal stage failed");
      o.require(u["checks"]["fundamental equation"] == true, spec.name + ": operator(X) != A X");
      o.require(u["checks"]["unit determinant"] == true, spec.name + ": det(X) d != 1");
      const std::size_t n = spec.rank();
      o.require(u["variables"].size() == n * n + 1, spec.name + ": wrong variable count");
      o.require(u["relations"].size() == 1, spec.name + ": more than the determinant relation");
      o.require(seconds_since(start) < 1.0, spec.name + ": over 1 s");
    }
  });

  all &= criterion(2, "adjunction suite on 20 trivial modules", 10, [&](Outcome& o) {
    Gen g(2024);
    for (int trial = 0; trial < 20; ++trial) {
      const Setting s = trial % 2 ? Setting::difference() : Setting::differential();
      const auto dim = static_cast<std::size_t>(g.integer(0, 4));
      const CModule m = trivial_module(s, dim);
      const auto basis = constants(m, 3);
      o.require(basis.dimension() == dim, "constants dimension differs from dim V");
      o.require(oracle::module_constants_dimension(m, 3) == dim, "oracle disagrees");
      o.require(epsilon_monomorphism_check(m, basis), "epsilon check failed");
      const auto wdim = static_cast<std::size_t>(g.integer(0, 3));
      const CModule w = trivial_module(s, wdim);
      const auto hom = hom_space(w, m, 3);
      o.require(hom.dimension() == wdim * dim, "hom dimension differs from the adjunction");
      o.require(epsilon_monomorphism_check(tensor(m, dual(w)), hom), "epsilon check on hom failed");
    }
  });

  std::vector<PVReport> verdicts;
  all &= criterion(3, "PV verdicts for the six catalog rings", 30, [&](Outcome& o) {
    for (const auto& [name, ex] : examples) {
      const auto r = pv_verify(ex.ring, ex.module, PVOptions{});
      verdicts.push_back(r);
      o.require(r.solution_ring.holds, name + ": not a solution ring");
      o.require(r.simplicity.status == SimplicityStatus::PassedBounded && r.simplicity.degree_bound == 3 &&
                    r.simplicity.samples == 25 && r.simplicity.seed == 0,
                name + ": simplicity");
      o.require(r.constants.equals_k, name + ": constants larger than Q");
      o.require(oracle::algebra_constants_dimension(ex.ring.algebra, 8) == 1, name + ": oracle constants");
      o.require(r.minimal, name + ": minimality");
    }
  });

  std::vector<HopfPresentation> hopfs;
  all &= criterion(4, "Hopf algebras, axioms and torsor property", 60, [&](Outcome& o) {
    if (verdicts.size() != examples.size()) throw std::runtime_error("criterion 3 did not complete");
    const std::vector<std::vector<std::string>> goldens{{"w*z11-1"},
                                                        {"w-1", "z22-1", "z21", "z11-1"},
                                                        {"z11^2-1", "w-z11"},
                                                        {"z11^2-1", "w-z11"},
                                                        {"z12^2+z11^2-1", "w-1", "z22-z11", "z21+z12"},
                                                        {"z11^2-1", "w-z11"}};
    for (std::size_t i = 0; i < examples.size(); ++i) {
      const auto& [name, ex] = examples[i];
      const auto h = compute_H(ex.ring, verdicts[i], 8);
      hopfs.push_back(h);
      o.require(basis_strings(h.relations) == goldens[i], name + ": relations differ from the golden");
      o.require(verify_hopf_axioms(h).all(), name + ": Hopf axioms");
      o.require(ring_structure_consistency(ex.ring, h, verdicts[i]).all(), name + ": counit/antipode vs ring");
      o.require(torsor_check(ex.ring, h, verdicts[i]).holds, name + ": torsor");
    }
    const MPoly z = hopfs[0].z(0, 0);
    o.require(hopfs[0].coproduct(z) == hopfs[0].square_relations.normal_form(sq(hopfs[0], z, z)), "exp: z not group-like");
    const MPoly y = hopfs[1].z(0, 1);
    const MPoly one(hopfs[1].ring, RatFunc(1));
    o.require(hopfs[1].coproduct(y) == hopfs[1].square_relations.normal_form(sq(hopfs[1], y, one) + sq(hopfs[1], one, y)),
              "log: z12 not primitive");
    for (std::size_t i : {2u, 3u, 5u}) {
      const MPoly x = hopfs[i].z(0, 0);
      o.require(hopfs[i].coproduct(x) == hopfs[i].square_relations.normal_form(sq(hopfs[i], x, x)), "mu_2 coproduct");
    }
    const auto& c = hopfs[4];
    const MPoly a = c.z(0, 0), b = c.z(1, 0);
    o.require(c.coproduct(a) == c.square_relations.normal_form(sq(c, a, a) - sq(c, b, b)), "circle: coproduct of a");
    o.require(c.coproduct(b) == c.square_relations.normal_form(sq(c, a, b) + sq(c, b, a)), "circle: coproduct of b");
  });

  all &= criterion(5, "group identification and splitting of the torus", 60, [&](Outcome& o) {
    if (hopfs.size() != examples.size()) throw std::runtime_error("criterion 4 did not complete");
    const std::vector<std::string> names{"multiplicative group", "additive group", "mu_2", "mu_2",
                                         "nonsplit one-dimensional torus", "mu_2"};
    for (std::size_t i = 0; i < hopfs.size(); ++i)
      o.require(identify_group(hopfs[i]).name == names[i], examples[i].first + ": identified as " +
                                                                identify_group(hopfs[i]).name);
    const auto& circle = examples[4].second;
    const auto [m2, r2] = rebase_constants(circle.module, circle.ring, "a", "a^2+1");
    const FieldPtr qa = r2.algebra.setting().field();
    const auto verdict = pv_verify(r2, m2, PVOptions{});
    o.require(verdict.is_pv(), "rebased circle is not PV");
    const auto h = compute_H(r2, verdict, 8);
    o.require(identify_group(h).name == "multiplicative group", "rebased circle not split");
    const auto gm = make_hopf({"z", "y"}, {"z*y-1"}, {"zL*zR", "yL*yR"}, {"1", "1"}, {"y", "z"}, qa);
    // z = a + alpha b with a = z11 and b = z21 = -z12.
    const std::vector<MPoly> f{mp("z11-a*z12", h.ring, qa), mp("z11+a*z12", h.ring, qa)};
    const std::vector<MPoly> g{mp("1", gm.ring, qa), mp("(z+y)/2", gm.ring, qa), mp("-a*(z-y)/2", gm.ring, qa),
                               mp("a*(z-y)/2", gm.ring, qa), mp("(z+y)/2", gm.ring, qa)};
    o.require(verify_hopf_isomorphism(gm, h, f, g), "z = a + alpha b is not a Hopf isomorphism");
  });

  all &= criterion(6, "square-root rings are twisted forms", 30, [&](Outcome& o) {
    const auto a = sqrt_example(), b = sqrt_neg_example();
    const auto over_q = equivariant_morphisms(a.ring, b.ring);
    o.require(over_q.outcome == MorphismSearch::Outcome::NoneExists, "a morphism over Q was reported");
    const FieldPtr qi = make_extension("a", "a^2+1");
    const auto a2 = rebase_ring(a.ring, qi), b2 = rebase_ring(b.ring, qi);
    const auto found = equivariant_morphisms(a2, b2);
    o.require(found.outcome == MorphismSearch::Outcome::Found && found.isomorphism, "no isomorphism over Q(i)");
    const std::vector<MPoly> f{mp("a/t*x11", b2.algebra.ring(), qi), mp("a*x11", b2.algebra.ring(), qi)};
    const std::vector<MPoly> g{mp("a/t*x11", a2.algebra.ring(), qi), mp("-a*x11", a2.algebra.ring(), qi)};
    o.require(verify_algebra_isomorphism(a2.algebra, b2.algebra, f, g), "s -> alpha s is not an isomorphism");
  });

  all &= criterion(7, "Galois correspondence on the exponential ring", 60, [&](Outcome& o) {
    const auto& ex = examples[0].second;
    const auto& alg = ex.ring.algebra;
    const auto& h = hopfs.at(0);
    const std::vector<MPoly> t{mp("x11^2", alg.ring()), mp("d^2", alg.ring())};
    const auto rep = correspondence_roundtrip(ex.ring, h, verdicts.at(0), t, 8, module_of(Setting::differential(), {{"2"}}));
    o.require(rep.sub_hopf == std::vector<MPoly>{h.reduce(h.z(0, 0).pow(2)), h.reduce(h.generator("w").pow(2))},
              "sub-Hopf algebra");
    o.require(basis_strings(rep.ideal) == std::vector<std::string>{"z11^2-1", "w-z11"}, "ideal");
    o.require(rep.subring_roundtrip && rep.ideal_roundtrip, "round trips");
    o.require(rep.subring_pv && rep.subring_pv->is_pv(), "T is not PV for A = [2]");
    const auto base = correspondence_roundtrip(ex.ring, h, verdicts.at(0), {}, 8, std::nullopt);
    o.require(base.subring_roundtrip && base.ideal_roundtrip && ideal_equal(base.ideal, h.relations), "T = F");
    const auto whole = correspondence_roundtrip(ex.ring, h, verdicts.at(0), {alg.var("x11"), alg.var("d")}, 8, std::nullopt);
    o.require(whole.subring_roundtrip && whole.ideal_roundtrip &&
                  basis_strings(whole.ideal) == std::vector<std::string>{"w-1", "z11-1"},
              "T = R");
  });

  all &= criterion(8, "coaction axioms on the exponential ring", 30, [&](Outcome& o) {
    const auto& ex = examples[0].second;
    const auto& h = hopfs.at(0);
    const CModule m = ex.module;
    const std::vector<std::pair<std::string, CModule>> ns{
        {"unit", unit_object(m.setting())}, {"M", m}, {"M(x)M", tensor(m, m)}, {"dual", dual(m)}};
    std::vector<Coaction> rhos;
    for (const auto& [name, n] : ns) {
      rhos.push_back(coaction(n, ex.ring, h, verdicts.at(0), 8));
      o.require(rhos.back().axioms.all(), name + ": comodule identities");
    }
    o.require(rhos[2].matrix(0, 0) == h.reduce(rhos[1].matrix(0, 0) * rhos[1].matrix(0, 0)), "rho(M(x)M) != rho(M)^2");
  });

  all &= criterion(9, "negative controls", 30, [&](Outcome& o) {
    const auto bad = example(Setting::differential(), {{"0", "1/t"}, {"0", "0"}}, {"x21", "x22-1"});
    const auto v = simplicity_check(bad.ring.algebra, 3, 25, 0);
    o.require(v.status == SimplicityStatus::Refuted && v.witness, "non-simple log quotient not refuted");
    if (v.witness) {
      const IdealGB closure = groebner(bad.ring.algebra.ring(), v.witness_ideal);
      o.require(!closure.is_unit() && closure.contains(*v.witness) && !bad.ring.algebra.relations().contains(*v.witness) &&
                    verify_operator_stable(bad.ring.algebra, closure),
                "witness ideal is not a proper stable ideal");
    }
    const auto one = example(Setting::differential(), {{"0"}}, {});
    const auto r = pv_verify(one.ring, one.module, PVOptions{});
    o.require(!r.is_pv() && !r.constants.equals_k && r.constants.basis.size() > 1, "U for the unit object passed");
    o.require(oracle::algebra_constants_dimension(one.ring.algebra, 8) == r.constants.basis.size(),
              "oracle disagrees on the constants of U");
  });

  all &= criterion(10, "determinism of catalog reports", 60, [&](Outcome& o) {
    for (const auto& spec : catalog()) {
      const auto a = run_pipeline(spec, default_stages(spec)).text();
      const auto b = run_pipeline(spec, default_stages(spec)).text();
      o.require(a == b, spec.name + ": reports differ");
    }
  });

  std::printf("%s\n", all ? "all criteria pass" : "some criteria fail");
  return all ? 0 : 1;
}
