#include <doctest.h>

#include "fixtures.hpp"
#include "pv/errors.hpp"
#include "pv/hopf.hpp"

using namespace pvtest;

namespace {

struct Computed {
  Example ex;
  PVReport verdict;
  HopfPresentation h;
};

Computed computed(Example ex) {
  Computed c{std::move(ex), {}, {}};
  c.verdict = pv_verify(c.ex.ring, c.ex.module, PVOptions{});
  c.h = compute_H(c.ex.ring, c.verdict, 8);
  return c;
}

std::vector<std::string> basis_strings(const IdealGB& ideal) {
  std::vector<std::string> out;
  for (const auto& b : ideal.basis()) out.push_back(b.to_string());
  return out;
}

// (c (x) id), (id (x) c) and m (s (x) id) applied to arbitrary elements of H (x) H.
MPoly counit_leg(const HopfPresentation& h, const MPoly& x, std::size_t leg) {
  const std::size_t m = h.ring->size();
  std::vector<MPoly> images;
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t v = 0; v < m; ++v)
      images.push_back(c == leg ? MPoly(h.ring, RatFunc(h.counit[v])) : MPoly::variable(h.ring, v));
  return h.reduce(x.substitute(h.ring, images));
}

MPoly antipode_leg(const HopfPresentation& h, const MPoly& x, std::size_t leg) {
  const std::size_t m = h.ring->size();
  std::vector<MPoly> images;
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t v = 0; v < m; ++v) images.push_back(c == leg ? h.antipode[v] : MPoly::variable(h.ring, v));
  return h.reduce(x.substitute(h.ring, images));
}

MPoly random_element(Gen& g, const HopfPresentation& h) {
  std::vector<Term> terms;
  for (int k = 0; k < 3; ++k) {
    Exponents e(h.ring->size(), 0);
    for (auto& x : e) x = static_cast<std::uint32_t>(g.integer(0, 1));
    terms.push_back({e, RatFunc(g.rational())});
  }
  return h.reduce(MPoly::from_terms(h.ring, std::move(terms)));
}

}  // namespace

TEST_CASE("Hopf algebras of the catalog rings") {
  const auto exp = computed(exp_example());
  CHECK(basis_strings(exp.h.relations) == std::vector<std::string>{"w*z11-1"});
  CHECK(exp.h.coproduct(exp.h.z(0, 0)).to_string() == "z11L*z11R");
  CHECK(exp.h.antipode_of(exp.h.z(0, 0)).to_string() == "w");

  const auto log = computed(log_example());
  CHECK(basis_strings(log.h.relations) == std::vector<std::string>{"w-1", "z22-1", "z21", "z11-1"});
  CHECK(log.h.coproduct(log.h.z(0, 1)).to_string() == "z12L+z12R");
  CHECK(log.h.essential_generators() == std::vector<std::size_t>{3});

  for (auto ex : {sqrt_example(), sqrt_neg_example(), sign_example()}) {
    const auto c = computed(ex);
    CHECK(basis_strings(c.h.relations) == std::vector<std::string>{"z11^2-1", "w-z11"});
    CHECK(c.h.coproduct(c.h.z(0, 0)).to_string() == "z11L*z11R");
  }

  const auto circle = computed(circle_example());
  CHECK(basis_strings(circle.h.relations) == std::vector<std::string>{"z12^2+z11^2-1", "w-1", "z22-z11", "z21+z12"});
  const MPoly a = circle.h.z(0, 0), b = circle.h.z(1, 0);
  CHECK(circle.h.coproduct(a) == circle.h.square_relations.normal_form(
                                     into_copy(a, circle.h.square_ring, 0) * into_copy(a, circle.h.square_ring, 1) -
                                     into_copy(b, circle.h.square_ring, 0) * into_copy(b, circle.h.square_ring, 1)));
  CHECK(circle.h.coproduct(b) == circle.h.square_relations.normal_form(
                                     into_copy(a, circle.h.square_ring, 0) * into_copy(b, circle.h.square_ring, 1) +
                                     into_copy(b, circle.h.square_ring, 0) * into_copy(a, circle.h.square_ring, 1)));
}

TEST_CASE("axioms, torsor and ring consistency on every catalog ring") {
  for (auto ex : {exp_example(), log_example(), sqrt_example(), sqrt_neg_example(), circle_example(), sign_example()}) {
    const auto c = computed(ex);
    const auto axioms = verify_hopf_axioms(c.h);
    for (const auto& [name, ok] : axioms.checks) {
      CAPTURE(name);
      CHECK(ok);
    }
    CHECK(ring_structure_consistency(c.ex.ring, c.h, c.verdict).all());
    CHECK(torsor_check(c.ex.ring, c.h, c.verdict).holds);

    const TensorSquare s = tensor_square(c.ex.ring.algebra);
    const bool diff = s.algebra.setting().is_differential();
    for (const auto& z : c.h.in_square) CHECK(extend_action(s.algebra, z) == (diff ? s.algebra.zero() : z));
    CHECK(identify_group(c.h).dimension == krull_dimension(c.h.relations));
  }
}

TEST_CASE("group identification") {
  const std::vector<std::pair<Example, std::string>> cases{
      {exp_example(), "multiplicative group"}, {log_example(), "additive group"},
      {sqrt_example(), "mu_2"},               {sqrt_neg_example(), "mu_2"},
      {sign_example(), "mu_2"},               {circle_example(), "nonsplit one-dimensional torus"}};
  for (const auto& [ex, name] : cases) {
    CAPTURE(name);
    const auto g = identify_group(computed(ex).h);
    CHECK(g.identified);
    CHECK(g.name == name);
  }

  const auto gm = make_hopf({"z", "y"}, {"z*y-1"}, {"zL*zR", "yL*yR"}, {"1", "1"}, {"y", "z"});
  CHECK(identify_group(gm).name == "multiplicative group");
  const auto ga = make_hopf({"z"}, {}, {"zL+zR"}, {"0"}, {"-z"});
  CHECK(identify_group(ga).name == "additive group");
  const auto mu2 = make_hopf({"z"}, {"z^2-1"}, {"zL*zR"}, {"1"}, {"z"});
  CHECK(identify_group(mu2).name == "mu_2");
  const auto mu3 = make_hopf({"z"}, {"z^3-1"}, {"zL*zR"}, {"1"}, {"z^2"});
  CHECK(verify_hopf_axioms(mu3).all());
  CHECK(identify_group(mu3).name == "mu_3");

  const auto product = make_hopf({"z", "y", "u"}, {"z*y-1"}, {"zL*zR", "yL*yR", "uL+uR"}, {"1", "1", "0"},
                                 {"y", "z", "-u"});
  CHECK(verify_hopf_axioms(product).all());
  const auto g = identify_group(product);
  CHECK_FALSE(g.identified);
  CHECK(g.name == "unidentified");
  CHECK(g.dimension == 2);
}

TEST_CASE("a broken presentation fails the counit law") {
  const auto bad = make_hopf({"z"}, {}, {"zL+zR"}, {"1"}, {"-z"});
  const auto checks = verify_hopf_axioms(bad);
  CHECK_FALSE(checks.all());
  bool counit_failed = false;
  for (const auto& [name, ok] : checks.checks)
    if (name == "left counit on z") counit_failed = !ok;
  CHECK(counit_failed);
}

TEST_CASE("structure maps satisfy the axioms on random elements") {
  Gen g(314);
  for (auto ex : {exp_example(), log_example(), circle_example(), sign_example()}) {
    const auto c = computed(ex);
    const auto& h = c.h;
    for (int trial = 0; trial < 8; ++trial) {
      const MPoly f = random_element(g, h);
      const MPoly q = random_element(g, h);
      const MPoly df = h.coproduct(f);
      CHECK(counit_leg(h, df, 0) == f);
      CHECK(counit_leg(h, df, 1) == f);
      const MPoly cf(h.ring, RatFunc(h.counit_of(f)));
      CHECK(antipode_leg(h, df, 0) == cf);
      CHECK(antipode_leg(h, df, 1) == cf);
      CHECK(h.coproduct(f * q) == h.square_relations.normal_form(df * h.coproduct(q)));
      CHECK(h.counit_of(f * q) == h.counit_of(f) * h.counit_of(q));
      CHECK(h.antipode_of(h.antipode_of(f)) == f);
    }
  }
}

TEST_CASE("the circle torus splits over Q(i)") {
  const auto c = circle_example();
  const auto [m2, r2] = rebase_constants(c.module, c.ring, "i", "i^2+1");
  const FieldPtr qi = r2.algebra.setting().field();
  const auto verdict = pv_verify(r2, m2, PVOptions{});
  REQUIRE(verdict.is_pv());
  const auto h = compute_H(r2, verdict, 8);
  CHECK(verify_hopf_axioms(h).all());
  CHECK(identify_group(h).name == "multiplicative group");

  const auto gm = make_hopf({"z", "y"}, {"z*y-1"}, {"zL*zR", "yL*yR"}, {"1", "1"}, {"y", "z"}, qi);
  // z = a + i b with a = z11, b = z21 = -z12.
  const std::vector<MPoly> f{mp("z11-i*z12", h.ring, qi), mp("z11+i*z12", h.ring, qi)};
  const std::vector<MPoly> g{mp("1", gm.ring, qi), mp("(z+y)/2", gm.ring, qi), mp("-i*(z-y)/2", gm.ring, qi),
                             mp("i*(z-y)/2", gm.ring, qi), mp("(z+y)/2", gm.ring, qi)};
  CHECK(verify_hopf_isomorphism(gm, h, f, g));
  const std::vector<MPoly> wrong{mp("z11", h.ring, qi), mp("z11", h.ring, qi)};
  CHECK_FALSE(verify_hopf_isomorphism(gm, h, wrong, g));
}

TEST_CASE("coactions on the exponential ring") {
  const auto c = computed(exp_example());
  const CModule m = c.ex.module;
  const CModule one = unit_object(m.setting());
  const auto& h = c.h;

  const auto rho_one = coaction(one, c.ex.ring, h, c.verdict, 4);
  CHECK(rho_one.axioms.all());
  CHECK(rho_one.matrix(0, 0).to_string() == "1");

  const auto rho = coaction(m, c.ex.ring, h, c.verdict, 4);
  CHECK(rho.axioms.all());
  CHECK(rho.matrix(0, 0) == h.z(0, 0));
  // Specializing z to a unit scalar u gives the automorphism x -> u x, d -> d / u.
  const MPoly image = CoactionMap(c.ex.ring, h, c.verdict).apply(rho.basis[0][0]);
  for (long u : {2L, -3L}) {
    const std::vector<MPoly> point{MPoly(h.ring, RatFunc(Scalar(Rational(1, u)))), MPoly(h.ring, RatFunc(u))};
    CHECK(rho.matrix(0, 0).substitute(h.ring, point) == MPoly(h.ring, RatFunc(u)));
    const auto& alg = c.ex.ring.algebra;
    const auto phi = check_morphism(alg, alg, {alg.var("d") * RatFunc(Scalar(Rational(1, u))), alg.var("x11") * RatFunc(u)});
    CHECK(phi.respects_relations);
    CHECK(phi.equivariant);
    CHECK(image.to_string() == "x11*z11");
  }

  const auto rho2 = coaction(tensor(m, m), c.ex.ring, h, c.verdict, 4);
  CHECK(rho2.axioms.all());
  CHECK(rho2.matrix(0, 0) == h.reduce(rho.matrix(0, 0) * rho.matrix(0, 0)));

  const auto rhod = coaction(dual(m), c.ex.ring, h, c.verdict, 4);
  CHECK(rhod.axioms.all());
  CHECK(rhod.matrix(0, 0) == h.antipode_of(rho.matrix(0, 0)));
}

TEST_CASE("coaction on a tensor basis is the Kronecker product") {
  const auto c = computed(log_example());
  const CModule m = c.ex.module;
  const auto rho = coaction(m, c.ex.ring, c.h, c.verdict, 3);
  CHECK(rho.axioms.all());
  std::vector<std::vector<MPoly>> basis;
  for (const auto& u : rho.basis)
    for (const auto& v : rho.basis) {
      std::vector<MPoly> col;
      for (const auto& x : u)
        for (const auto& y : v) col.push_back(c.ex.ring.algebra.reduce(x * y));
      basis.push_back(std::move(col));
    }
  const auto rho2 = coaction_on_basis(tensor(m, m), c.ex.ring, c.h, c.verdict, basis);
  CHECK(rho2.axioms.all());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(rho2.matrix(i, j) == c.h.reduce(rho.matrix(i / 2, j / 2) * rho.matrix(i % 2, j % 2)));
}

TEST_CASE("fibre functor dimensions") {
  const auto ex = exp_example();
  const CModule m = ex.module;
  const CModule one = unit_object(m.setting());
  auto dim = [&](const CModule& n) { return fibre_functor_value(n, ex.ring, 4).vectors.size(); };
  CHECK(dim(direct_sum(m, one)) == dim(m) + dim(one));
  CHECK(dim(direct_sum(m, dual(m))) == 2);
  CHECK(dim(tensor(m, m)) == dim(m) * dim(m));
  CHECK(dim(tensor(m, dual(m))) == 1);
  CHECK(dim(dual(m)) == m.rank());
  try {
    fibre_functor_value(module_of(Setting::differential(), {{"1/(2*t)"}}), ex.ring, 4);
    FAIL("expected NotTrivializedByR");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTrivializedByR);
  }
}

TEST_CASE("sub-Hopf algebras and Hopf ideals") {
  const auto c = computed(exp_example());
  const auto& h = c.h;
  const MPoly z = h.z(0, 0), w = h.generator("w");

  const IdealGB mu2 = sub_hopf_to_normal_ideal({z * z, w * w}, h);
  CHECK(basis_strings(mu2) == std::vector<std::string>{"z11^2-1", "w-z11"});
  CHECK(is_normal_hopf_ideal(mu2, h));
  CHECK(ideal_equal(sub_hopf_to_normal_ideal({}, h), h.relations));
  CHECK(basis_strings(sub_hopf_to_normal_ideal({z, w}, h)) == std::vector<std::string>{"w-1", "z11-1"});

  try {
    sub_hopf_to_normal_ideal({z}, h);
    FAIL("expected NotSubHopf");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSubHopf);
  }
  const auto log = computed(log_example());
  const MPoly y = log.h.z(0, 1);
  try {
    sub_hopf_to_normal_ideal({y * y + y}, log.h);
    FAIL("expected NotSubHopf");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSubHopf);
  }
  CHECK_FALSE(is_normal_hopf_ideal(ideal_sum(h.relations, {z - MPoly(h.ring, RatFunc(2))}), h));
  // Counit and antipode conditions hold here, the coproduct one does not.
  CHECK_FALSE(is_normal_hopf_ideal(ideal_sum(h.relations, {z + w - MPoly(h.ring, RatFunc(2))}), h));
}

TEST_CASE("invariant rings of Hopf ideals") {
  const auto c = computed(exp_example());
  const auto& h = c.h;
  const auto& alg = c.ex.ring.algebra;
  const MPoly z = h.z(0, 0);

  const auto t = invariant_ring(c.ex.ring, h, c.verdict, ideal_sum(h.relations, {z * z - MPoly(h.ring, RatFunc(1))}), 4);
  CHECK(t.generators == std::vector<MPoly>{mp("x11^2", alg.ring()), mp("d^2", alg.ring())});
  CHECK(t.algebra.relations().basis().size() == 1);

  const auto whole = invariant_ring(c.ex.ring, h, c.verdict, ideal_sum(h.relations, {z - MPoly(h.ring, RatFunc(1))}), 2);
  CHECK(in_subalgebra(alg, whole.generators, alg.var("x11")));
  CHECK(in_subalgebra(alg, whole.generators, alg.var("d")));

  const auto base = invariant_ring(c.ex.ring, h, c.verdict, h.relations, 4);
  CHECK(base.generators.empty());

  try {
    invariant_ring(c.ex.ring, h, c.verdict, ideal_sum(h.relations, {z - MPoly(h.ring, RatFunc(3))}), 2);
    FAIL("expected NotNormalHopfIdeal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNormalHopfIdeal);
  }
}

TEST_CASE("Galois correspondence round trips") {
  const auto c = computed(exp_example());
  const auto& alg = c.ex.ring.algebra;
  const std::vector<MPoly> t{mp("x11^2", alg.ring()), mp("d^2", alg.ring())};
  const auto rep = correspondence_roundtrip(c.ex.ring, c.h, c.verdict, t, 4, module_of(Setting::differential(), {{"2"}}));
  CHECK(rep.sub_hopf == std::vector<MPoly>{c.h.reduce(c.h.z(0, 0).pow(2)), c.h.reduce(c.h.generator("w").pow(2))});
  CHECK(basis_strings(rep.ideal) == std::vector<std::string>{"z11^2-1", "w-z11"});
  CHECK(rep.subring_roundtrip);
  CHECK(rep.ideal_roundtrip);
  REQUIRE(rep.subring_pv);
  CHECK(rep.subring_pv->is_pv());

  const auto base = correspondence_roundtrip(c.ex.ring, c.h, c.verdict, {}, 4, std::nullopt);
  CHECK(base.sub_hopf.empty());
  CHECK(ideal_equal(base.ideal, c.h.relations));
  CHECK(base.subring_roundtrip);
  CHECK(base.ideal_roundtrip);

  const auto whole = correspondence_roundtrip(c.ex.ring, c.h, c.verdict, {alg.var("x11"), alg.var("d")}, 2, std::nullopt);
  CHECK(basis_strings(whole.ideal) == std::vector<std::string>{"w-1", "z11-1"});
  CHECK(whole.subring_roundtrip);
  CHECK(whole.ideal_roundtrip);

  for (auto ex : {sqrt_example(), sign_example()}) {
    const auto s = computed(ex);
    const auto& a = s.ex.ring.algebra;
    const auto full = correspondence_roundtrip(s.ex.ring, s.h, s.verdict, {a.var("x11"), a.var("d")}, 2, std::nullopt);
    CHECK(full.subring_roundtrip);
    CHECK(full.ideal_roundtrip);
    const auto none = correspondence_roundtrip(s.ex.ring, s.h, s.verdict, {}, 2, std::nullopt);
    CHECK(none.subring_roundtrip);
    CHECK(none.ideal_roundtrip);
  }
}
