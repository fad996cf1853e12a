#include "pv/hopf.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pv/errors.hpp"
#include "pv/parse.hpp"

namespace pv {

RingPtr suffixed_ring(const PolyRing& ring, const std::vector<std::string>& suffixes) {
  std::vector<std::string> vars;
  for (const auto& s : suffixes)
    for (const auto& v : ring.variables()) vars.push_back(v + s);
  return PolyRing::make(vars);
}

MPoly into_copy(const MPoly& f, const RingPtr& target, std::size_t copy) {
  const std::size_t m = f.ring()->size();
  std::vector<std::size_t> map(m);
  for (std::size_t i = 0; i < m; ++i) map[i] = copy * m + i;
  return f.embed(target, map);
}

IdealGB copies_of(const IdealGB& ideal, const RingPtr& target, std::size_t count) {
  std::vector<MPoly> gens;
  for (std::size_t c = 0; c < count; ++c)
    for (const auto& b : ideal.basis()) gens.push_back(into_copy(b, target, c));
  return groebner(target, std::move(gens));
}

TensorSquare tensor_square(const OperatorAlgebra& r) {
  auto ring = suffixed_ring(*r.ring(), {"L", "R"});
  std::vector<MPoly> action;
  for (std::size_t c = 0; c < 2; ++c)
    for (const auto& a : r.action()) action.push_back(into_copy(a, ring, c));
  TensorSquare s;
  s.algebra = OperatorAlgebra(r.setting(), copies_of(r.relations(), ring, 2), std::move(action));
  return s;
}

namespace {

struct Fundamental {
  PolyMatrix x;
  MPoly dinv;
};

Fundamental fundamental_of(const SolutionRing& r, const PVReport& verdict) {
  if (r.has_fundamental) return {r.fundamental, r.det_inverse};
  if (!verdict.solution_ring.witness) throw Error(ErrorKind::PreconditionFailed, "no fundamental matrix available");
  Fundamental f{*verdict.solution_ring.witness, MPoly()};
  const MPoly det = f.x.rows() == 0 ? r.algebra.one() : f.x.determinant_expansion();
  auto inv = unit_inverse(r.algebra, det);
  if (!inv) throw Error(ErrorKind::PreconditionFailed, "fundamental matrix is not invertible");
  f.dinv = *inv;
  return f;
}

std::vector<std::string> hopf_generator_names(std::size_t n) {
  std::vector<std::string> names{"w"};
  for (std::size_t k = n * n; k-- > 0;) names.push_back(entry_name("z", k / n, k % n));
  return names;
}

PolyMatrix generator_matrix(const HopfPresentation& h) {
  PolyMatrix z(h.n, h.n, MPoly(h.ring));
  for (std::size_t i = 0; i < h.n; ++i)
    for (std::size_t j = 0; j < h.n; ++j) z(i, j) = h.z(i, j);
  return z;
}

// Substitution of H generators by their images under the map g -> f(g).
MPoly pull(const MPoly& f, const RingPtr& target, const std::vector<MPoly>& images) {
  return f.substitute(target, images);
}

bool all_constant(const MPoly& f) {
  for (const auto& t : f.terms())
    if (!t.coef.is_constant()) return false;
  return true;
}

}  // namespace

std::size_t HopfPresentation::generator_index(const std::string& name) const {
  auto i = ring->index_of(name);
  if (!i) throw Error(ErrorKind::VariableSetMismatch, "no Hopf generator named " + name);
  return *i;
}

MPoly HopfPresentation::coproduct(const MPoly& h) const {
  return square_relations.normal_form(pull(reduce(h), square_ring, comultiplication));
}

Scalar HopfPresentation::counit_of(const MPoly& h) const {
  std::vector<MPoly> images;
  auto empty = PolyRing::make({});
  for (const auto& c : counit) images.push_back(MPoly(empty, RatFunc(c)));
  const MPoly v = h.substitute(empty, images);
  return v.is_zero() ? Scalar(0) : v.constant_term().constant_value();
}

MPoly HopfPresentation::antipode_of(const MPoly& h) const { return reduce(pull(h, ring, antipode)); }

std::vector<std::size_t> HopfPresentation::essential_generators() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < ring->size(); ++v) {
    Exponents e(ring->size(), 0);
    e[v] = 1;
    bool leading = false;
    for (const auto& b : relations.basis()) leading = leading || divides(b.lead().exp, e);
    if (!leading) out.push_back(v);
  }
  return out;
}

HopfPresentation make_hopf(const std::vector<std::string>& generators, const std::vector<std::string>& relations,
                           const std::vector<std::string>& coproducts, const std::vector<std::string>& counits,
                           const std::vector<std::string>& antipodes, const FieldPtr& field) {
  if (coproducts.size() != generators.size() || counits.size() != generators.size() ||
      antipodes.size() != generators.size())
    throw Error(ErrorKind::PreconditionFailed, "one structure-map image per generator");
  HopfPresentation h;
  h.field = field;
  h.ring = PolyRing::make(generators);
  std::vector<MPoly> rel;
  for (const auto& r : relations) rel.push_back(parse_mpoly(r, h.ring, field));
  h.relations = groebner(h.ring, std::move(rel));
  h.square_ring = suffixed_ring(*h.ring, {"L", "R"});
  h.square_relations = copies_of(h.relations, h.square_ring, 2);
  for (const auto& c : coproducts)
    h.comultiplication.push_back(h.square_relations.normal_form(parse_mpoly(c, h.square_ring, field)));
  for (const auto& c : counits) {
    const RatFunc v = parse_ratfunc(c, field);
    if (!v.is_constant()) throw Error(ErrorKind::PreconditionFailed, "counit values must be constants");
    h.counit.push_back(v.is_zero() ? Scalar(0) : v.constant_value());
  }
  for (const auto& a : antipodes) h.antipode.push_back(h.reduce(parse_mpoly(a, h.ring, field)));
  return h;
}

HopfPresentation compute_H(const SolutionRing& r, const PVReport& verdict, int degree_bound) {
  if (!verdict.is_pv()) throw Error(ErrorKind::PreconditionFailed, "the ring has not been verified as a PV ring");
  const Fundamental f = fundamental_of(r, verdict);
  const std::size_t n = f.x.rows();
  const TensorSquare s = tensor_square(r.algebra);
  const auto& sq = s.algebra;

  HopfPresentation h;
  h.n = n;
  h.degree_bound = degree_bound;
  h.field = r.algebra.setting().field();
  h.ring = PolyRing::make(hopf_generator_names(n));
  std::vector<MPoly> z_entries(n * n);
  MPoly w = sq.one();
  if (n > 0) {
    const PolyMatrix xl = f.x.map([&](const MPoly& p) { return s.left(p); });
    const PolyMatrix xr = f.x.map([&](const MPoly& p) { return s.right(p); });
    const MPoly dl = s.left(f.dinv);
    const PolyMatrix z = xl.adjugate() * xr;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) z_entries[i * n + j] = sq.reduce(dl * z(i, j));
    w = sq.reduce(xl.determinant_expansion() * s.right(f.dinv));
  }
  h.in_square.push_back(w);
  for (std::size_t k = n * n; k-- > 0;) h.in_square.push_back(z_entries[k]);
  const bool diff = sq.setting().is_differential();
  for (const auto& c : h.in_square) {
    const MPoly image = extend_action(sq, c);
    if (image != (diff ? sq.zero() : c))
      throw Error(ErrorKind::PreconditionFailed, "internal: an entry of Z is not a constant");
  }

  h.relations = SubalgebraMembership(sq.relations(), h.in_square, h.ring).kernel();
  for (const auto& b : h.relations.basis())
    if (!all_constant(b)) throw Error(ErrorKind::Inconclusive, "relations of H are not defined over k");

  h.square_ring = suffixed_ring(*h.ring, {"L", "R"});
  h.square_relations = copies_of(h.relations, h.square_ring, 2);
  const PolyMatrix zm = generator_matrix(h);
  const PolyMatrix zl = zm.map([&](const MPoly& p) { return into_copy(p, h.square_ring, 0); });
  const PolyMatrix zr = zm.map([&](const MPoly& p) { return into_copy(p, h.square_ring, 1); });
  const PolyMatrix zz = n > 0 ? zl * zr : PolyMatrix();
  const MPoly wv = h.generator("w");
  const PolyMatrix adj = n > 0 ? zm.adjugate() : PolyMatrix();
  for (std::size_t v = 0; v < h.ring->size(); ++v) {
    const std::string& name = h.ring->variables()[v];
    if (name == "w") {
      h.comultiplication.push_back(
          h.square_relations.normal_form(into_copy(wv, h.square_ring, 0) * into_copy(wv, h.square_ring, 1)));
      h.counit.push_back(Scalar(1));
      h.antipode.push_back(h.reduce(n > 0 ? zm.determinant_expansion() : MPoly(h.ring, RatFunc(1))));
      continue;
    }
    const std::size_t k = n * n - v;  // position in row-major order
    const std::size_t i = k / n, j = k % n;
    h.comultiplication.push_back(h.square_relations.normal_form(zz(i, j)));
    h.counit.push_back(Scalar(i == j ? 1 : 0));
    h.antipode.push_back(h.reduce(wv * adj(i, j)));
  }
  return h;
}

bool CheckList::all() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

CheckList verify_hopf_axioms(const HopfPresentation& h) {
  CheckList out;
  const std::size_t m = h.ring->size();
  auto triple = suffixed_ring(*h.ring, {"L", "M", "R"});
  const IdealGB triple_rel = copies_of(h.relations, triple, 3);

  auto shift = [&](const MPoly& f, std::size_t offset) {
    std::vector<std::size_t> map(f.ring()->size());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = offset + i;
    return f.embed(triple, map);
  };
  std::vector<MPoly> left_images, right_images;  // Delta (x) id and id (x) Delta on H (x) H
  for (std::size_t v = 0; v < m; ++v) left_images.push_back(shift(h.comultiplication[v], 0));
  for (std::size_t v = 0; v < m; ++v) left_images.push_back(MPoly::variable(triple, 2 * m + v));
  for (std::size_t v = 0; v < m; ++v) right_images.push_back(MPoly::variable(triple, v));
  for (std::size_t v = 0; v < m; ++v) right_images.push_back(shift(h.comultiplication[v], m));

  // Images of H (x) H -> H for (c (x) id), (id (x) c), (s (x) id), (id (x) s) followed by multiplication.
  std::vector<MPoly> cl, cr, sl, sr;
  for (std::size_t v = 0; v < m; ++v) {
    cl.push_back(MPoly(h.ring, RatFunc(h.counit[v])));
    cr.push_back(MPoly::variable(h.ring, v));
    sl.push_back(h.antipode[v]);
    sr.push_back(MPoly::variable(h.ring, v));
  }
  for (std::size_t v = 0; v < m; ++v) {
    cl.push_back(MPoly::variable(h.ring, v));
    cr.push_back(MPoly(h.ring, RatFunc(h.counit[v])));
    sl.push_back(MPoly::variable(h.ring, v));
    sr.push_back(h.antipode[v]);
  }

  for (std::size_t v = 0; v < m; ++v) {
    const std::string& g = h.ring->variables()[v];
    const MPoly x = MPoly::variable(h.ring, v);
    const MPoly& dx = h.comultiplication[v];
    const MPoly a = triple_rel.normal_form(dx.substitute(triple, left_images));
    const MPoly b = triple_rel.normal_form(dx.substitute(triple, right_images));
    out.add("coassociativity on " + g, a == b);
    out.add("left counit on " + g, h.reduce(dx.substitute(h.ring, cl)) == h.reduce(x));
    out.add("right counit on " + g, h.reduce(dx.substitute(h.ring, cr)) == h.reduce(x));
    const MPoly cx = MPoly(h.ring, RatFunc(h.counit[v]));
    out.add("left antipode on " + g, h.reduce(dx.substitute(h.ring, sl)) == cx);
    out.add("right antipode on " + g, h.reduce(dx.substitute(h.ring, sr)) == cx);
  }
  bool delta_ok = true, counit_ok = true, antipode_ok = true;
  for (const auto& b : h.relations.basis()) {
    delta_ok = delta_ok && h.coproduct(b).is_zero();
    counit_ok = counit_ok && h.counit_of(b).is_zero();
    antipode_ok = antipode_ok && h.antipode_of(b).is_zero();
  }
  out.add("coproduct respects relations", delta_ok);
  out.add("counit respects relations", counit_ok);
  out.add("antipode respects relations", antipode_ok);
  return out;
}

CheckList ring_structure_consistency(const SolutionRing& r, const HopfPresentation& h, const PVReport& verdict) {
  (void)verdict;
  CheckList out;
  if (h.in_square.size() != h.ring->size()) {
    out.add("generators realized in the tensor square", false);
    return out;
  }
  const TensorSquare s = tensor_square(r.algebra);
  const auto& sq = s.algebra;
  const std::size_t m = r.algebra.ring()->size();
  std::vector<MPoly> mult, swap;
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t v = 0; v < m; ++v) {
      mult.push_back(MPoly::variable(r.algebra.ring(), v));
      swap.push_back(MPoly::variable(sq.ring(), (1 - c) * m + v));
    }
  bool counit_ok = true, antipode_ok = true;
  for (std::size_t k = 0; k < h.in_square.size(); ++k) {
    const MPoly prod = r.algebra.reduce(h.in_square[k].substitute(r.algebra.ring(), mult));
    counit_ok = counit_ok && prod == MPoly(r.algebra.ring(), RatFunc(h.counit[k]));
    const MPoly swapped = sq.reduce(h.in_square[k].substitute(sq.ring(), swap));
    antipode_ok = antipode_ok && swapped == sq.reduce(h.antipode[k].substitute(sq.ring(), h.in_square));
  }
  out.add("counit is multiplication of the legs", counit_ok);
  out.add("antipode is the leg swap", antipode_ok);
  return out;
}

TorsorReport torsor_check(const SolutionRing& r, const HopfPresentation& h, const PVReport& verdict) {
  TorsorReport out;
  if (h.in_square.size() != h.ring->size()) {
    out.checks.add("generators realized in the tensor square", false);
    return out;
  }
  const TensorSquare s = tensor_square(r.algebra);
  const auto& sq = s.algebra;
  const CoactionMap delta(r, h, verdict);
  const std::size_t m = r.algebra.ring()->size();

  // r (x) s -> (r (x) 1) delta(s) and its inverse r (x) h -> (r (x) 1) h.
  std::vector<MPoly> forward, backward;
  for (std::size_t v = 0; v < m; ++v) forward.push_back(delta.embed_r(MPoly::variable(r.algebra.ring(), v)));
  for (std::size_t v = 0; v < m; ++v) forward.push_back(delta.apply(MPoly::variable(r.algebra.ring(), v)));
  for (std::size_t v = 0; v < m; ++v) backward.push_back(s.left(MPoly::variable(r.algebra.ring(), v)));
  for (const auto& g : h.in_square) backward.push_back(g);

  bool fwd_rel = true, bwd_rel = true;
  for (const auto& b : sq.relations().basis())
    fwd_rel = fwd_rel && delta.relations().normal_form(b.substitute(delta.ring(), forward)).is_zero();
  for (const auto& b : delta.relations().basis()) bwd_rel = bwd_rel && sq.reduce(b.substitute(sq.ring(), backward)).is_zero();
  out.checks.add("forward map respects relations", fwd_rel);
  out.checks.add("inverse map respects relations", bwd_rel);

  bool left_inverse = true, right_inverse = true;
  for (std::size_t v = 0; v < 2 * m; ++v) {
    const MPoly x = MPoly::variable(sq.ring(), v);
    left_inverse = left_inverse && sq.reduce(forward[v].substitute(sq.ring(), backward)) == sq.reduce(x);
  }
  for (std::size_t v = 0; v < delta.ring()->size(); ++v) {
    const MPoly x = MPoly::variable(delta.ring(), v);
    right_inverse = right_inverse && delta.relations().normal_form(backward[v].substitute(delta.ring(), forward)) ==
                                         delta.relations().normal_form(x);
  }
  out.checks.add("inverse after forward is the identity", left_inverse);
  out.checks.add("forward after inverse is the identity", right_inverse);
  out.holds = out.checks.all();
  return out;
}

CoactionMap::CoactionMap(const SolutionRing& r, const HopfPresentation& h, const PVReport& verdict)
    : r_size_(r.algebra.ring()->size()), h_ring_(h.ring) {
  std::vector<std::string> vars = r.algebra.ring()->variables();
  for (const auto& g : h.ring->variables()) {
    if (r.algebra.ring()->index_of(g)) throw Error(ErrorKind::VariableSetMismatch, "ring and Hopf names clash: " + g);
    vars.push_back(g);
  }
  ring_ = PolyRing::make(vars);
  std::vector<MPoly> rel;
  for (const auto& b : r.algebra.relations().basis()) rel.push_back(embed_r(b));
  for (const auto& b : h.relations.basis()) rel.push_back(embed_h(b));
  relations_ = groebner(ring_, std::move(rel));

  const Fundamental f = fundamental_of(r, verdict);
  const std::size_t n = f.x.rows();
  if (n != h.n) throw Error(ErrorKind::PreconditionFailed, "Hopf presentation and ring have different ranks");
  std::vector<MPoly> gens;  // entries of X Z, then d w
  std::vector<MPoly> values;
  PolyMatrix zm(n, n, MPoly(ring_));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) zm(i, j) = embed_h(h.z(i, j));
  const PolyMatrix xe = f.x.map([&](const MPoly& p) { return embed_r(p); });
  const PolyMatrix xz = n > 0 ? xe * zm : PolyMatrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      gens.push_back(f.x(i, j));
      values.push_back(xz(i, j));
    }
  gens.push_back(f.dinv);
  values.push_back(embed_r(f.dinv) * embed_h(h.generator("w")));

  const SubalgebraMembership generated(r.algebra.relations(), gens);
  for (std::size_t v = 0; v < r_size_; ++v) {
    auto p = generated.express(MPoly::variable(r.algebra.ring(), v));
    if (!p) throw Error(ErrorKind::PreconditionFailed, "ring is not generated by its fundamental matrix");
    images_.push_back(relations_.normal_form(p->substitute(ring_, values)));
  }
}

MPoly CoactionMap::embed_r(const MPoly& f) const {
  std::vector<std::size_t> map(f.ring()->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return f.embed(ring_, map);
}

MPoly CoactionMap::embed_h(const MPoly& f) const {
  std::vector<std::size_t> map(f.ring()->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = r_size_ + i;
  return f.embed(ring_, map);
}

MPoly CoactionMap::apply(const MPoly& f) const {
  return relations_.normal_form(f.substitute(ring_, images_));
}

std::optional<MPoly> CoactionMap::h_part(const MPoly& f) const {
  const MPoly nf = relations_.normal_form(f);
  for (std::size_t v = 0; v < r_size_; ++v)
    if (nf.uses_variable(v)) return std::nullopt;
  if (!all_constant(nf)) return std::nullopt;
  std::vector<MPoly> images(r_size_, MPoly(h_ring_));
  for (std::size_t i = 0; i < h_ring_->size(); ++i) images.push_back(MPoly::variable(h_ring_, i));
  return nf.substitute(h_ring_, images);
}

AlgebraConstants fibre_functor_value(const CModule& n, const SolutionRing& r, int degree_bound) {
  auto sols = algebra_module_constants(r.algebra, n, degree_bound);
  if (sols.vectors.size() != n.rank())
    throw Error(ErrorKind::NotTrivializedByR, "found " + std::to_string(sols.vectors.size()) +
                                                  " solutions for a module of rank " + std::to_string(n.rank()));
  return sols;
}

Coaction coaction_on_basis(const CModule& n, const SolutionRing& r, const HopfPresentation& h, const PVReport& verdict,
                           const std::vector<std::vector<MPoly>>& basis) {
  const std::size_t k = n.rank();
  if (basis.size() != k) throw Error(ErrorKind::NotTrivializedByR, "basis size differs from the rank");
  const auto& alg = r.algebra;
  Coaction out;
  out.basis = basis;
  out.convention = "right coaction: delta(V) = V rho where delta(X) = X Z; Delta(rho) = rho (x) rho, c(rho) = I";
  bool solves = true;
  for (const auto& col : basis) {
    for (std::size_t i = 0; i < k; ++i) {
      MPoly av = alg.zero();
      for (std::size_t j = 0; j < k; ++j) av += col[j] * n.matrix()(i, j);
      solves = solves && extend_action(alg, col[i]) == alg.reduce(av);
    }
  }
  out.axioms.add("basis vectors solve the module equation", solves);
  out.matrix = Matrix<MPoly>(k, k, MPoly(h.ring));
  if (k == 0) return out;

  PolyMatrix v(k, k, alg.zero());
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < k; ++i) v(i, c) = basis[c][i];
  auto dinv = unit_inverse(alg, v.determinant_expansion());
  if (!dinv) throw Error(ErrorKind::NotTrivializedByR, "the solution basis is not invertible over R");
  const CoactionMap delta(r, h, verdict);
  const PolyMatrix vinv = v.adjugate().map([&](const MPoly& p) { return delta.embed_r(alg.reduce(p * *dinv)); });
  const PolyMatrix dv = v.map([&](const MPoly& p) { return delta.apply(p); });
  const PolyMatrix rho = vinv * dv;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto e = delta.h_part(rho(i, j));
      if (!e) throw Error(ErrorKind::PreconditionFailed, "a coaction coefficient does not lie in H");
      out.matrix(i, j) = *e;
    }

  bool coassoc = true, counit = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      MPoly prod(h.square_ring);
      for (std::size_t l = 0; l < k; ++l)
        prod += into_copy(out.matrix(i, l), h.square_ring, 0) * into_copy(out.matrix(l, j), h.square_ring, 1);
      coassoc = coassoc && h.coproduct(out.matrix(i, j)) == h.square_relations.normal_form(prod);
      counit = counit && h.counit_of(out.matrix(i, j)) == Scalar(i == j ? 1 : 0);
    }
  out.axioms.add("coassociativity of the coaction", coassoc);
  out.axioms.add("counit of the coaction", counit);
  return out;
}

Coaction coaction(const CModule& n, const SolutionRing& r, const HopfPresentation& h, const PVReport& verdict,
                  int degree_bound) {
  return coaction_on_basis(n, r, h, verdict, fibre_functor_value(n, r, degree_bound).vectors);
}

namespace {

bool generates(const HopfPresentation& h, const std::vector<MPoly>& elems) {
  const SubalgebraMembership sub(h.relations, elems);
  for (std::size_t v = 0; v < h.ring->size(); ++v)
    if (!sub.contains(MPoly::variable(h.ring, v))) return false;
  return true;
}

MPoly sq_left(const HopfPresentation& h, const MPoly& f) { return into_copy(f, h.square_ring, 0); }
MPoly sq_right(const HopfPresentation& h, const MPoly& f) { return into_copy(f, h.square_ring, 1); }

bool group_like(const HopfPresentation& h, const MPoly& g) {
  return h.counit_of(g) == Scalar(1) && h.coproduct(g) == h.square_relations.normal_form(sq_left(h, g) * sq_right(h, g));
}

bool primitive(const HopfPresentation& h, const MPoly& g) {
  return h.counit_of(g).is_zero() && h.coproduct(g) == h.square_relations.normal_form(sq_left(h, g) + sq_right(h, g));
}

bool rotation_pair(const HopfPresentation& h, const MPoly& a, const MPoly& b) {
  const auto& rel = h.square_relations;
  return h.counit_of(a) == Scalar(1) && h.counit_of(b).is_zero() &&
         h.coproduct(a) == rel.normal_form(sq_left(h, a) * sq_right(h, a) - sq_left(h, b) * sq_right(h, b)) &&
         h.coproduct(b) == rel.normal_form(sq_left(h, a) * sq_right(h, b) + sq_left(h, b) * sq_right(h, a));
}

// A square root of -1 in a quadratic constants field, if there is one.
std::optional<Scalar> sqrt_minus_one(const FieldPtr& field) {
  if (!field || field->degree() != 2) return std::nullopt;
  const Rational p = field->min_poly()[1], q = field->min_poly()[0];
  const Rational disc = p * p - 4 * q;
  // (2 alpha + p)^2 = disc, so s (2 alpha + p) squares to -1 when s^2 = -1/disc.
  const auto roots = rational_roots({disc, Rational(0), Rational(1)});
  if (roots.empty()) return std::nullopt;
  const Scalar alpha = Scalar::generator(field);
  return (alpha * Scalar(2) + Scalar(p)) / Scalar(roots.back());
}

}  // namespace

GroupDescriptor identify_group(const HopfPresentation& h) {
  GroupDescriptor g;
  g.dimension = krull_dimension(h.relations);
  std::vector<MPoly> gens;
  for (std::size_t v = 0; v < h.ring->size(); ++v) {
    const MPoly x = h.reduce(MPoly::variable(h.ring, v));
    if (!x.is_constant()) gens.push_back(x);
  }
  for (const auto& x : gens) {
    if (g.dimension == 1 && primitive(h, x) && generates(h, {x})) {
      g.name = "additive group";
      g.witness = x.to_string() + " is primitive";
      g.identified = true;
      return g;
    }
  }
  std::vector<std::pair<MPoly, std::string>> candidates;
  for (const auto& x : gens) candidates.emplace_back(x, x.to_string());
  std::vector<std::pair<MPoly, MPoly>> rotations;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      for (int sign : {1, -1}) {
        const MPoly b = gens[j] * RatFunc(sign);
        if (rotation_pair(h, gens[i], b)) rotations.emplace_back(gens[i], b);
      }
    }
  if (auto beta = sqrt_minus_one(h.field)) {
    for (const auto& [a, b] : rotations) {
      const MPoly c = h.reduce(a + b * RatFunc(*beta));
      candidates.emplace_back(c, c.to_string());
    }
  }
  for (const auto& [x, label] : candidates) {
    if (!group_like(h, x)) continue;
    if (g.dimension == 1 && generates(h, {x, h.antipode_of(x)})) {
      g.name = "multiplicative group";
      g.witness = label + " is group-like";
      g.identified = true;
      return g;
    }
    if (g.dimension == 0 && generates(h, {x})) {
      auto y = PolyRing::make({"y"});
      const IdealGB ker = SubalgebraMembership(h.relations, {x}, y).kernel();
      if (ker.basis().size() == 1) {
        const MPoly& p = ker.basis()[0];
        const auto deg = p.degree_in(0);
        if (p.size() == 2 && p == MPoly::variable(y, 0).pow(deg) - MPoly(y, RatFunc(1))) {
          g.name = "mu_" + std::to_string(deg);
          g.witness = label + " is group-like of order " + std::to_string(deg);
          g.identified = true;
          return g;
        }
      }
    }
  }
  for (const auto& [a, b] : rotations) {
    if (g.dimension != 1 || !generates(h, {a, b})) continue;
    auto ab = PolyRing::make({"a", "b"});
    const IdealGB ker = SubalgebraMembership(h.relations, {a, b}, ab).kernel();
    if (ker.basis().size() == 1 && ker.basis()[0] == parse_mpoly("a^2+b^2-1", ab)) {
      g.name = "nonsplit one-dimensional torus";
      g.witness = "a = " + a.to_string() + ", b = " + b.to_string();
      g.identified = true;
      return g;
    }
  }
  g.name = "unidentified";
  return g;
}

bool verify_hopf_isomorphism(const HopfPresentation& a, const HopfPresentation& b, const std::vector<MPoly>& f,
                             const std::vector<MPoly>& g) {
  if (f.size() != a.ring->size() || g.size() != b.ring->size()) return false;
  for (const auto& rel : a.relations.basis())
    if (!b.reduce(rel.substitute(b.ring, f)).is_zero()) return false;
  for (const auto& rel : b.relations.basis())
    if (!a.reduce(rel.substitute(a.ring, g)).is_zero()) return false;
  for (std::size_t v = 0; v < a.ring->size(); ++v)
    if (a.reduce(f[v].substitute(a.ring, g)) != a.reduce(MPoly::variable(a.ring, v))) return false;
  for (std::size_t v = 0; v < b.ring->size(); ++v)
    if (b.reduce(g[v].substitute(b.ring, f)) != b.reduce(MPoly::variable(b.ring, v))) return false;
  std::vector<MPoly> ff;
  for (std::size_t c = 0; c < 2; ++c)
    for (const auto& x : f) ff.push_back(into_copy(x, b.square_ring, c));
  for (std::size_t v = 0; v < a.ring->size(); ++v) {
    const MPoly lhs = b.coproduct(f[v]);
    const MPoly rhs = b.square_relations.normal_form(a.comultiplication[v].substitute(b.square_ring, ff));
    if (lhs != rhs) return false;
  }
  return true;
}

IdealGB sub_hopf_to_normal_ideal(const std::vector<MPoly>& generators, const HopfPresentation& h) {
  std::vector<MPoly> legs;
  for (const auto& x : generators) {
    legs.push_back(sq_left(h, h.reduce(x)));
    legs.push_back(sq_right(h, h.reduce(x)));
  }
  const SubalgebraMembership square(h.square_relations, legs);
  const SubalgebraMembership sub(h.relations, generators);
  std::vector<MPoly> aug;
  for (const auto& x : generators) {
    if (!square.contains(h.coproduct(x)))
      throw Error(ErrorKind::NotSubHopf, "coproduct of " + x.to_string() + " leaves the subalgebra");
    if (!sub.contains(h.antipode_of(x)))
      throw Error(ErrorKind::NotSubHopf, "antipode of " + x.to_string() + " leaves the subalgebra");
    aug.push_back(x - MPoly(h.ring, RatFunc(h.counit_of(x))));
  }
  return ideal_sum(h.relations, aug);
}

bool is_normal_hopf_ideal(const IdealGB& ideal, const HopfPresentation& h) {
  if (ideal.is_unit()) return false;
  std::vector<MPoly> both;
  for (std::size_t c = 0; c < 2; ++c)
    for (const auto& b : ideal.basis()) both.push_back(into_copy(b, h.square_ring, c));
  const IdealGB sum = groebner(h.square_ring, std::move(both));
  for (const auto& b : ideal.basis()) {
    if (!h.counit_of(b).is_zero()) return false;
    if (!ideal.normal_form(h.antipode_of(b)).is_zero()) return false;
    if (!sum.normal_form(h.coproduct(b)).is_zero()) return false;
  }
  return true;
}

SubringPresentation subring_presentation(const OperatorAlgebra& r, const std::vector<MPoly>& gens) {
  SubringPresentation out;
  for (const auto& g : gens) out.generators.push_back(r.reduce(g));
  const SubalgebraMembership sub(r.relations(), out.generators);
  std::vector<MPoly> action;
  for (const auto& g : out.generators) {
    auto p = sub.express(extend_action(r, g));
    if (!p) throw Error(ErrorKind::PreconditionFailed, "subalgebra is not operator-stable at " + g.to_string());
    action.push_back(*p);
  }
  out.algebra = OperatorAlgebra(r.setting(), sub.kernel(), std::move(action));
  return out;
}

SubringPresentation invariant_ring(const SolutionRing& r, const HopfPresentation& h, const PVReport& verdict,
                                   const IdealGB& ideal, int degree_bound) {
  if (!is_normal_hopf_ideal(ideal, h)) throw Error(ErrorKind::NotNormalHopfIdeal, "not a Hopf ideal of H");
  const CoactionMap delta(r, h, verdict);
  std::vector<MPoly> gens;
  for (const auto& b : delta.relations().basis()) gens.push_back(b);
  for (const auto& b : ideal.basis()) gens.push_back(delta.embed_h(b));
  const IdealGB modulo = groebner(delta.ring(), std::move(gens));

  const auto& alg = r.algebra;
  const auto mons = standard_monomials(alg.relations(), degree_bound);
  std::vector<MPoly> defects;
  std::map<Exponents, std::size_t> rows;
  for (const auto& e : mons) {
    const MPoly m = MPoly::monomial(alg.ring(), e, RatFunc(1));
    defects.push_back(modulo.normal_form(delta.apply(m) - delta.embed_r(m)));
    for (const auto& t : defects.back().terms()) rows.emplace(t.exp, rows.size());
  }
  Matrix<RatFunc> a(rows.size(), mons.size(), RatFunc(0));
  for (std::size_t c = 0; c < mons.size(); ++c)
    for (const auto& t : defects[c].terms()) a(rows.at(t.exp), c) = t.coef;
  std::vector<MPoly> invariant;
  for (const auto& v : a.kernel()) {
    std::vector<Term> terms;
    for (std::size_t c = 0; c < mons.size(); ++c)
      if (!v[c].is_zero()) terms.push_back({mons[c], v[c]});
    invariant.push_back(MPoly::from_terms(alg.ring(), std::move(terms)));
  }
  std::vector<MPoly> chosen;
  for (const auto& x : invariant) {
    if (x.is_constant()) continue;
    if (in_subalgebra(alg, chosen, x)) continue;
    chosen.push_back(x);
  }
  return subring_presentation(alg, chosen);
}

std::vector<MPoly> sub_hopf_of_subring(const SolutionRing& r, const HopfPresentation& h, const PVReport& verdict,
                                       const std::vector<MPoly>& subring) {
  const CoactionMap delta(r, h, verdict);
  const std::size_t rs = r.algebra.ring()->size();
  std::vector<MPoly> out;
  auto keep = [&](const MPoly& x) {
    const MPoly y = h.reduce(x);
    if (y.is_constant()) return;
    for (const auto& o : out)
      if (o == y) return;
    out.push_back(y);
  };
  for (const auto& g : subring) {
    const MPoly image = delta.apply(g);
    std::map<Exponents, std::vector<Term>> groups;
    for (const auto& t : image.terms()) {
      Exponents outer(t.exp.begin(), t.exp.begin() + static_cast<long>(rs));
      Exponents inner(t.exp.begin() + static_cast<long>(rs), t.exp.end());
      groups[outer].push_back({inner, t.coef});
    }
    for (auto& [outer, terms] : groups) {
      std::vector<RatFunc> cs;
      for (const auto& t : terms) cs.push_back(t.coef);
      UPoly den(Scalar(1));
      for (const auto& c : cs) den = lcm(den, c.den());
      std::map<int, std::vector<Term>> by_power;
      for (const auto& t : terms) {
        const UPoly num = (t.coef * RatFunc(den)).num();
        for (int k = 0; k <= num.degree(); ++k)
          if (!num.coefficient(k).is_zero()) by_power[k].push_back({t.exp, RatFunc(num.coefficient(k))});
      }
      for (auto& [k, ts] : by_power) keep(MPoly::from_terms(h.ring, std::move(ts)));
    }
  }
  const std::size_t direct = out.size();
  for (std::size_t i = 0; i < direct; ++i) keep(h.antipode_of(out[i]));
  return out;
}

namespace {

bool same_subalgebra(const OperatorAlgebra& r, const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
  const SubalgebraMembership in_a(r.relations(), a), in_b(r.relations(), b);
  for (const auto& x : a)
    if (!in_b.contains(x)) return false;
  for (const auto& x : b)
    if (!in_a.contains(x)) return false;
  return true;
}

}  // namespace

CorrespondenceReport correspondence_roundtrip(const SolutionRing& r, const HopfPresentation& h,
                                              const PVReport& verdict, const std::vector<MPoly>& subring,
                                              int degree_bound, const std::optional<CModule>& subring_module,
                                              const PVOptions& options) {
  CorrespondenceReport rep;
  const SubringPresentation t = subring_presentation(r.algebra, subring);
  rep.sub_hopf = sub_hopf_of_subring(r, h, verdict, t.generators);
  rep.ideal = sub_hopf_to_normal_ideal(rep.sub_hopf, h);
  rep.invariants = invariant_ring(r, h, verdict, rep.ideal, degree_bound);
  rep.subring_roundtrip = same_subalgebra(r.algebra, t.generators, rep.invariants.generators);
  const auto again = sub_hopf_of_subring(r, h, verdict, rep.invariants.generators);
  rep.ideal_roundtrip = ideal_equal(sub_hopf_to_normal_ideal(again, h), rep.ideal);
  if (subring_module) rep.subring_pv = pv_verify(foreign_ring(t.algebra, *subring_module), *subring_module, options);
  return rep;
}

}  // namespace pv
