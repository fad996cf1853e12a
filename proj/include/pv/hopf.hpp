#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pv/solring.hpp"

namespace pv {

// Copies of a ring's variables with name suffixes, e.g. {"L", "R"}.
RingPtr suffixed_ring(const PolyRing& ring, const std::vector<std::string>& suffixes);
// f in copy `copy` of a suffixed ring built from f's ring.
MPoly into_copy(const MPoly& f, const RingPtr& target, std::size_t copy);
IdealGB copies_of(const IdealGB& ideal, const RingPtr& target, std::size_t count);

// R (x)_F R with left and right copies of each variable.
struct TensorSquare {
  OperatorAlgebra algebra;
  MPoly left(const MPoly& r) const { return into_copy(r, algebra.ring(), 0); }
  MPoly right(const MPoly& r) const { return into_copy(r, algebra.ring(), 1); }
};
TensorSquare tensor_square(const OperatorAlgebra& r);

// H = (R (x) R)^C presented over k. Generators are the entries of
// Z = (X (x) 1)^-1 (1 (x) X) and w = det(Z)^-1, in the order
// w, znn, ..., z11 (so that z11 survives as a standard generator).
struct HopfPresentation {
  std::size_t n = 0;
  RingPtr ring;
  IdealGB relations;
  RingPtr square_ring;  // H (x) H, generators suffixed L and R
  IdealGB square_relations;
  std::vector<MPoly> comultiplication;  // per generator, in square_ring
  std::vector<Scalar> counit;
  std::vector<MPoly> antipode;
  // Generators as constants of R (x)_F R (empty for hand-built presentations).
  std::vector<MPoly> in_square;
  int degree_bound = 0;
  FieldPtr field;  // constants field k, null for Q

  std::size_t generator_index(const std::string& name) const;
  MPoly generator(const std::string& name) const { return MPoly::variable(ring, generator_index(name)); }
  MPoly z(std::size_t i, std::size_t j) const { return generator(entry_name("z", i, j)); }
  MPoly reduce(const MPoly& h) const { return relations.normal_form(h); }
  MPoly coproduct(const MPoly& h) const;
  Scalar counit_of(const MPoly& h) const;
  MPoly antipode_of(const MPoly& h) const;
  // Generators that are not leading terms of the relations.
  std::vector<std::size_t> essential_generators() const;
};

// Hand-built presentation: generator names, relations, and the structure
// maps as strings (coproducts use the L/R suffix convention).
HopfPresentation make_hopf(const std::vector<std::string>& generators, const std::vector<std::string>& relations,
                           const std::vector<std::string>& coproducts, const std::vector<std::string>& counits,
                           const std::vector<std::string>& antipodes, const FieldPtr& field = nullptr);

// Requires a PV verdict; uses R's fundamental matrix or the one found by pv_verify.
HopfPresentation compute_H(const SolutionRing& r, const PVReport& verdict, int degree_bound);

struct CheckList {
  std::vector<std::pair<std::string, bool>> checks;
  void add(std::string name, bool ok) { checks.emplace_back(std::move(name), ok); }
  bool all() const;
};

CheckList verify_hopf_axioms(const HopfPresentation& h);
// c_H is multiplication of the legs and s is the leg swap, on generators.
CheckList ring_structure_consistency(const SolutionRing& r, const HopfPresentation& h, const PVReport& verdict);

// R (x)_k H with the R variables first.
struct TorsorReport {
  bool holds = false;
  CheckList checks;
};
TorsorReport torsor_check(const SolutionRing& r, const HopfPresentation& h, const PVReport& verdict);

// The coaction delta: R -> R (x)_k H, X -> X Z, d -> d w.
class CoactionMap {
 public:
  CoactionMap(const SolutionRing& r, const HopfPresentation& h, const PVReport& verdict);
  const RingPtr& ring() const noexcept { return ring_; }  // R (x)_k H
  const IdealGB& relations() const noexcept { return relations_; }
  MPoly embed_r(const MPoly& f) const;
  MPoly embed_h(const MPoly& f) const;
  MPoly apply(const MPoly& f) const;  // delta(f), reduced
  // An element of R (x) H lying in 1 (x) H, mapped to H.
  std::optional<MPoly> h_part(const MPoly& f) const;

 private:
  RingPtr ring_;
  IdealGB relations_;
  std::size_t r_size_ = 0;
  RingPtr h_ring_;
  std::vector<MPoly> images_;
};

// omega_R(N) = (R (x) N)^C; throws NotTrivializedByR when its dimension is
// not rank(N).
AlgebraConstants fibre_functor_value(const CModule& n, const SolutionRing& r, int degree_bound);

// Right-coaction convention: delta applied to the basis matrix V gives V rho,
// so rho has entries in H with Delta(rho) = rho (x) rho and c(rho) = I.
struct Coaction {
  std::vector<std::vector<MPoly>> basis;  // columns of V, entries in R
  Matrix<MPoly> matrix;                   // over H
  CheckList axioms;
  std::string convention;
};
Coaction coaction(const CModule& n, const SolutionRing& r, const HopfPresentation& h, const PVReport& verdict,
                  int degree_bound);
// Same, on a supplied basis of omega_R(N) (columns of V).
Coaction coaction_on_basis(const CModule& n, const SolutionRing& r, const HopfPresentation& h, const PVReport& verdict,
                           const std::vector<std::vector<MPoly>>& basis);

struct GroupDescriptor {
  std::string name;  // "multiplicative group", "additive group", "mu_n", ...
  int dimension = 0;
  std::string witness;  // the generator(s) the identification rests on
  bool identified = false;
};
GroupDescriptor identify_group(const HopfPresentation& h);

// Mutually inverse algebra maps that also intertwine the coproducts.
bool verify_hopf_isomorphism(const HopfPresentation& a, const HopfPresentation& b, const std::vector<MPoly>& f,
                             const std::vector<MPoly>& g);

// Throws NotSubHopf unless Delta and s preserve the generated subalgebra.
IdealGB sub_hopf_to_normal_ideal(const std::vector<MPoly>& generators, const HopfPresentation& h);
// Hopf ideal test; H is commutative, so every Hopf ideal is normal.
bool is_normal_hopf_ideal(const IdealGB& ideal, const HopfPresentation& h);

struct SubringPresentation {
  std::vector<MPoly> generators;  // in R
  OperatorAlgebra algebra;        // F[y1..yk]/relations with the induced operator
};
// Presentation of the F-subalgebra of R generated by `gens`; requires it to be operator-stable.
SubringPresentation subring_presentation(const OperatorAlgebra& r, const std::vector<MPoly>& gens);
// Elements r of degree <= bound with delta(r) - r (x) 1 in R (x) I.
SubringPresentation invariant_ring(const SolutionRing& r, const HopfPresentation& h, const PVReport& verdict,
                                   const IdealGB& ideal, int degree_bound);
// H' generated by the H-coefficients of delta(T) and their antipodes.
std::vector<MPoly> sub_hopf_of_subring(const SolutionRing& r, const HopfPresentation& h, const PVReport& verdict,
                                       const std::vector<MPoly>& subring);

struct CorrespondenceReport {
  std::vector<MPoly> sub_hopf;
  IdealGB ideal;
  SubringPresentation invariants;
  bool subring_roundtrip = false;  // Phi(Psi(T)) = T
  bool ideal_roundtrip = false;    // Psi(Phi(I)) = I
  std::optional<PVReport> subring_pv;
};
CorrespondenceReport correspondence_roundtrip(const SolutionRing& r, const HopfPresentation& h,
                                              const PVReport& verdict, const std::vector<MPoly>& subring,
                                              int degree_bound, const std::optional<CModule>& subring_module,
                                              const PVOptions& options = {});

}  // namespace pv
