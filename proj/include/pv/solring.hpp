#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pv/modcat.hpp"

namespace pv {

using PolyMatrix = Matrix<MPoly>;

// An operator algebra together with a fundamental matrix for `module`.
// Quotients of the universal ring carry the residues of X and d.
struct SolutionRing {
  OperatorAlgebra algebra;
  CModule module;
  PolyMatrix fundamental;
  MPoly det_inverse;
  bool has_fundamental = false;
};

// Variable names of the universal ring: d, x11, ..., xnn.
std::vector<std::string> universal_variables(std::size_t n);
std::string entry_name(const std::string& stem, std::size_t i, std::size_t j);

SolutionRing universal_solution_ring(const CModule& m);
// Throws NotCIdeal if the ideal is not stable, TrivialQuotient if it is the unit ideal.
SolutionRing quotient_ring(const SolutionRing& u, const std::vector<MPoly>& gens);
// An algebra given without a fundamental matrix (parsed from a presentation).
SolutionRing foreign_ring(const OperatorAlgebra& alg, const CModule& m);

// Identity checks on a fundamental matrix: operator(X) = A X and det(X) d = 1.
bool fundamental_equation_holds(const SolutionRing& r);
bool unit_determinant_holds(const SolutionRing& r);

std::optional<MPoly> unit_inverse(const OperatorAlgebra& alg, const MPoly& f);
bool is_unit_element(const OperatorAlgebra& alg, const MPoly& f);

// Elements of alg^n solving the module equation: entries are F-combinations
// of standard monomials of degree <= bound whose coefficients have numerator
// and denominator degree <= bound. A k-basis is returned.
struct AlgebraConstants {
  std::vector<std::vector<MPoly>> vectors;
  int degree_bound = 0;
  std::size_t monomials = 0;
  std::size_t unknowns = 0;
  UPoly denominator;
};
AlgebraConstants algebra_module_constants(const OperatorAlgebra& alg, const CModule& m, int degree_bound);

struct SolutionRingVerdict {
  bool holds = false;
  std::string method;  // "fundamental matrix" or "bounded search"
  std::optional<PolyMatrix> witness;
};
SolutionRingVerdict verify_solution_ring(const SolutionRing& r, const CModule& m, int degree_bound);

struct RingConstants {
  std::vector<MPoly> basis;
  int degree_bound = 0;
  bool equals_k = false;
  // For several constants: does every nonzero basis element invert in R?
  std::optional<bool> units_found;
  std::string description;
};
RingConstants ring_constants(const OperatorAlgebra& alg, int degree_bound);

enum class SimplicityStatus { Refuted, PassedBounded, Inconclusive };
std::string to_string(SimplicityStatus s);

struct SimplicityVerdict {
  SimplicityStatus status = SimplicityStatus::PassedBounded;
  std::optional<MPoly> witness;
  std::vector<MPoly> witness_ideal;  // Groebner basis of the stable ideal it generates
  int degree_bound = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::size_t candidates_tested = 0;
  std::string note;
};
SimplicityVerdict simplicity_check(const OperatorAlgebra& alg, int degree_bound, int samples, std::uint64_t seed,
                                   const std::vector<MPoly>& extra_candidates = {});

struct PVReport {
  SolutionRingVerdict solution_ring;
  SimplicityVerdict simplicity;
  RingConstants constants;
  bool minimal = false;
  std::string minimality_method;
  bool is_pv() const {
    return solution_ring.holds && simplicity.status == SimplicityStatus::PassedBounded && constants.equals_k && minimal;
  }
};
struct PVOptions {
  int degree_bound = 8;           // constants search
  int simplicity_degree = 3;      // simplicity refutation and sampling
  int samples = 25;
  std::uint64_t seed = 0;
  std::vector<MPoly> simplicity_candidates;
};
PVReport pv_verify(const SolutionRing& r, const CModule& m, const PVOptions& options);

// The F-subalgebra of F[vars]/relations generated by `gens`, by elimination:
// target variable i stands for gens[i].
class SubalgebraMembership {
 public:
  SubalgebraMembership(const IdealGB& relations, std::vector<MPoly> gens, RingPtr target = nullptr);

  const RingPtr& target() const noexcept { return target_; }
  bool contains(const MPoly& f) const { return express(f).has_value(); }
  // A polynomial P in the target ring with P(gens) = f, if f is in the subalgebra.
  std::optional<MPoly> express(const MPoly& f) const;
  // Relations among the generators, as an ideal of the target ring.
  IdealGB kernel() const;

 private:
  RingPtr source_, big_, target_;
  IdealGB gb_;
};

// Membership of f in the F-subalgebra of alg generated by `gens`.
bool in_subalgebra(const OperatorAlgebra& alg, const std::vector<MPoly>& gens, const MPoly& f);
bool in_subalgebra(const IdealGB& relations, const std::vector<MPoly>& gens, const MPoly& f);

struct AlgebraMorphism {
  std::vector<MPoly> images;  // one per source variable, in the target ring
  bool respects_relations = false;
  bool equivariant = false;
  bool surjective = false;
};
AlgebraMorphism check_morphism(const OperatorAlgebra& source, const OperatorAlgebra& target, std::vector<MPoly> images);
// U -> R sending X to a fundamental matrix of R (R's own, or `fundamental`
// if supplied, or one found by bounded search) and d to its inverse determinant.
AlgebraMorphism canonical_morphism(const SolutionRing& u, const SolutionRing& r, int degree_bound,
                                   const std::optional<PolyMatrix>& fundamental = std::nullopt);

// Image subalgebras of two morphisms into the same ring coincide.
bool same_image(const OperatorAlgebra& target, const AlgebraMorphism& f, const AlgebraMorphism& g);

// Parses a minimal polynomial in `generator`; rejects degree <= 1 and
// polynomials with a rational root.
FieldPtr make_extension(const std::string& generator, const std::string& min_poly);
SolutionRing rebase_ring(const SolutionRing& r, const FieldPtr& field);
std::pair<CModule, SolutionRing> rebase_constants(const CModule& m, const SolutionRing& r, const std::string& generator,
                                                 const std::string& min_poly);

// Equivariant morphisms between two quotients of the universal ring for the
// same module. Such a morphism sends X to X2 C with C in GL_n(k), so the
// search is over C; it is exhaustive when R2 has constants k.
struct MorphismSearch {
  enum class Outcome { Found, NoneExists, Inconclusive } outcome = Outcome::Inconclusive;
  std::optional<AlgebraMorphism> morphism;
  // X2 -> X1 C^-1 and d2 -> d1 det(C), and whether the two are mutually inverse.
  std::optional<AlgebraMorphism> inverse;
  bool isomorphism = false;
  std::vector<std::string> system;  // Groebner basis of the conditions on C
  std::string note;
};
MorphismSearch equivariant_morphisms(const SolutionRing& r1, const SolutionRing& r2);
std::string to_string(MorphismSearch::Outcome o);

// f and g are mutually inverse equivariant algebra maps.
bool verify_algebra_isomorphism(const OperatorAlgebra& a, const OperatorAlgebra& b, const std::vector<MPoly>& f,
                                const std::vector<MPoly>& g);

// Rational roots of a univariate polynomial (coefficients constant first).
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

}  // namespace pv
