#pragma once

#include <string>
#include <vector>

#include "pv/linalg.hpp"
#include "pv/setting.hpp"

namespace pv {

using RatMatrix = Matrix<RatFunc>;

// A module F^n whose constants solve dv = A v (differential) or
// sigma(v) = A v (difference).
class CModule {
 public:
  CModule() = default;
  // Throws NotDualizable for a singular difference matrix.
  CModule(Setting setting, RatMatrix matrix);

  const Setting& setting() const noexcept { return setting_; }
  const RatMatrix& matrix() const noexcept { return a_; }
  std::size_t rank() const noexcept { return a_.rows(); }

 private:
  Setting setting_;
  RatMatrix a_;
};

RatMatrix identity_matrix(std::size_t n);
RatMatrix zero_matrix(std::size_t rows, std::size_t cols);

CModule unit_object(const Setting& setting);
// The trivial module of rank `dim`: zero matrix or identity.
CModule trivial_module(const Setting& setting, std::size_t dim);
CModule tensor(const CModule& m, const CModule& n);
CModule dual(const CModule& m);
CModule direct_sum(const CModule& m, const CModule& n);
// The same module over a larger constants field.
CModule rebase_module(const CModule& m, const FieldPtr& field);

struct ConstantsBasis {
  std::vector<std::vector<RatFunc>> vectors;
  int degree_bound = 0;
  bool complete_up_to_bound = true;
  // Denominator allowed in the search, and the numerator degree searched.
  UPoly denominator;
  int numerator_degree = 0;

  std::size_t dimension() const noexcept { return vectors.size(); }
};

// Solutions with numerator and denominator degrees <= degree_bound (the
// search space contains all of them; anything found is an exact solution).
ConstantsBasis constants(const CModule& m, int degree_bound);
// k-basis of morphisms M -> N as constants of N (x) M^dual; vector index
// i * rank(M) + j is the matrix entry (i, j).
ConstantsBasis hom_space(const CModule& m, const CModule& n, int degree_bound);
RatMatrix as_morphism(const std::vector<RatFunc>& vec, std::size_t rows, std::size_t cols);
bool is_morphism(const CModule& m, const CModule& n, const RatMatrix& f);

bool epsilon_monomorphism_check(const CModule& m, const ConstantsBasis& basis);
// True iff v satisfies the module equation exactly.
bool is_constant_vector(const CModule& m, const std::vector<RatFunc>& v);

std::vector<std::vector<std::string>> matrix_strings(const RatMatrix& a);

}  // namespace pv
