#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pv/linalg.hpp"
#include "pv/setting.hpp"

namespace pv {

// A k-linear map given by the images of basis unknowns, each image being a
// sparse vector of scalars indexed by keys (typically a position followed
// by a power of t). The kernel is computed by exact elimination.
class CoefficientSystem {
 public:
  using Key = std::vector<std::uint32_t>;

  explicit CoefficientSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const noexcept { return unknowns_; }
  std::size_t equations() const noexcept { return rows_.size(); }

  void add(std::size_t unknown, const Key& key, const Scalar& value);
  // Adds p's coefficients under keys prefix + [power of t].
  void add_upoly(std::size_t unknown, Key prefix, const UPoly& p);

  std::vector<std::vector<Scalar>> kernel() const;

 private:
  std::size_t unknowns_;
  std::map<Key, SparseEchelon::Row> rows_;
};

// Denominator allowed for rational solutions of a linear system whose
// coefficients have denominator lcm `a`: every pole of a solution lies at a
// root of the returned squarefree polynomial. Differential: the poles of
// the system. Difference: their shifts by 1..bound (forward chains), or by
// -bound..bound when `both_directions`.
UPoly ansatz_denominator(const Setting& setting, const UPoly& a, int bound, bool both_directions = false);

// Common denominator of a collection of rational functions (monic lcm).
UPoly common_denominator(const std::vector<RatFunc>& values);

}  // namespace pv
