#pragma once

#include <vector>

#include "pv/mpoly.hpp"

namespace pv {

// An ideal of F[vars] together with its reduced Groebner basis for the
// ring's monomial order. Bases are monic and sorted by decreasing leading
// monomial, so equal ideals have identical bases.
class IdealGB {
 public:
  IdealGB() = default;
  explicit IdealGB(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<MPoly>& generators() const noexcept { return generators_; }
  const std::vector<MPoly>& basis() const noexcept { return basis_; }
  bool is_zero() const noexcept { return basis_.empty(); }
  bool is_unit() const;

  MPoly normal_form(const MPoly& f) const;
  bool contains(const MPoly& f) const { return normal_form(f).is_zero(); }

 private:
  friend IdealGB groebner(const RingPtr& ring, std::vector<MPoly> gens);
  RingPtr ring_;
  std::vector<MPoly> generators_;
  std::vector<MPoly> basis_;
};

IdealGB groebner(const RingPtr& ring, std::vector<MPoly> gens);
MPoly normal_form(const MPoly& f, const IdealGB& ideal);
bool ideal_equal(const IdealGB& a, const IdealGB& b);
// Groebner basis of a + <extra>.
IdealGB ideal_sum(const IdealGB& a, const std::vector<MPoly>& extra);

MPoly s_polynomial(const MPoly& f, const MPoly& g);
// Every S-polynomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(const IdealGB& ideal);

// Standard monomials (not divisible by any leading monomial) of total
// degree <= max_degree, in increasing degree then increasing order.
std::vector<Exponents> standard_monomials(const IdealGB& ideal, int max_degree);
// Krull dimension of F[vars]/I from the leading-monomial ideal; -1 for the unit ideal.
int krull_dimension(const IdealGB& ideal);

}  // namespace pv
