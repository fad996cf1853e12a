#include "pv/ansatz.hpp"

namespace pv {

void CoefficientSystem::add(std::size_t unknown, const Key& key, const Scalar& value) {
  if (value.is_zero()) return;
  auto& row = rows_[key];
  auto [it, inserted] = row.try_emplace(unknown, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) row.erase(it);
  }
}

void CoefficientSystem::add_upoly(std::size_t unknown, Key prefix, const UPoly& p) {
  prefix.push_back(0);
  const auto& c = p.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j].is_zero()) continue;
    prefix.back() = static_cast<std::uint32_t>(j);
    add(unknown, prefix, c[j]);
  }
}

std::vector<std::vector<Scalar>> CoefficientSystem::kernel() const {
  SparseEchelon ech(unknowns_);
  for (const auto& [key, row] : rows_) {
    if (row.empty()) continue;
    ech.add(row);
    if (ech.rank() == unknowns_) break;
  }
  return ech.kernel();
}

UPoly ansatz_denominator(const Setting& setting, const UPoly& a, int bound, bool both_directions) {
  if (a.degree() <= 0) return UPoly(Scalar(1));
  if (setting.is_differential()) return squarefree_part(a);
  UPoly prod(Scalar(1));
  const int lo = both_directions ? -bound : 1;
  for (int j = lo; j <= bound; ++j) prod = lcm(prod, a.shifted(-j));
  return squarefree_part(prod);
}

UPoly common_denominator(const std::vector<RatFunc>& values) {
  UPoly l(Scalar(1));
  for (const auto& v : values)
    if (!v.den().is_one()) l = lcm(l, v.den());
  return l;
}

}  // namespace pv
