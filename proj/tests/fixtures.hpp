#pragma once

#include <string>
#include <vector>

#include "pv/solring.hpp"
#include "support.hpp"

namespace pvtest {

inline CModule module_of(const Setting& s, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t n = rows.size();
  RatMatrix a(n, n, RatFunc(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rf(rows[i][j], s.field());
  return CModule(s, std::move(a));
}

struct Example {
  CModule module;
  SolutionRing universal;
  SolutionRing ring;
};

inline Example example(const Setting& s, const std::vector<std::vector<std::string>>& rows,
                       const std::vector<std::string>& ideal) {
  Example ex;
  ex.module = module_of(s, rows);
  ex.universal = universal_solution_ring(ex.module);
  std::vector<MPoly> gens;
  for (const auto& g : ideal) gens.push_back(mp(g, ex.universal.algebra.ring(), s.field()));
  ex.ring = gens.empty() ? ex.universal : quotient_ring(ex.universal, gens);
  return ex;
}

inline Example exp_example() { return example(Setting::differential(), {{"1"}}, {}); }
inline Example log_example() {
  return example(Setting::differential(), {{"0", "1/t"}, {"0", "0"}}, {"x11-1", "x21", "x22-1"});
}
inline Example sqrt_example() { return example(Setting::differential(), {{"1/(2*t)"}}, {"x11^2-t"}); }
inline Example sqrt_neg_example() { return example(Setting::differential(), {{"1/(2*t)"}}, {"x11^2+t"}); }
inline Example circle_example() {
  return example(Setting::differential(), {{"0", "1"}, {"-1", "0"}}, {"x11-x22", "x12+x21", "x11^2+x12^2-1"});
}
inline Example sign_example() { return example(Setting::difference(), {{"-1"}}, {"x11^2-1"}); }

}  // namespace pvtest
