#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pv/parse.hpp"

namespace pvtest {

using namespace pv;

inline RatFunc rf(const std::string& s, const FieldPtr& field = nullptr) { return parse_ratfunc(s, field); }

inline MPoly mp(const std::string& s, const RingPtr& ring, const FieldPtr& field = nullptr) {
  return parse_mpoly(s, ring, field);
}

// Seeded generator for property tests; the mapping from raw draws is fixed
// here so results do not depend on the standard library's distributions.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
  }

  Scalar rational() {
    const long num = integer(-9, 9);
    const long den = integer(1, 5);
    return Scalar(Rational(num, den));
  }

  UPoly upoly(int max_degree) {
    std::vector<Scalar> c;
    const int deg = static_cast<int>(integer(0, max_degree));
    for (int i = 0; i <= deg; ++i) c.push_back(rational());
    return UPoly(std::move(c));
  }

  RatFunc ratfunc(int max_degree = 2) {
    UPoly den;
    do den = upoly(max_degree);
    while (den.is_zero());
    return RatFunc(upoly(max_degree), den);
  }

  RatFunc nonzero_ratfunc(int max_degree = 2) {
    RatFunc r;
    do r = ratfunc(max_degree);
    while (r.is_zero());
    return r;
  }

  MPoly mpoly(const RingPtr& ring, int max_degree, int terms) {
    std::vector<Term> out;
    for (int k = 0; k < terms; ++k) {
      Exponents e(ring->size(), 0);
      long left = integer(0, max_degree);
      for (std::size_t v = 0; v < e.size() && left > 0; ++v) {
        const long take = integer(0, left);
        e[v] = static_cast<std::uint32_t>(take);
        left -= take;
      }
      out.push_back({std::move(e), ratfunc(1)});
    }
    return MPoly::from_terms(ring, std::move(out));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace pvtest
