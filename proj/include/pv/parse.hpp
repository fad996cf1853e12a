#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pv/mpoly.hpp"

namespace pv {

// Text is read in the shared grammar: integers, t, identifiers, + - * / ^
// and parentheses. `t` and the constants generator (if `field` is set) are
// scalars; every other identifier must be a variable of `ring`. Division is
// only by nonzero elements of F.
MPoly parse_mpoly(std::string_view text, const RingPtr& ring, const FieldPtr& field = nullptr);
RatFunc parse_ratfunc(std::string_view text, const FieldPtr& field = nullptr);

// A univariate polynomial in `var` with rational coefficients, e.g. a
// minimal polynomial "i^2+1". Returns coefficients, constant term first.
std::vector<Rational> parse_rational_upoly(std::string_view text, const std::string& var);

}  // namespace pv
