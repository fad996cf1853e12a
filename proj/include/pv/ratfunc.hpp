#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pv/scalar.hpp"

namespace pv {

// Dense univariate polynomial in t over the constants field, 1 first.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Scalar> coeffs);

  static UPoly t();
  static UPoly monomial(const Scalar& c, int degree);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  const std::vector<Scalar>& coefficients() const noexcept { return c_; }
  Scalar coefficient(int i) const;
  const Scalar& lead() const { return c_.back(); }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Scalar& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Scalar& s) { return a *= s; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // Euclidean division by a nonzero divisor: {quotient, remainder}.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  UPoly exact_div(const UPoly& divisor) const;
  UPoly monic() const;
  UPoly derivative() const;
  UPoly shifted(int by = 1) const;  // p(t + by)
  UPoly pow(unsigned e) const;
  Scalar evaluate(const Scalar& at) const;

  bool is_simple() const;  // one term
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

UPoly gcd(UPoly a, UPoly b);  // monic, gcd(0,0) = 0
UPoly lcm(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);

// Element of F = k(t) in canonical form: gcd(num, den) = 1, den monic.
class RatFunc {
 public:
  RatFunc() : den_(Scalar(1)) {}
  RatFunc(long c) : num_(Scalar(c)), den_(Scalar(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Scalar& c) : num_(c), den_(Scalar(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const UPoly& p) : num_(p), den_(Scalar(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(UPoly num, UPoly den);  // normalizes; throws DivisionByZero

  static RatFunc t() { return RatFunc(UPoly::t()); }

  const UPoly& num() const noexcept { return num_; }
  const UPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  Scalar constant_value() const;  // requires is_constant()

  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc derivative() const;
  RatFunc shifted(int by = 1) const;
  RatFunc pow(int e) const;

  // Printing: a "simple" value needs no parentheses as a factor.
  bool is_simple() const;
  bool looks_negative() const;
  std::string to_string() const;

 private:
  UPoly num_;
  UPoly den_;
};

RatFunc ratfunc_normalize(const UPoly& num, const UPoly& den);

}  // namespace pv
