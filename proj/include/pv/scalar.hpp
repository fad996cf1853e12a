#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace pv {

using Rational = mpq_class;

// A simple algebraic extension Q(alpha) = Q[alpha]/(m(alpha)) with m monic
// and irreducible. Irreducibility is the caller's responsibility.
class NumberField {
 public:
  NumberField(std::string generator, std::vector<Rational> min_poly);

  const std::string& generator() const noexcept { return generator_; }
  // Coefficients of the monic minimal polynomial, constant term first.
  const std::vector<Rational>& min_poly() const noexcept { return min_poly_; }
  int degree() const noexcept { return static_cast<int>(min_poly_.size()) - 1; }

  bool same_as(const NumberField& other) const;
  std::string min_poly_string() const;

 private:
  std::string generator_;
  std::vector<Rational> min_poly_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of the constants field k. A null field pointer means k = Q; such
// values embed into every extension, so mixed arithmetic promotes silently.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)

  static Scalar generator(FieldPtr field);
  static Scalar from_coefficients(FieldPtr field, std::vector<Rational> coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  // Coordinates in the power basis 1, alpha, alpha^2, ...; empty for zero.
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const;
  bool is_rational() const noexcept { return c_.size() <= 1; }
  Rational to_rational() const;  // requires is_rational()

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // "Simple" scalars print without parentheses: a rational, or q*alpha^k.
  bool is_simple() const;
  // True when the printed form starts with a minus sign (simple scalars only).
  bool looks_negative() const;
  std::string to_string() const;

  // Same value tagged with `field` (for coercion after a constants rebase).
  Scalar in_field(const FieldPtr& field) const;

 private:
  void adopt_field(const FieldPtr& other);
  void trim();

  FieldPtr field_;
  std::vector<Rational> c_;
};

std::string rational_to_string(const Rational& q);

}  // namespace pv
