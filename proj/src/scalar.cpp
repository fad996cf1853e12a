#include "pv/scalar.hpp"

#include <utility>

#include "pv/errors.hpp"

namespace pv {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::VariableSetMismatch: return "VariableSetMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::SettingMismatch: return "SettingMismatch";
    case ErrorKind::NotDualizable: return "NotDualizable";
    case ErrorKind::NotCIdeal: return "NotCIdeal";
    case ErrorKind::TrivialQuotient: return "TrivialQuotient";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::NotAFieldExtension: return "NotAFieldExtension";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotTrivializedByR: return "NotTrivializedByR";
    case ErrorKind::NotSubHopf: return "NotSubHopf";
    case ErrorKind::NotNormalHopfIdeal: return "NotNormalHopfIdeal";
    case ErrorKind::StageOrderError: return "StageOrderError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Remainder of a modulo the nonzero polynomial m.
QPoly mod(QPoly a, const QPoly& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const Rational f = a.back() / m.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] -= f * m[i];
    trim(a);
  }
  return a;
}

std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& m) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  QPoly q(a.size() > dm ? a.size() - dm : 0, Rational(0));
  while (a.size() > dm) {
    const Rational f = a.back() / m.back();
    const std::size_t shift = a.size() - 1 - dm;
    q[shift] = f;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] -= f * m[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Inverse of a modulo m via the extended Euclidean algorithm.
QPoly inverse_mod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = a, s0 = {}, s1 = {Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw Error(ErrorKind::DivisionByZero, "element is not invertible modulo the minimal polynomial");
  for (auto& c : s0) c /= r0[0];
  return mod(s0, m);
}

}  // namespace

NumberField::NumberField(std::string generator, std::vector<Rational> min_poly)
    : generator_(std::move(generator)), min_poly_(std::move(min_poly)) {
  trim(min_poly_);
  if (min_poly_.size() < 2) throw Error(ErrorKind::NotAFieldExtension, "minimal polynomial must have positive degree");
  const Rational lead = min_poly_.back();
  for (auto& c : min_poly_) c /= lead;
}

bool NumberField::same_as(const NumberField& other) const {
  return generator_ == other.generator_ && min_poly_ == other.min_poly_;
}

std::string NumberField::min_poly_string() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = min_poly_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    std::string mono = i == 0 ? "" : (i == 1 ? generator_ : generator_ + "^" + std::to_string(i));
    Rational a = abs(c);
    std::string term;
    if (mono.empty()) term = rational_to_string(a);
    else if (a == 1) term = mono;
    else term = rational_to_string(a) + "*" + mono;
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? "-" : "+") + term;
  }
  return out;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Scalar::Scalar(long value) {
  if (value != 0) c_.emplace_back(value);
}

Scalar::Scalar(const Rational& value) {
  if (value != 0) {
    c_.push_back(value);
    c_.back().canonicalize();
  }
}

Scalar Scalar::generator(FieldPtr field) {
  return from_coefficients(std::move(field), {Rational(0), Rational(1)});
}

Scalar Scalar::from_coefficients(FieldPtr field, std::vector<Rational> coeffs) {
  Scalar s;
  s.field_ = std::move(field);
  s.c_ = std::move(coeffs);
  for (auto& c : s.c_) c.canonicalize();
  if (s.field_) s.c_ = mod(s.c_, s.field_->min_poly());
  s.trim();
  if (!s.field_ && s.c_.size() > 1) throw Error(ErrorKind::FieldMismatch, "algebraic coefficients need a field");
  return s;
}

bool Scalar::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational Scalar::to_rational() const {
  if (c_.empty()) return Rational(0);
  if (c_.size() != 1) throw Error(ErrorKind::FieldMismatch, "scalar is not rational");
  return c_[0];
}

void Scalar::trim() { pv::trim(c_); }

void Scalar::adopt_field(const FieldPtr& other) {
  if (!other) return;
  if (!field_) {
    field_ = other;
    return;
  }
  if (field_ != other && !field_->same_as(*other))
    throw Error(ErrorKind::FieldMismatch, "scalars from different constant fields");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  adopt_field(o.field_);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  adopt_field(o.field_);
  if (c_.size() <= 1 && o.c_.size() <= 1) {
    if (c_.empty() || o.c_.empty()) c_.clear();
    else c_[0] *= o.c_[0];
    return *this;
  }
  c_ = mul(c_, o.c_);
  if (field_) c_ = mod(c_, field_->min_poly());
  trim();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero scalar");
  if (c_.size() == 1) {
    Scalar r = *this;
    r.c_[0] = 1 / c_[0];
    return r;
  }
  Scalar r;
  r.field_ = field_;
  r.c_ = inverse_mod(c_, field_->min_poly());
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::is_simple() const {
  int nonzero = 0;
  for (const auto& c : c_) nonzero += c != 0 ? 1 : 0;
  return nonzero <= 1;
}

bool Scalar::looks_negative() const {
  for (const auto& c : c_)
    if (c != 0) return c < 0 && is_simple();
  return false;
}

std::string Scalar::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    std::string mono;
    if (k > 0) mono = k == 1 ? field_->generator() : field_->generator() + "^" + std::to_string(k);
    const Rational a = abs(c);
    std::string term;
    if (mono.empty()) term = rational_to_string(a);
    else if (a == 1) term = mono;
    else term = rational_to_string(a) + "*" + mono;
    if (out.empty()) out = (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? "-" : "+") + term;
  }
  return out;
}

Scalar Scalar::in_field(const FieldPtr& field) const {
  Scalar r = *this;
  if (!field) {
    if (!is_rational()) throw Error(ErrorKind::FieldMismatch, "cannot drop algebraic scalar to Q");
    r.field_ = nullptr;
    return r;
  }
  if (r.field_ && !r.field_->same_as(*field)) throw Error(ErrorKind::FieldMismatch, "coercion between unrelated fields");
  r.field_ = field;
  return r;
}

}  // namespace pv
