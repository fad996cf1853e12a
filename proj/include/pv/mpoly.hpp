#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pv/ratfunc.hpp"

namespace pv {

using Exponents = std::vector<std::uint32_t>;

enum class OrderKind { GrevLex, Lex, Block };

// Block: variables [0, split) form an elimination block dominating the rest;
// each block is graded reverse lexicographic internally.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  std::size_t split = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder block(std::size_t split) { return {OrderKind::Block, split}; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Variables of a multivariate polynomial ring over F together with the
// monomial order. Rings are compared structurally.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> vars, MonomialOrder order);
  static RingPtr make(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t size() const noexcept { return vars_.size(); }
  const MonomialOrder& order() const noexcept { return order_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  // -1, 0, 1 by the monomial order.
  int compare(const Exponents& a, const Exponents& b) const;
  bool same_as(const PolyRing& other) const { return vars_ == other.vars_ && order_ == other.order_; }

 private:
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

struct Term {
  Exponents exp;
  RatFunc coef;
};

std::uint32_t total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);  // a | b
Exponents lcm(const Exponents& a, const Exponents& b);
Exponents quotient(const Exponents& b, const Exponents& a);  // b / a, assumes a | b

// Multivariate polynomial with coefficients in F; terms sorted strictly
// decreasing in the ring's monomial order, no zero coefficients.
class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}
  MPoly(RingPtr ring, const RatFunc& constant);

  static MPoly variable(const RingPtr& ring, std::size_t index);
  static MPoly variable(const RingPtr& ring, const std::string& name);
  static MPoly monomial(const RingPtr& ring, Exponents exp, RatFunc coef);
  static MPoly from_terms(const RingPtr& ring, std::vector<Term> terms);  // any order, merges
  // Terms already strictly decreasing with nonzero coefficients.
  static MPoly from_sorted_terms(const RingPtr& ring, std::vector<Term> terms);

  // Hooks used by generic matrix code.
  static MPoly zero_like(const MPoly& x) { return MPoly(x.ring_); }
  static MPoly one_like(const MPoly& x) { return MPoly(x.ring_, RatFunc(1)); }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  bool is_constant() const;
  std::optional<RatFunc> as_constant() const;
  RatFunc constant_term() const;
  RatFunc coefficient(const Exponents& e) const;
  int total_degree() const;  // -1 for zero
  std::uint32_t degree_in(std::size_t var) const;
  bool uses_variable(std::size_t var) const;
  std::vector<bool> support() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const RatFunc& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const RatFunc& c) { return a *= c; }
  friend MPoly operator*(const RatFunc& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  Term take_lead();
  MPoly mul_term(const Exponents& e, const RatFunc& c) const;
  // this - c * x^e * g, the reduction step.
  void sub_mul_term(const RatFunc& c, const Exponents& e, const MPoly& g);
  MPoly pow(unsigned e) const;
  MPoly monic() const;
  MPoly partial(std::size_t var) const;
  MPoly map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const;

  // Ring homomorphism into `target`: variable i goes to images[i];
  // coefficients are carried over unchanged.
  MPoly substitute(const RingPtr& target, std::span<const MPoly> images) const;
  // Renaming embedding: variable i becomes target variable var_map[i].
  MPoly embed(const RingPtr& target, std::span<const std::size_t> var_map) const;
  // Same polynomial in a ring that contains all of this ring's variable names.
  MPoly embed_by_name(const RingPtr& target) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const PolyRing& ring, const Exponents& e);

}  // namespace pv
