#pragma once

#include <string>
#include <vector>

#include "pv/groebner.hpp"

namespace pv {

enum class SettingKind { Differential, Difference };

// The base field F = k(t) with its operator: the derivation d/dt or the
// shift t -> t+1. `field` is the constants field k (null means Q).
class Setting {
 public:
  explicit Setting(SettingKind kind = SettingKind::Differential, FieldPtr field = nullptr)
      : kind_(kind), field_(std::move(field)) {}

  static Setting differential() { return Setting(SettingKind::Differential); }
  static Setting difference() { return Setting(SettingKind::Difference); }

  SettingKind kind() const noexcept { return kind_; }
  bool is_differential() const noexcept { return kind_ == SettingKind::Differential; }
  const FieldPtr& field() const noexcept { return field_; }
  std::string kind_name() const { return is_differential() ? "differential" : "difference"; }

  RatFunc apply(const RatFunc& f) const;
  Setting rebased(FieldPtr field) const { return Setting(kind_, std::move(field)); }

  bool same_as(const Setting& o) const;

 private:
  SettingKind kind_;
  FieldPtr field_;
};

RatFunc apply(const Setting& setting, const RatFunc& f);

struct ConstantsField {
  FieldPtr field;  // null for Q
  std::string name() const;
};

// The constants k = F^C of the base field. Over k(t) these are exactly k.
ConstantsField base_constants(const Setting& setting);

// Coerce coefficients into the setting's constants field.
RatFunc coerce(const RatFunc& f, const FieldPtr& field);
MPoly coerce(const MPoly& f, const FieldPtr& field);

// A finitely presented F-algebra F[vars]/relations whose operator is fixed
// by the images of the variables (Leibniz or multiplicative extension).
class OperatorAlgebra {
 public:
  OperatorAlgebra() = default;
  OperatorAlgebra(Setting setting, IdealGB relations, std::vector<MPoly> action);

  const Setting& setting() const noexcept { return setting_; }
  const RingPtr& ring() const noexcept { return relations_.ring(); }
  const IdealGB& relations() const noexcept { return relations_; }
  const std::vector<MPoly>& action() const noexcept { return action_; }

  MPoly reduce(const MPoly& f) const { return relations_.normal_form(f); }
  MPoly zero() const { return MPoly(ring()); }
  MPoly one() const { return MPoly(ring(), RatFunc(1)); }
  MPoly var(const std::string& name) const { return MPoly::variable(ring(), name); }

  // Operator on a representative, without reducing.
  MPoly act_raw(const MPoly& f) const;

 private:
  Setting setting_;
  IdealGB relations_;
  std::vector<MPoly> action_;
};

MPoly extend_action(const OperatorAlgebra& alg, const MPoly& f);
bool verify_operator_stable(const OperatorAlgebra& alg, const IdealGB& ideal);

// Smallest operator-stable ideal containing alg's relations and `gens`.
// Throws Inconclusive when `cap` rounds do not stabilize.
IdealGB operator_closure(const OperatorAlgebra& alg, const std::vector<MPoly>& gens, int cap = 64);

// The quotient by a stable ideal, with the same action.
OperatorAlgebra quotient_algebra(const OperatorAlgebra& alg, const IdealGB& ideal);

}  // namespace pv
