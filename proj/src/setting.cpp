#include "pv/setting.hpp"

#include "pv/errors.hpp"

namespace pv {

RatFunc Setting::apply(const RatFunc& f) const { return is_differential() ? f.derivative() : f.shifted(1); }

bool Setting::same_as(const Setting& o) const {
  if (kind_ != o.kind_) return false;
  if (!field_ || !o.field_) return !field_ && !o.field_;
  return field_->same_as(*o.field_);
}

RatFunc apply(const Setting& setting, const RatFunc& f) { return setting.apply(f); }

std::string ConstantsField::name() const {
  if (!field) return "Q";
  return "Q(" + field->generator() + ")";
}

ConstantsField base_constants(const Setting& setting) { return {setting.field()}; }

namespace {

UPoly coerce_poly(const UPoly& p, const FieldPtr& field) {
  std::vector<Scalar> c;
  c.reserve(p.coefficients().size());
  for (const auto& s : p.coefficients()) c.push_back(s.in_field(field));
  return UPoly(std::move(c));
}

}  // namespace

RatFunc coerce(const RatFunc& f, const FieldPtr& field) {
  return RatFunc(coerce_poly(f.num(), field), coerce_poly(f.den(), field));
}

MPoly coerce(const MPoly& f, const FieldPtr& field) {
  return f.map_coefficients([&](const RatFunc& c) { return coerce(c, field); });
}

OperatorAlgebra::OperatorAlgebra(Setting setting, IdealGB relations, std::vector<MPoly> action)
    : setting_(std::move(setting)), relations_(std::move(relations)), action_(std::move(action)) {
  if (action_.size() != ring()->size())
    throw Error(ErrorKind::VariableSetMismatch, "operator must give one image per variable");
  for (auto& a : action_) {
    require_same_ring(ring(), a.ring() ? a.ring() : ring(), "operator image over a different ring");
    if (!a.ring()) a = MPoly(ring());
    a = reduce(a);
  }
}

MPoly OperatorAlgebra::act_raw(const MPoly& f) const {
  if (f.is_zero()) return MPoly(ring());
  require_same_ring(ring(), f.ring(), "operator applied over a different ring");
  if (setting_.is_differential()) {
    MPoly out = f.map_coefficients([](const RatFunc& c) { return c.derivative(); });
    for (std::size_t v = 0; v < ring()->size(); ++v) {
      if (!f.uses_variable(v) || action_[v].is_zero()) continue;
      out += f.partial(v) * action_[v];
    }
    return out;
  }
  const MPoly shifted = f.map_coefficients([](const RatFunc& c) { return c.shifted(1); });
  return shifted.substitute(ring(), action_);
}

MPoly extend_action(const OperatorAlgebra& alg, const MPoly& f) { return alg.reduce(alg.act_raw(f)); }

bool verify_operator_stable(const OperatorAlgebra& alg, const IdealGB& ideal) {
  require_same_ring(alg.ring(), ideal.ring(), "ideal over a different ring");
  for (const auto& b : ideal.basis())
    if (!ideal.contains(alg.act_raw(b))) return false;
  return true;
}

IdealGB operator_closure(const OperatorAlgebra& alg, const std::vector<MPoly>& gens, int cap) {
  IdealGB I = ideal_sum(alg.relations(), gens);
  for (int round = 0; round < cap; ++round) {
    if (I.is_unit()) return I;
    std::vector<MPoly> fresh;
    for (const auto& b : I.basis()) {
      MPoly r = I.normal_form(alg.act_raw(b));
      if (!r.is_zero()) fresh.push_back(std::move(r));
    }
    if (fresh.empty()) return I;
    I = ideal_sum(I, fresh);
  }
  throw Error(ErrorKind::Inconclusive, "operator closure did not stabilize within " + std::to_string(cap) + " rounds");
}

OperatorAlgebra quotient_algebra(const OperatorAlgebra& alg, const IdealGB& ideal) {
  return OperatorAlgebra(alg.setting(), ideal, alg.action());
}

}  // namespace pv
