#include "cos/derivation.hpp"

namespace deep {

Derivation::Derivation(Structure premise, std::vector<Step> steps)
    : premise_(normalize(premise)), steps_(std::move(steps)) {
  for (auto& s : steps_) s.result = normalize(s.result);
}

void Derivation::append(RuleName rule, const Structure& result) {
  steps_.push_back({rule, normalize(result)});
}

CheckResult check(const Derivation& d, const StepValidator& validator) {
  for (std::size_t i = 0; i < d.steps().size(); ++i) {
    const auto& step = d.steps()[i];
    auto v = validator(d.structure(i), step.result, step.rule);
    if (!v) return CheckResult({CheckFailureKind::InvalidStep, i, v.message()});
  }
  return {};
}

CheckResult check_proof(const Derivation& d, const StepValidator& validator) {
  if (!d.is_proof()) {
    return CheckResult({CheckFailureKind::PremiseNotTrue, 0,
                        "premise is " + to_string(d.premise()) + ", not t"});
  }
  return check(d, validator);
}

std::vector<StepInstance> witnesses(const Derivation& d) {
  std::vector<StepInstance> out;
  out.reserve(d.steps().size());
  for (std::size_t i = 0; i < d.steps().size(); ++i) {
    const auto& step = d.steps()[i];
    auto v = validate_step(d.structure(i), step.result, step.rule);
    if (!v) {
      throw DerivationError(DerivationError::Kind::InputInvalid, i,
                            "step " + std::to_string(i) + ": " + v.message());
    }
    out.push_back(v.instance());
  }
  return out;
}

Derivation compose(const Derivation& d1, const Derivation& d2) {
  if (d1.conclusion() != d2.premise()) {
    throw DerivationError(DerivationError::Kind::Mismatch, d1.steps().size(),
                          "cannot compose: " + to_string(d1.conclusion()) + " is not " +
                              to_string(d2.premise()));
  }
  Derivation out = d1;
  for (const auto& s : d2.steps()) out.append(s.rule, s.result);
  return out;
}

Derivation lift(const Derivation& d, const Context& c, const StepValidator& validator) {
  Derivation out(c.plug(d.premise()));
  for (std::size_t i = 0; i < d.steps().size(); ++i) {
    const auto& step = d.steps()[i];
    Structure next = c.plug(step.result);
    if (next == out.conclusion()) continue;
    if (!validator(out.conclusion(), next, step.rule)) {
      throw DerivationError(DerivationError::Kind::LiftedStepInvalid, i,
                            "step " + std::to_string(i) + " is invalid inside " + to_string(c));
    }
    out.append(step.rule, next);
  }
  return out;
}

Derivation conjoin(const Derivation& p1, const Derivation& p2, const StepValidator& validator) {
  for (const auto* p : {&p1, &p2}) {
    if (auto r = check_proof(*p, validator); !r) {
      throw DerivationError(DerivationError::Kind::InputInvalid, r.failure().step,
                            std::string(p == &p1 ? "first" : "second") +
                                " proof is invalid: " + r.failure().reason);
    }
  }
  // (t, t) = t: lift the first proof into ({ }, t), then the second into (R, { }).
  const Derivation left = lift(p1, Context::around(Kind::Times, {Structure::t()}), validator);
  const Derivation right = lift(p2, Context::around(Kind::Times, {p1.conclusion()}), validator);
  return compose(left, right);
}

Derivation drop_trivial_steps(const Derivation& d) {
  Derivation out(d.premise());
  for (const auto& s : d.steps()) {
    if (s.result != out.conclusion()) out.append(s.rule, s.result);
  }
  return out;
}

}  // namespace deep
