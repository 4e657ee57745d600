#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cos/context.hpp"
#include "cos/inference.hpp"
#include "cos/rules.hpp"
#include "cos/structure.hpp"

namespace deep {

struct Step {
  RuleName rule;
  Structure result;

  friend bool operator==(const Step&, const Step&) = default;
};

/// A premise and an ordered, top-down list of steps. All structures are kept
/// canonical. A proof is a derivation whose premise is t.
class Derivation {
 public:
  /// The empty proof of t.
  Derivation() = default;
  explicit Derivation(Structure premise, std::vector<Step> steps = {});

  const Structure& premise() const { return premise_; }
  const std::vector<Step>& steps() const { return steps_; }
  const Structure& conclusion() const { return steps_.empty() ? premise_ : steps_.back().result; }
  bool empty() const { return steps_.empty(); }
  bool is_proof() const { return premise_.is_true(); }

  /// structure(0) is the premise, structure(i + 1) the result of step i.
  const Structure& structure(std::size_t i) const {
    return i == 0 ? premise_ : steps_[i - 1].result;
  }

  void append(RuleName rule, const Structure& result);

  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  Structure premise_ = Structure::t();
  std::vector<Step> steps_;
};

enum class CheckFailureKind { InvalidStep, PremiseNotTrue };

struct CheckFailure {
  CheckFailureKind kind;
  std::size_t step;  // index into steps(); 0 for PremiseNotTrue
  std::string reason;
};

class CheckResult {
 public:
  CheckResult() = default;
  explicit CheckResult(CheckFailure failure) : failure_(std::move(failure)) {}

  bool ok() const { return !failure_; }
  explicit operator bool() const { return ok(); }
  const CheckFailure& failure() const { return *failure_; }

 private:
  std::optional<CheckFailure> failure_;
};

/// ok iff every step validates; otherwise the first bad step.
CheckResult check(const Derivation& d, const StepValidator& validator = kernel_validator());

/// check() plus premise = t.
CheckResult check_proof(const Derivation& d, const StepValidator& validator = kernel_validator());

/// Step witnesses, in order. Throws DerivationError(InputInvalid) on the first
/// step that does not validate.
std::vector<StepInstance> witnesses(const Derivation& d);

class DerivationError : public std::runtime_error {
 public:
  enum class Kind { Mismatch, LiftedStepInvalid, InputInvalid };

  DerivationError(Kind kind, std::size_t step, const std::string& message)
      : std::runtime_error(message), kind_(kind), step_(step) {}

  Kind kind() const { return kind_; }
  std::size_t step() const { return step_; }

 private:
  Kind kind_;
  std::size_t step_;
};

/// d1 followed by d2. Throws DerivationError(Mismatch) unless
/// conclusion(d1) = premise(d2).
Derivation compose(const Derivation& d1, const Derivation& d2);

/// Plugs every structure of d into c. Steps that become trivial are dropped;
/// the rest are revalidated with `validator`.
Derivation lift(const Derivation& d, const Context& c,
                const StepValidator& validator = kernel_validator());

/// Proof of (R, U) from proofs of R and U.
Derivation conjoin(const Derivation& p1, const Derivation& p2,
                   const StepValidator& validator = kernel_validator());

/// Drops steps whose result equals the structure before them.
Derivation drop_trivial_steps(const Derivation& d);

}  // namespace deep
