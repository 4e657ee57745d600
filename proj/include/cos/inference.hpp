#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cos/context.hpp"
#include "cos/rules.hpp"
#include "cos/structure.hpp"

namespace deep {

/// Instantiation of a rule schema's variables. Which fields are set depends on
/// the rule: `atom` for the atomic rules, `r` for i/c/w, `r`, `u`, `t` for s.
struct Bindings {
  std::optional<std::string> atom;
  std::optional<Structure> r;
  std::optional<Structure> u;
  std::optional<Structure> t;
};

/// One rule instance S{redex} / S{contractum}.
struct StepInstance {
  RuleName rule;
  Context context;
  Structure redex;
  Structure contractum;
  Bindings bindings;

  Structure premise() const { return context.plug(redex); }
  Structure conclusion() const { return context.plug(contractum); }
};

/// The (redex, contractum) pair a schema produces for the given bindings.
/// Throws std::invalid_argument if a required binding is missing.
std::pair<Structure, Structure> instantiate(RuleName rule, const Bindings& b);

enum class StepFailure { NoWitness, ProvisoViolation };

class ValidationResult {
 public:
  ValidationResult(StepInstance instance) : instance_(std::move(instance)) {}
  ValidationResult(StepFailure failure, std::string message)
      : failure_(failure), message_(std::move(message)) {}

  explicit operator bool() const { return instance_.has_value(); }
  const StepInstance& instance() const { return *instance_; }
  StepFailure failure() const { return failure_; }
  const std::string& message() const { return message_; }

 private:
  std::optional<StepInstance> instance_;
  StepFailure failure_ = StepFailure::NoWitness;
  std::string message_;
};

/// Finds a context and schema instantiation realizing premise / conclusion.
/// The witness is the first one in decomposition order, so results are
/// reproducible.
ValidationResult validate_step(const Structure& premise, const Structure& conclusion,
                               RuleName rule);

using StepValidator =
    std::function<ValidationResult(const Structure&, const Structure&, RuleName)>;

/// The kernel's own validator, as a StepValidator.
StepValidator kernel_validator();

class InfinitaryRule : public std::invalid_argument {
 public:
  explicit InfinitaryRule(RuleName r)
      : std::invalid_argument(std::string("rule ") + std::string(rule_name(r)) +
                              " has unbounded premises and is excluded from upward search") {}
};

/// All canonical premises P with validate_step(P, conclusion, rule) succeeding,
/// for the upward-finitary rules ai-down, s, c-down, w-down and fai-up.
/// Throws InfinitaryRule for the others.
std::vector<Structure> premises_of(const Structure& conclusion, RuleName rule);

/// Truth-table check that the rule's schema, read top-down, is an entailment.
bool rule_direction_sound(RuleName rule);

/// A shared-context split of a step: premise = S{premise_filler} and
/// conclusion = S{conclusion_filler}.
struct Decomposition {
  Context context;
  Structure premise_filler;
  Structure conclusion_filler;
};

/// Enumerates shared-context decompositions of (premise, conclusion), root
/// first, until `visit` returns true. Returns whether it was stopped.
bool for_each_decomposition(const Structure& premise, const Structure& conclusion,
                            const std::function<bool(const Decomposition&)>& visit);

/// Matches the fillers of a decomposition against a rule's schema (the fai-up
/// proviso is not checked here).
std::optional<Bindings> match_schema(RuleName rule, const Structure& redex,
                                     const Structure& contractum);

}  // namespace deep
