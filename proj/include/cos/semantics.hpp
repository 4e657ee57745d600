#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cos/rules.hpp"
#include "cos/structure.hpp"

namespace deep {

/// Truth values for atoms. Par is disjunction, Times conjunction.
using Assignment = std::map<std::string, bool>;

class SemanticsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classical truth value of `s` under `v`; throws SemanticsError when an atom
/// of `s` is unassigned. Works on raw terms as well as canonical ones.
bool eval(const Structure& s, const Assignment& v);

inline constexpr std::size_t kMaxTautologyAtoms = 20;

/// Exhaustive truth table; throws SemanticsError above kMaxTautologyAtoms.
bool is_tautology(const Structure& s);

/// An assignment falsifying `s`, if any (same exhaustion bound).
std::optional<Assignment> falsifying_assignment(const Structure& s);

/// premise |= conclusion, by truth table over the atoms of both.
bool entails(const Structure& premise, const Structure& conclusion);

/// The unit an atom-free structure is equal to. Throws SemanticsError if `s`
/// contains a literal.
Structure eval_boolean(const Structure& s);

struct AuditViolation {
  RuleName rule;
  Structure premise;     // raw shape, as enumerated
  Structure conclusion;  // raw shape after the rule fired
};

struct AuditReport {
  std::size_t max_leaves = 0;
  std::size_t shapes = 0;             // raw boolean shapes enumerated
  std::size_t instances = 0;          // rule instances fired on shapes equal to t
  bool shapes_collapse_to_units = true;
  bool atomic_rules_inert = true;     // no ai-down/ai-up/fai-up redex on any shape
  bool kernel_rejects_t_to_f = true;  // validate_step(t, f, r) fails for every rule
  std::vector<AuditViolation> violations;

  bool clean() const {
    return violations.empty() && shapes_collapse_to_units && atomic_rules_inert &&
           kernel_rejects_t_to_f;
  }
};

/// Enumerates every raw boolean shape (binary Par/Times trees over t and f)
/// with 1..max_leaves leaves, fires every rule at every position of every
/// shape equal to t and records any instance whose conclusion equals f.
AuditReport audit_units(std::size_t max_leaves);

}  // namespace deep
