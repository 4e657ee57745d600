#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cos/derivation.hpp"
#include "cos/rules.hpp"

namespace deep {

inline constexpr std::size_t kMaxSearchSteps = 32;

struct SearchConfig {
  std::size_t max_steps = 10;
  /// Tried in this order at every node; fai-up last so cut-free proofs come first.
  std::vector<RuleName> rules{RuleName::AiDown, RuleName::Switch, RuleName::CDown,
                              RuleName::WDown, RuleName::FaiUp};
  /// Skip premises that are not tautologies. Loses no proofs: everything
  /// derivable from t is one.
  bool prune_non_tautologies = true;
  /// Skip premises (other than ai-down's) with more t-in-Par or f-in-Times
  /// subterms than their conclusion.
  bool prune_absorbed_units = true;
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t deepest_bound = 0;
};

/// Iterative deepening upward from `goal` over premises_of. Returns the first
/// shortest proof in the fixed rule and premise order, or nothing when there
/// is none with at most cfg.max_steps steps. Throws std::invalid_argument for
/// max_steps above kMaxSearchSteps or a rule that is not upward-finitary.
std::optional<Derivation> prove_bounded(const Structure& goal, const SearchConfig& cfg = {},
                                        SearchStats* stats = nullptr);

}  // namespace deep
