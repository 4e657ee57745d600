#include "cos/search.hpp"

#include <stdexcept>
#include <unordered_map>

#include "cos/inference.hpp"
#include "cos/semantics.hpp"

namespace deep {

namespace {

// t directly inside a Par, f directly inside a Times.
std::size_t absorbed_units(const Structure& s) {
  std::size_t n = 0;
  for (const auto& c : s.children()) {
    if ((s.is_par() && c.is_true()) || (s.is_times() && c.is_false())) ++n;
    n += absorbed_units(c);
  }
  return n;
}

class Searcher {
 public:
  Searcher(const SearchConfig& cfg, SearchStats& stats) : cfg_(cfg), stats_(stats) {}

  // Upward path from s to t in at most `budget` steps; `path` collects
  // (rule, structure) pairs from s upward.
  bool prove(const Structure& s, std::size_t budget, std::vector<Step>& path) {
    if (s.is_true()) return true;
    if (budget == 0) return false;
    if (auto it = failed_.find(s); it != failed_.end() && it->second >= budget) return false;
    ++stats_.nodes;
    if (budget == 1) {
      // Only t itself can be the premise, so ask the checker directly.
      for (RuleName rule : cfg_.rules) {
        if (one_step(s, rule)) {
          path.push_back({rule, s});
          return true;
        }
      }
      failed_[s] = std::max(failed_[s], budget);
      return false;
    }
    for (RuleName rule : cfg_.rules) {
      for (const auto& p : premises(s, rule)) {
        if (p == s) continue;
        if (cfg_.prune_non_tautologies && !tautology(p)) continue;
        if (cfg_.prune_absorbed_units && rule != RuleName::AiDown &&
            absorbed_units(p) > absorbed_units(s)) {
          continue;
        }
        path.push_back({rule, s});
        if (prove(p, budget - 1, path)) return true;
        path.pop_back();
      }
    }
    auto& f = failed_[s];
    f = std::max(f, budget);
    return false;
  }

 private:
  const std::vector<Structure>& premises(const Structure& s, RuleName rule) {
    auto& slot = premise_cache_[static_cast<std::size_t>(rule)];
    auto it = slot.find(s);
    if (it == slot.end()) it = slot.emplace(s, premises_of(s, rule)).first;
    return it->second;
  }

  bool one_step(const Structure& s, RuleName rule) {
    auto& slot = one_step_cache_[static_cast<std::size_t>(rule)];
    auto it = slot.find(s);
    if (it == slot.end()) {
      it = slot.emplace(s, static_cast<bool>(validate_step(Structure::t(), s, rule))).first;
    }
    return it->second;
  }

  bool tautology(const Structure& s) {
    auto it = tautology_cache_.find(s);
    if (it == tautology_cache_.end()) it = tautology_cache_.emplace(s, is_tautology(s)).first;
    return it->second;
  }

  const SearchConfig& cfg_;
  SearchStats& stats_;
  std::unordered_map<Structure, std::size_t, StructureHash> failed_;
  std::unordered_map<Structure, bool, StructureHash> tautology_cache_;
  std::unordered_map<Structure, std::vector<Structure>, StructureHash> premise_cache_[10];
  std::unordered_map<Structure, bool, StructureHash> one_step_cache_[10];
};

}  // namespace

std::optional<Derivation> prove_bounded(const Structure& goal_in, const SearchConfig& cfg,
                                        SearchStats* stats) {
  if (cfg.max_steps > kMaxSearchSteps) {
    throw std::invalid_argument("max_steps above " + std::to_string(kMaxSearchSteps));
  }
  for (RuleName r : cfg.rules) {
    if (!is_finitary_upward(r)) throw InfinitaryRule(r);
  }
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  const Structure goal = normalize(goal_in);
  if (cfg.prune_non_tautologies && !is_tautology(goal)) return std::nullopt;

  Searcher searcher(cfg, st);
  for (std::size_t bound = 0; bound <= cfg.max_steps; ++bound) {
    st.deepest_bound = bound;
    std::vector<Step> path;
    if (searcher.prove(goal, bound, path)) {
      // path holds (rule, conclusion) from the goal upward.
      Derivation d;
      for (auto it = path.rbegin(); it != path.rend(); ++it) d.append(it->rule, it->result);
      return d;
    }
  }
  return std::nullopt;
}

}  // namespace deep
