#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace deep {

enum class RuleName {
  AiDown,   // ai-down:  S{t} / S[a,-a]
  AiUp,     // ai-up:    S(a,-a) / S{f}
  FaiUp,    // fai-up:   ai-up where a or -a occurs in S{ }
  IDown,    // i-down:   S{t} / S[R,-R]
  IUp,      // i-up:     S(R,-R) / S{f}
  Switch,   // s:        S([R,U],T) / S[(R,T),U]
  CDown,    // c-down:   S[R,R] / S{R}
  CUp,      // c-up:     S{R} / S(R,R)
  WDown,    // w-down:   S{f} / S{R}
  WUp,      // w-up:     S{R} / S{t}
};

inline constexpr std::array<RuleName, 10> kAllRules = {
    RuleName::AiDown, RuleName::AiUp, RuleName::FaiUp, RuleName::IDown, RuleName::IUp,
    RuleName::Switch, RuleName::CDown, RuleName::CUp,  RuleName::WDown, RuleName::WUp,
};

/// Exact names used in proof files.
std::string_view rule_name(RuleName r);
std::optional<RuleName> rule_from_name(std::string_view name);

/// The corule used when flipping a derivation. fai-up flips like ai-up, so
/// dual(dual(fai-up)) is ai-up.
RuleName dual(RuleName r);

/// Rules whose upward application has finitely many premises.
bool is_finitary_upward(RuleName r);

/// ai-up and fai-up: the atomic cut family.
bool is_atomic_cut(RuleName r);

}  // namespace deep
