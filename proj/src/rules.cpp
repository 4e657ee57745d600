#include "cos/rules.hpp"

namespace deep {

std::string_view rule_name(RuleName r) {
  switch (r) {
    case RuleName::AiDown: return "ai-down";
    case RuleName::AiUp: return "ai-up";
    case RuleName::FaiUp: return "fai-up";
    case RuleName::IDown: return "i-down";
    case RuleName::IUp: return "i-up";
    case RuleName::Switch: return "s";
    case RuleName::CDown: return "c-down";
    case RuleName::CUp: return "c-up";
    case RuleName::WDown: return "w-down";
    case RuleName::WUp: return "w-up";
  }
  return "?";
}

std::optional<RuleName> rule_from_name(std::string_view name) {
  for (RuleName r : kAllRules) {
    if (rule_name(r) == name) return r;
  }
  return std::nullopt;
}

RuleName dual(RuleName r) {
  switch (r) {
    case RuleName::AiDown: return RuleName::AiUp;
    case RuleName::AiUp: return RuleName::AiDown;
    case RuleName::FaiUp: return RuleName::AiDown;
    case RuleName::IDown: return RuleName::IUp;
    case RuleName::IUp: return RuleName::IDown;
    case RuleName::Switch: return RuleName::Switch;
    case RuleName::CDown: return RuleName::CUp;
    case RuleName::CUp: return RuleName::CDown;
    case RuleName::WDown: return RuleName::WUp;
    case RuleName::WUp: return RuleName::WDown;
  }
  return r;
}

bool is_finitary_upward(RuleName r) {
  switch (r) {
    case RuleName::AiDown:
    case RuleName::Switch:
    case RuleName::CDown:
    case RuleName::WDown:
    case RuleName::FaiUp:
      return true;
    default:
      return false;
  }
}

bool is_atomic_cut(RuleName r) { return r == RuleName::AiUp || r == RuleName::FaiUp; }

}  // namespace deep
