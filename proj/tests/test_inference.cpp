#include "doctest.h"

#include <algorithm>

#include "cos/inference.hpp"
#include "cos/parser.hpp"
#include "cos/semantics.hpp"
#include "support/random_derivations.hpp"

using namespace deep;
using deep::testing::Rng;

namespace {

Structure P(std::string_view s) { return parse(s); }

bool contains(const std::vector<Structure>& v, const Structure& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

// Truth-table entailment over the four test atoms, evaluated directly.
bool entails_by_table(const Structure& p, const Structure& c) {
  for (unsigned m = 0; m < 16; ++m) {
    Assignment v{{"a", (m & 1U) != 0}, {"b", (m & 2U) != 0}, {"c", (m & 4U) != 0},
                 {"d", (m & 8U) != 0}};
    if (eval(p, v) && !eval(c, v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rule names and duals") {
  for (RuleName r : kAllRules) {
    CHECK(rule_from_name(rule_name(r)) == r);
    if (r != RuleName::FaiUp) CHECK(dual(dual(r)) == r);
  }
  CHECK(dual(RuleName::FaiUp) == RuleName::AiDown);
  CHECK(dual(dual(RuleName::FaiUp)) == RuleName::AiUp);
  CHECK_FALSE(rule_from_name("cut").has_value());
}

TEST_CASE("validate_step examples") {
  auto v = validate_step(Structure::t(), P("[a, -a]"), RuleName::AiDown);
  REQUIRE(v);
  CHECK(v.instance().redex == Structure::t());
  CHECK(v.instance().contractum == P("[a, -a]"));
  CHECK(v.instance().context.is_trivial());

  auto s = validate_step(P("([a, c], b)"), P("[(a, b), c]"), RuleName::Switch);
  REQUIRE(s);
  CHECK(s.instance().bindings.r == P("a"));
  CHECK(s.instance().bindings.u == P("c"));
  CHECK(s.instance().bindings.t == P("b"));
  CHECK(s.instance().premise() == P("([a, c], b)"));
  CHECK(s.instance().conclusion() == P("[(a, b), c]"));

  auto fai = validate_step(P("(a, -a)"), Structure::f(), RuleName::FaiUp);
  CHECK_FALSE(fai);
  CHECK(fai.failure() == StepFailure::ProvisoViolation);
  CHECK(validate_step(P("(a, -a)"), Structure::f(), RuleName::AiUp));

  CHECK_FALSE(validate_step(Structure::t(), P("[a, b]"), RuleName::Switch));
  CHECK(validate_step(Structure::t(), P("[a, b]"), RuleName::Switch).failure() ==
        StepFailure::NoWitness);
}

TEST_CASE("fai-up proviso: either polarity in the context, never units") {
  CHECK(validate_step(P("[a, (a, -a)]"), P("a"), RuleName::FaiUp));
  CHECK(validate_step(P("[-a, (a, -a)]"), P("-a"), RuleName::FaiUp));
  CHECK_FALSE(validate_step(P("[b, (a, -a)]"), P("b"), RuleName::FaiUp));
  CHECK_FALSE(validate_step(P("[t, (a, -a)]"), P("t"), RuleName::FaiUp));
  // The witness may sit deep: ([a, b], (a, -a)) -> ([a, b], f).
  CHECK(validate_step(P("([a, b], a, -a)"), P("(f, [a, b])"), RuleName::FaiUp));
}

TEST_CASE("rules in deep contexts and under hidden units") {
  CHECK(validate_step(P("b"), P("([a, -a], b)"), RuleName::AiDown));
  CHECK(validate_step(P("[b, c]"), P("[b, (c, [a, -a])]"), RuleName::AiDown));
  CHECK(validate_step(P("[a, b]"), P("[a, b, c]"), RuleName::WDown));
  CHECK(validate_step(P("[a, b]"), P("t"), RuleName::WUp));
  CHECK(validate_step(P("[a, b]"), P("[t, b]"), RuleName::WUp));
  CHECK(validate_step(P("[a, a, b]"), P("[a, b]"), RuleName::CDown));
  CHECK(validate_step(P("(a, b)"), P("(a, a, b)"), RuleName::CUp));
  CHECK(validate_step(P("((a, b), [-a, -b])"), P("f"), RuleName::IUp));
  CHECK(validate_step(P("t"), P("[(a, b), -a, -b]"), RuleName::IDown));
  CHECK_FALSE(validate_step(P("t"), P("[(a, b), -a]"), RuleName::IDown));
  CHECK_FALSE(validate_step(P("a"), P("b"), RuleName::WDown));
  CHECK_FALSE(validate_step(P("a"), P("(a, a, a)"), RuleName::CUp));
}

TEST_CASE("trivial steps are accepted by the non-atomic rules") {
  const Structure x = P("[a, (b, c)]");
  for (RuleName r : {RuleName::IDown, RuleName::IUp, RuleName::Switch, RuleName::CDown,
                     RuleName::CUp, RuleName::WDown, RuleName::WUp}) {
    CHECK(validate_step(x, x, r));
  }
  CHECK_FALSE(validate_step(x, x, RuleName::AiDown));
  CHECK_FALSE(validate_step(x, x, RuleName::AiUp));
}

TEST_CASE("property: forward-generated steps validate and are sound") {
  Rng rng(2024);
  std::map<RuleName, int> per_rule;
  int generated = 0;
  for (int i = 0; generated < 1000 && i < 20000; ++i) {
    const Structure premise = deep::testing::biased_premise(rng);
    const RuleName rule = deep::testing::random_rule(rng);
    auto step = deep::testing::random_step(rng, premise, rule);
    if (!step) continue;
    ++generated;
    ++per_rule[rule];
    const Structure p = step->premise();
    const Structure c = step->conclusion();
    REQUIRE(p == premise);
    auto v = validate_step(p, c, rule);
    INFO(rule_name(rule), ": ", to_string(p), " -> ", to_string(c));
    REQUIRE(v);
    CHECK(v.instance().premise() == p);
    CHECK(v.instance().conclusion() == c);
    CHECK(instantiate(rule, v.instance().bindings) ==
          std::pair{normalize(v.instance().redex), normalize(v.instance().contractum)});
    CHECK(entails_by_table(p, c));
    if (rule == RuleName::FaiUp) CHECK(validate_step(p, c, RuleName::AiUp));
  }
  CHECK(generated == 1000);
  for (RuleName r : kAllRules) CHECK(per_rule[r] > 0);
}

TEST_CASE("property: premises_of is complete for forward steps") {
  Rng rng(99);
  int checked = 0;
  for (int i = 0; checked < 300 && i < 20000; ++i) {
    const Structure premise = deep::testing::biased_premise(rng);
    const RuleName rule = deep::testing::random_rule(rng);
    if (!is_finitary_upward(rule)) continue;
    auto step = deep::testing::random_step(rng, premise, rule);
    if (!step) continue;
    const Structure c = step->conclusion();
    if (c.leaf_count() > 10) continue;
    ++checked;
    INFO(rule_name(rule), ": ", to_string(premise), " -> ", to_string(c));
    const auto ps = premises_of(c, rule);
    CHECK(contains(ps, premise));
    for (const auto& p : ps) REQUIRE(validate_step(p, c, rule));
  }
  CHECK(checked == 300);
}

TEST_CASE("premises_of examples") {
  CHECK(contains(premises_of(P("[a, -a]"), RuleName::AiDown), Structure::t()));
  CHECK(premises_of(Structure::f(), RuleName::FaiUp).empty());
  const auto sw = premises_of(P("[(a, b), c]"), RuleName::Switch);
  CHECK(contains(sw, P("([a, c], b)")));
  CHECK(contains(sw, P("([b, c], a)")));
  CHECK(contains(sw, P("[(a, b), c]")));
  for (RuleName r : {RuleName::AiUp, RuleName::IUp, RuleName::IDown, RuleName::WUp,
                     RuleName::CUp}) {
    CHECK_THROWS_AS(premises_of(P("a"), r), InfinitaryRule);
  }
  const auto fai = premises_of(P("[a, b]"), RuleName::FaiUp);
  CHECK(contains(fai, P("[a, b, (a, -a)]")));
  CHECK(contains(premises_of(P("[a, (b, f)]"), RuleName::FaiUp), P("[a, (b, a, -a)]")));
  CHECK_FALSE(contains(fai, P("[a, b, (c, -c)]")));
}

TEST_CASE("rule_direction_sound") {
  for (RuleName r : kAllRules) CHECK(rule_direction_sound(r));
  // ((R v U) & T) |= (R & T) v U, directly.
  CHECK(entails(P("([a, c], b)"), P("[(a, b), c]")));
  CHECK_FALSE(entails(P("[(a, b), c]"), P("([a, c], b)")));
}
