#include "doctest.h"

#include "cos/parser.hpp"
#include "cos/search.hpp"
#include "cos/semantics.hpp"

using namespace deep;

namespace {

Structure P(std::string_view s) { return parse(s); }

SearchConfig bound(std::size_t n) {
  SearchConfig cfg;
  cfg.max_steps = n;
  return cfg;
}

}  // namespace

TEST_CASE("excluded middle at bound 1") {
  auto p = prove_bounded(P("[a, -a]"), bound(1));
  REQUIRE(p);
  CHECK(*p == Derivation(Structure::t(), {{RuleName::AiDown, P("[a, -a]")}}));
  CHECK_FALSE(prove_bounded(P("[a, -a]"), bound(0)));
  CHECK(prove_bounded(Structure::t(), bound(0)) == Derivation());
}

TEST_CASE("no proof of f") {
  SearchConfig cfg = bound(10);
  cfg.prune_non_tautologies = false;
  cfg.prune_absorbed_units = false;
  SearchStats stats;
  CHECK_FALSE(prove_bounded(Structure::f(), cfg, &stats));
  CHECK(stats.deepest_bound == 10);
  CHECK_FALSE(prove_bounded(Structure::f(), bound(10)));
}

TEST_CASE("[(a,b), -a, -b] at bound 6") {
  auto p = prove_bounded(P("[(a, b), -a, -b]"), bound(6));
  REQUIRE(p);
  CHECK(check_proof(*p).ok());
  CHECK(p->conclusion() == P("[(a, b), -a, -b]"));
  CHECK(is_tautology(p->conclusion()));
}

TEST_CASE("monotone in the bound and deterministic") {
  const Structure goal = P("[(a, b), -a, -b]");
  std::optional<std::size_t> first;
  std::optional<Derivation> shortest;
  for (std::size_t k = 0; k <= 6; ++k) {
    auto p = prove_bounded(goal, bound(k));
    if (first) {
      REQUIRE(p);
      CHECK(*p == *shortest);
    } else if (p) {
      first = k;
      shortest = p;
      CHECK(p->steps().size() == k);
    }
  }
  CHECK(first.has_value());
  CHECK(prove_bounded(goal, bound(6)) == prove_bounded(goal, bound(6)));
}

TEST_CASE("non-tautologies are never proved") {
  for (const char* s : {"a", "[a, b]", "(a, -a)", "[(a, b), -a]", "f"}) {
    CHECK_FALSE(prove_bounded(P(s), bound(4)));
  }
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(prove_bounded(P("a"), bound(33)), std::invalid_argument);
  SearchConfig cfg;
  cfg.rules = {RuleName::CUp};
  CHECK_THROWS_AS(prove_bounded(P("a"), cfg), InfinitaryRule);
}

TEST_CASE("restricted rule sets") {
  SearchConfig cfg = bound(4);
  cfg.rules = {RuleName::AiDown};
  auto p = prove_bounded(P("[a, -a, (b, [c, -c], -b)]"), cfg);
  CHECK_FALSE(p);
  cfg.rules = {RuleName::AiDown, RuleName::Switch};
  p = prove_bounded(P("[(a, b), -a, -b]"), cfg);
  REQUIRE(p);
  for (const auto& s : p->steps()) CHECK((s.rule == RuleName::AiDown || s.rule == RuleName::Switch));
}
