#include "doctest.h"

#include "cos/derivation.hpp"
#include "cos/parser.hpp"
#include "cos/proof_file.hpp"
#include "support/random_derivations.hpp"

using namespace deep;
using deep::testing::Rng;

namespace {

Structure P(std::string_view s) { return parse(s); }

Derivation lem() { return Derivation(Structure::t(), {{RuleName::AiDown, P("[a, -a]")}}); }

}  // namespace

TEST_CASE("check") {
  CHECK(check(lem()).ok());
  CHECK(check_proof(lem()).ok());

  auto bad = check(Derivation(Structure::t(), {{RuleName::Switch, P("[a, b]")}}));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.failure().kind == CheckFailureKind::InvalidStep);
  CHECK(bad.failure().step == 0);

  Derivation from_switch(P("([a, c], b)"), {{RuleName::Switch, P("[(a, b), c]")},
                                             {RuleName::WDown, P("[(a, b), c, d]")}});
  CHECK(check(from_switch).ok());
  auto np = check_proof(from_switch);
  REQUIRE_FALSE(np.ok());
  CHECK(np.failure().kind == CheckFailureKind::PremiseNotTrue);

  CHECK(check_proof(Derivation()).ok());
  CHECK(Derivation().conclusion() == Structure::t());
}

TEST_CASE("compose") {
  Derivation d2(P("[a, -a]"), {{RuleName::WDown, P("[a, b, -a]")}});
  Derivation both = compose(lem(), d2);
  CHECK(both.steps().size() == 2);
  CHECK(check_proof(both).ok());
  CHECK(compose(lem(), Derivation(P("[a, -a]"))) == lem());
  CHECK(compose(Derivation(), lem()) == lem());
  try {
    compose(lem(), lem());
    FAIL("expected mismatch");
  } catch (const DerivationError& e) {
    CHECK(e.kind() == DerivationError::Kind::Mismatch);
  }
}

TEST_CASE("lift") {
  Derivation l = lift(lem(), Context::around(Kind::Times, {P("b")}));
  CHECK(l.premise() == P("b"));
  CHECK(l.conclusion() == P("([a, -a], b)"));
  CHECK(check(l).ok());
  CHECK(lift(lem(), Context()) == lem());

  // A proof of R lifted into (_, -R) runs from -R to (R, -R).
  Derivation r = lift(lem(), Context::around(Kind::Times, {P("(a, -a)")}));
  CHECK(r.premise() == P("(a, -a)"));
  CHECK(r.conclusion() == P("([a, -a], a, -a)"));

  // Steps that become trivial inside the context disappear.
  // [t, f] = [t, t] = t.
  Derivation w(P("f"), {{RuleName::WDown, P("t")}});
  CHECK(lift(w, Context::around(Kind::Par, {P("t")})).steps().empty());
}

TEST_CASE("conjoin") {
  Derivation both = conjoin(lem(), lem());
  CHECK(check_proof(both).ok());
  CHECK(both.conclusion() == P("([a, -a], [a, -a])"));
  CHECK(conjoin(Derivation(), lem()) == lem());
  Derivation broken(Structure::t(), {{RuleName::Switch, P("[a, b]")}});
  CHECK_THROWS_AS(conjoin(lem(), broken), DerivationError);
}

TEST_CASE("property: random derivations check; compose, lift and conjoin preserve it") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Derivation d = deep::testing::random_derivation(rng, 6, i % 2 == 0);
    INFO(write_proof(d));
    REQUIRE(check(d).ok());

    const Structure c = deep::testing::random_structure(rng, 2);
    const Kind k = deep::testing::coin(rng, 0.5) ? Kind::Par : Kind::Times;
    const Derivation l = lift(d, Context::around(k, {c}));
    CHECK(check(l).ok());
    CHECK(l.premise() == make_connective(k, {c, d.premise()}));
    CHECK(l.conclusion() == make_connective(k, {c, d.conclusion()}));

    const Derivation tail = deep::testing::random_derivation(rng, 4, false);
    Derivation glued(d.conclusion());
    for (const auto& s : tail.steps()) {
      auto step = deep::testing::random_step(rng, glued.conclusion(), s.rule);
      if (step && step->conclusion() != glued.conclusion()) glued.append(s.rule, step->conclusion());
    }
    CHECK(check(compose(d, glued)).ok());

    if (d.is_proof()) {
      const Derivation p2 = deep::testing::random_derivation(rng, 5, true);
      const Derivation both = conjoin(d, p2);
      CHECK(check_proof(both).ok());
      CHECK(both.conclusion() == Structure::times({d.conclusion(), p2.conclusion()}));
    }
  }
}

TEST_CASE("proof files") {
  const std::string text =
      "# excluded middle\n"
      "\n"
      "premise: t\n"
      "ai-down: [a, -a]   \n";
  Derivation d = read_proof(text);
  CHECK(d == lem());
  CHECK(write_proof(d) == "premise: t\nai-down: [a, -a]\n");
  CHECK(read_proof(write_proof(d)) == d);

  auto line_of = [](const std::string& t) -> std::size_t {
    try {
      read_proof(t);
    } catch (const ProofFileError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("ai-down: [a, -a]\n") == 1);
  CHECK(line_of("premise: t\ncut: [a, -a]\n") == 2);
  CHECK(line_of("premise: t\n# c\nai-down: [a, \n") == 3);
  CHECK(line_of("premise: t\npremise: t\n") == 2);
  CHECK(line_of("premise t\n") == 1);
  CHECK(line_of("# only comments\n") == 1);

  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    const Derivation r = deep::testing::random_derivation(rng, 8, false);
    CHECK(read_proof(write_proof(r)) == r);
  }
}
