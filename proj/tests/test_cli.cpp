#include "doctest.h"

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "cos/parser.hpp"
#include "cos/proof_file.hpp"

using namespace deep;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(COS_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("check") {
  auto r = run_cli({"check", data("lem.cos")});
  CHECK(r.code == 0);
  CHECK(r.out == "ok\n");
  for (const char* f : {"nand_or_and.cos", "distributivity.cos", "spurious_cut.cos"}) {
    CHECK(run_cli({"check", "--proof", data(f)}).code == 0);
  }
  auto bad = run_cli({"check", data("mutants/nand_rule_renamed.cos")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("invalid step 3") != std::string::npos);
  CHECK(run_cli({"check", data("missing.cos")}).code == 2);
}

TEST_CASE("check --json") {
  auto r = run_cli({"--json", "check", data("mutants/lem_rule_renamed.cos")});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["premise"] == "t");
  CHECK(j["steps"][0]["rule"] == "ai-up");
  CHECK(j["verdict"]["step"] == 0);
  auto ok = nlohmann::json::parse(run_cli({"check", data("lem.cos"), "--json"}).out);
  CHECK(ok["verdict"] == "ok");
}

TEST_CASE("normalize, negate, taut") {
  CHECK(run_cli({"normalize", "[f, a]"}).out == "a\n");
  CHECK(run_cli({"negate", "[a, (b, c)]"}).out == "(-a, [-b, -c])\n");
  CHECK(run_cli({"taut", "[(a, b), -a, -b]"}).code == 0);
  auto r = run_cli({"taut", "[a, b]"});
  CHECK(r.code == 1);
  CHECK(r.out.find("a=f") != std::string::npos);
  CHECK(run_cli({"normalize", "[a"}).code == 2);
  CHECK(run_cli({"normalize", "[]"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"transform", "--pass=cut-elim", data("lem.cos")}).code == 2);
  CHECK(run_cli({"prove", "--max-steps", "40", "[a, -a]"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("transform output is valid check input") {
  for (const char* pass : {"wup-elim", "atomize-cut", "atomize-id", "finitarize", "flip"}) {
    for (const char* f : {"lem.cos", "nand_or_and.cos", "distributivity.cos", "spurious_cut.cos"}) {
      auto r = run_cli({"transform", std::string("--pass=") + pass, data(f)});
      REQUIRE(r.code == 0);
      const Derivation d = read_proof(r.out);
      CHECK(check(d).ok());
    }
  }
  auto fin = run_cli({"transform", "--pass=finitarize", data("spurious_cut.cos")});
  CHECK(read_proof(fin.out) == read_proof_file(data("spurious_cut.finitarized.cos")));
  auto pre = run_cli({"transform", "--pass", "finitarize", data("mutants/lem_rule_renamed.cos")});
  CHECK(pre.code == 1);
}

TEST_CASE("prove") {
  auto r = run_cli({"prove", "--max-steps", "1", "[a, -a]"});
  CHECK(r.code == 0);
  CHECK(r.out == "premise: t\nai-down: [a, -a]\n");
  auto none = run_cli({"prove", "--max-steps", "10", "f"});
  CHECK(none.code == 1);
  CHECK(none.out == "UNPROVED-AT-BOUND 10\n");
}

TEST_CASE("audit-units") {
  auto r = run_cli({"audit-units", "--max-leaves", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find(" 0 violations") != std::string::npos);
  auto j = nlohmann::json::parse(run_cli({"--json", "audit-units", "--max-leaves", "3"}).out);
  CHECK(j["violations"].empty());
}

TEST_CASE("consistency") {
  auto r = run_cli({"consistency", "--proof", data("lem.cos"), "--counter",
                    data("counter_contradiction.cos")});
  CHECK(r.code == 1);
  CHECK(r.out.find("check second: FAILED") != std::string::npos);
  CHECK(r.out.find("step 1") != std::string::npos);
  auto j = nlohmann::json::parse(run_cli({"--json", "consistency", "--proof", data("lem.cos"),
                                          "--counter", data("counter_contradiction.cos")})
                                     .out);
  CHECK(j["input"] == "second");
  CHECK(j["step"] == 1);
}
