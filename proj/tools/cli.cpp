#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>

#include "cos/derivation.hpp"
#include "cos/parser.hpp"
#include "cos/proof_file.hpp"
#include "cos/search.hpp"
#include "cos/semantics.hpp"
#include "cos/transform.hpp"

namespace deep::cli {

namespace {

using nlohmann::json;

struct Style {
  bool color = false;
  std::string good(const std::string& s) const { return color ? "\x1b[32m" + s + "\x1b[0m" : s; }
  std::string bad(const std::string& s) const { return color ? "\x1b[31m" + s + "\x1b[0m" : s; }
};

Style style_from_env() {
  const char* v = std::getenv("COS_COLOR");
  return Style{v != nullptr && std::string(v) == "1"};
}

json derivation_json(const Derivation& d) {
  json steps = json::array();
  for (const auto& s : d.steps()) {
    steps.push_back({{"rule", std::string(rule_name(s.rule))}, {"result", to_string(s.result)}});
  }
  return {{"premise", to_string(d.premise())}, {"steps", steps}};
}

json verdict_json(const CheckResult& r) {
  if (r.ok()) return "ok";
  const auto& f = r.failure();
  return {{"failure", f.kind == CheckFailureKind::PremiseNotTrue ? "premise-not-t" : "invalid-step"},
          {"step", f.step},
          {"reason", f.reason}};
}

std::string describe(const CheckFailure& f) {
  if (f.kind == CheckFailureKind::PremiseNotTrue) return "premise-not-t: " + f.reason;
  return "invalid step " + std::to_string(f.step) + ": " + f.reason;
}

const char* transform_error_name(TransformError::Kind k) {
  switch (k) {
    case TransformError::Kind::InputInvalid: return "input-invalid";
    case TransformError::Kind::PreconditionViolated: return "precondition-violated";
    case TransformError::Kind::PostcheckFailed: return "postcheck-failed";
  }
  return "error";
}

class Commands {
 public:
  Commands(std::ostream& out, std::ostream& err, bool json_mode)
      : out_(out), err_(err), json_(json_mode), style_(style_from_env()) {}

  int check_file(const std::string& file, bool proof) {
    const Derivation d = read_proof_file(file);
    const CheckResult r = proof ? check_proof(d) : deep::check(d);
    if (json_) {
      json j = derivation_json(d);
      j["verdict"] = verdict_json(r);
      out_ << j.dump(2) << "\n";
    } else if (r.ok()) {
      out_ << style_.good("ok") << "\n";
    } else {
      out_ << style_.bad(describe(r.failure())) << "\n";
    }
    return r.ok() ? kOk : kVerdictFail;
  }

  int normalize_cmd(const std::string& expr) {
    emit_structure(parse(expr));
    return kOk;
  }

  int negate_cmd(const std::string& expr) {
    emit_structure(negate(parse(expr)));
    return kOk;
  }

  int transform(const std::string& pass, const std::string& file) {
    const Derivation d = read_proof_file(file);
    PassReport report;
    std::optional<Derivation> result;
    try {
      result = run_pass(pass, d, &report);
    } catch (const TransformError& e) {
      return transform_failure(e);
    }
    if (!result) {
      err_ << "unknown pass '" << pass << "'\n";
      return kUsage;
    }
    if (json_) {
      json j = derivation_json(*result);
      j["verdict"] = verdict_json(deep::check(*result));
      j["report"] = {{"pass", report.pass},
                     {"input_steps", report.input_steps},
                     {"output_steps", report.output_steps},
                     {"rewritten", report.rewritten},
                     {"postcheck", report.postcheck_ok ? "ok" : "failed"}};
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "# " << report.pass << ": " << report.input_steps << " -> " << report.output_steps
           << " steps, " << report.rewritten << " rewritten\n"
           << write_proof(*result);
    }
    return kOk;
  }

  int prove(const std::string& expr, std::size_t max_steps) {
    SearchConfig cfg;
    cfg.max_steps = max_steps;
    SearchStats stats;
    const auto proof = prove_bounded(parse(expr), cfg, &stats);
    if (json_) {
      json j = {{"goal", to_string(parse(expr))}, {"max_steps", max_steps}, {"nodes", stats.nodes}};
      if (proof) {
        j["proof"] = derivation_json(*proof);
        j["proof"]["verdict"] = verdict_json(check_proof(*proof));
      } else {
        j["proof"] = nullptr;
      }
      out_ << j.dump(2) << "\n";
    } else if (proof) {
      out_ << write_proof(*proof);
    } else {
      out_ << "UNPROVED-AT-BOUND " << max_steps << "\n";
    }
    return proof ? kOk : kVerdictFail;
  }

  int taut(const std::string& expr) {
    const Structure s = parse(expr);
    const auto cm = falsifying_assignment(s);
    if (json_) {
      json j = {{"structure", to_string(s)}, {"tautology", !cm}};
      if (cm) j["countermodel"] = *cm;
      out_ << j.dump(2) << "\n";
    } else if (!cm) {
      out_ << style_.good("tautology") << "\n";
    } else {
      out_ << style_.bad("not a tautology") << "; false under";
      for (const auto& [name, value] : *cm) out_ << " " << name << "=" << (value ? "t" : "f");
      out_ << "\n";
    }
    return cm ? kVerdictFail : kOk;
  }

  int audit(std::size_t max_leaves) {
    const AuditReport r = audit_units(max_leaves);
    if (json_) {
      json v = json::array();
      for (const auto& x : r.violations) {
        v.push_back({{"rule", std::string(rule_name(x.rule))},
                     {"premise", to_string(x.premise)},
                     {"conclusion", to_string(x.conclusion)}});
      }
      out_ << json{{"max_leaves", r.max_leaves},
                   {"shapes", r.shapes},
                   {"instances", r.instances},
                   {"shapes_collapse_to_units", r.shapes_collapse_to_units},
                   {"atomic_rules_inert", r.atomic_rules_inert},
                   {"kernel_rejects_t_to_f", r.kernel_rejects_t_to_f},
                   {"violations", v}}
                  .dump(2)
           << "\n";
    } else {
      out_ << r.shapes << " shapes, " << r.instances << " rule instances, "
           << r.violations.size() << " violations\n";
      for (const auto& x : r.violations) {
        out_ << "  " << rule_name(x.rule) << ": " << to_string(x.premise) << " / "
             << to_string(x.conclusion) << "\n";
      }
      if (!r.shapes_collapse_to_units) out_ << "  a shape did not collapse to a unit\n";
      if (!r.atomic_rules_inert) out_ << "  an atomic rule fired on a boolean shape\n";
      if (!r.kernel_rejects_t_to_f) out_ << "  the checker accepted t / f\n";
      out_ << (r.clean() ? style_.good("clean") : style_.bad("VIOLATION")) << "\n";
    }
    return r.clean() ? kOk : kVerdictFail;
  }

  int consistency(const std::string& proof_file, const std::string& counter_file) {
    const Derivation p1 = read_proof_file(proof_file);
    const Derivation p2 = read_proof_file(counter_file);
    ConsistencyReport rep;
    try {
      rep = consistency_pipeline(p1, p2);
    } catch (const TransformError& e) {
      if (json_) {
        out_ << json{{"stage", "check " + e.which()},
                     {"error", transform_error_name(e.kind())},
                     {"input", e.which()},
                     {"step", e.step()},
                     {"message", e.what()}}
                    .dump(2)
             << "\n";
      } else {
        out_ << "check " << e.which() << ": " << style_.bad("FAILED") << "\n  " << e.what()
             << "\nthe pipeline stops here: no proof of f can be assembled\n";
      }
      return kVerdictFail;
    }
    if (json_) {
      json stages = json::array();
      for (const auto& s : rep.stages) {
        stages.push_back({{"stage", s.name}, {"steps", s.steps}, {"detail", s.detail}});
      }
      json j = {{"stages", stages},
                {"candidate", derivation_json(rep.candidate)},
                {"candidate_checks", rep.candidate_checks},
                {"soundness_alarm", rep.soundness_alarm()}};
      out_ << j.dump(2) << "\n";
    } else {
      for (const auto& s : rep.stages) {
        out_ << s.name << ": " << s.detail << " (" << s.steps << " steps)\n";
      }
      if (rep.soundness_alarm()) {
        out_ << style_.bad("KERNEL SOUNDNESS ALARM") << ": a proof of f checks\n";
      }
    }
    return rep.soundness_alarm() ? kVerdictFail : kOk;
  }

 private:
  void emit_structure(const Structure& s) {
    if (json_) {
      out_ << json{{"structure", to_string(s)}}.dump() << "\n";
    } else {
      out_ << to_string(s) << "\n";
    }
  }

  int transform_failure(const TransformError& e) {
    if (json_) {
      out_ << json{{"error", transform_error_name(e.kind())}, {"step", e.step()},
                   {"message", e.what()}}
                  .dump(2)
           << "\n";
    } else {
      err_ << transform_error_name(e.kind()) << ": " << e.what() << "\n";
    }
    return kVerdictFail;
  }

  std::ostream& out_;
  std::ostream& err_;
  bool json_;
  Style style_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proof kernel and transformations for classical logic in the calculus of structures",
               "cos"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "Structured output");

  std::string file, expr, pass, counter;
  bool proof = false;
  std::size_t max_steps = 10;
  std::size_t max_leaves = 7;

  auto* check = app.add_subcommand("check", "Check a derivation file");
  check->add_option("file", file, "Derivation file")->required();
  check->add_flag("--proof", proof, "Also require the premise to be t");

  auto* norm = app.add_subcommand("normalize", "Print the canonical form");
  norm->add_option("structure", expr)->required();

  auto* neg = app.add_subcommand("negate", "Print the negation");
  neg->add_option("structure", expr)->required();

  auto* transform = app.add_subcommand("transform", "Run a pass over a derivation file");
  transform->add_option("--pass", pass, "wup-elim | atomize-cut | atomize-id | finitarize | flip")
      ->required()
      ->check(CLI::IsMember({"wup-elim", "atomize-cut", "atomize-id", "finitarize", "flip"}));
  transform->add_option("file", file)->required();

  auto* prove = app.add_subcommand("prove", "Bounded proof search");
  prove->add_option("--max-steps", max_steps)->check(CLI::Range(0, 32));
  prove->add_option("structure", expr)->required();

  auto* taut = app.add_subcommand("taut", "Truth-table tautology check");
  taut->add_option("structure", expr)->required();

  auto* audit = app.add_subcommand("audit-units", "Check that no rule takes t to f");
  audit->add_option("--max-leaves", max_leaves)->check(CLI::Range(2, 9));

  auto* consistency = app.add_subcommand("consistency", "Assemble t / f from proofs of R and -R");
  consistency->add_option("--proof", file, "Proof of R")->required();
  consistency->add_option("--counter", counter, "Proof of -R")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Commands cmd(out, err, json_mode);
  try {
    if (*check) return cmd.check_file(file, proof);
    if (*norm) return cmd.normalize_cmd(expr);
    if (*neg) return cmd.negate_cmd(expr);
    if (*transform) return cmd.transform(pass, file);
    if (*prove) return cmd.prove(expr, max_steps);
    if (*taut) return cmd.taut(expr);
    if (*audit) return cmd.audit(max_leaves);
    if (*consistency) return cmd.consistency(file, counter);
  } catch (const ParseError& e) {
    err << "parse error " << e.what() << "\n";
    return kUsage;
  } catch (const ProofFileError& e) {
    err << "proof file error: " << e.what() << "\n";
    return kUsage;
  } catch (const SemanticsError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace deep::cli
