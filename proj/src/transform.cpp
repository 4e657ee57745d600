#include "cos/transform.hpp"

#include <functional>

namespace deep {

namespace {

using Emit = std::function<void(RuleName, const Structure&)>;

std::vector<StepInstance> checked_witnesses(const Derivation& d, const std::string& which) {
  try {
    return witnesses(d);
  } catch (const DerivationError& e) {
    throw TransformError(TransformError::Kind::InputInvalid, which, e.step(),
                         which + " derivation is invalid at " + e.what());
  }
}

Derivation postcheck(Derivation out, const std::string& pass, PassReport* report,
                     std::size_t input_steps, std::size_t rewritten) {
  if (auto r = check(out); !r) {
    throw TransformError(TransformError::Kind::PostcheckFailed, "output", r.failure().step,
                         pass + " produced an invalid step " +
                             std::to_string(r.failure().step) + ": " + r.failure().reason);
  }
  if (report) *report = {pass, input_steps, out.steps().size(), rewritten, true};
  return out;
}

// Appends to `out`, skipping steps that do not change the structure.
Emit appender(Derivation& out) {
  return [&out](RuleName rule, const Structure& s) {
    Structure n = normalize(s);
    if (n != out.conclusion()) out.append(rule, n);
  };
}

// ctx{(R,-R)} down to ctx{f}.
void cut_steps(const Context& ctx, const Structure& r, const Emit& emit) {
  if (r.is_unit()) return;
  if (r.is_literal()) {
    emit(RuleName::AiUp, ctx.plug(Structure::f()));
    return;
  }
  const Structure p = r.is_times() ? r : negate(r);
  const Structure r1 = p.children()[0];
  const Structure t1 = Structure::times({p.children().begin() + 1, p.children().end()});
  // (R1, T1, [-R1, -T1]) / (R1, [-R1, (T1, -T1)])
  emit(RuleName::Switch,
       ctx.plug(Structure::times(
           {r1, Structure::par({negate(r1), Structure::times({t1, negate(t1)})})})));
  cut_steps(ctx.compose(Context::around(Kind::Times, {r1}))
                .compose(Context::around(Kind::Par, {negate(r1)})),
            t1, emit);
  cut_steps(ctx, r1, emit);
}

// ctx{t} down to ctx[R,-R].
void identity_steps(const Context& ctx, const Structure& r, const Emit& emit) {
  if (r.is_unit()) return;
  if (r.is_literal()) {
    emit(RuleName::AiDown, ctx.plug(Structure::par({r, negate(r)})));
    return;
  }
  const Structure p = r.is_times() ? r : negate(r);
  const Structure r1 = p.children()[0];
  const Structure t1 = Structure::times({p.children().begin() + 1, p.children().end()});
  identity_steps(ctx, r1, emit);
  identity_steps(ctx.compose(Context::around(Kind::Par, {negate(r1)}))
                     .compose(Context::around(Kind::Times, {r1})),
                 t1, emit);
  // [-R1, (R1, [-T1, T1])] / [-R1, -T1, (R1, T1)]
  emit(RuleName::Switch, ctx.plug(Structure::par({negate(r1), negate(t1), p})));
}

template <typename Rewrite>
Derivation rewrite_steps(const Derivation& d, const std::string& pass, PassReport* report,
                         Rewrite&& rewrite) {
  const auto ws = checked_witnesses(d, "input");
  Derivation out(d.premise());
  const Emit emit = appender(out);
  std::size_t rewritten = 0;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (rewrite(ws[i], emit)) {
      ++rewritten;
    } else {
      emit(d.steps()[i].rule, d.steps()[i].result);
    }
  }
  return postcheck(std::move(out), pass, report, d.steps().size(), rewritten);
}

Structure cut_formula(const StepInstance& w) { return *w.bindings.r; }

}  // namespace

Derivation eliminate_w_up(const Derivation& d, PassReport* report) {
  return rewrite_steps(d, "wup-elim", report, [](const StepInstance& w, const Emit& emit) {
    if (w.rule != RuleName::WUp) return false;
    const Structure r = w.redex;
    const Structure t = Structure::t();
    const Structure f = Structure::f();
    // S{R} / S[t,(R,f)] / S[t,(R,-R)] / S[t,f] = S{t}
    emit(RuleName::Switch, w.context.plug(Structure::par({t, Structure::times({r, f})})));
    emit(RuleName::WDown, w.context.plug(Structure::par({t, Structure::times({r, negate(r)})})));
    emit(RuleName::IUp, w.context.plug(t));
    return true;
  });
}

Derivation atomize_cut(const Derivation& d, PassReport* report) {
  return rewrite_steps(d, "atomize-cut", report, [](const StepInstance& w, const Emit& emit) {
    if (w.rule != RuleName::IUp) return false;
    cut_steps(w.context, cut_formula(w), emit);
    return true;
  });
}

Derivation atomize_identity(const Derivation& d, PassReport* report) {
  return rewrite_steps(d, "atomize-id", report, [](const StepInstance& w, const Emit& emit) {
    if (w.rule != RuleName::IDown) return false;
    identity_steps(w.context, cut_formula(w), emit);
    return true;
  });
}

Derivation finitarize(const Derivation& p, PassReport* report) {
  if (auto r = check_proof(p); !r) {
    throw TransformError(TransformError::Kind::InputInvalid, "input", r.failure().step,
                         "input proof is invalid: " + r.failure().reason);
  }
  for (std::size_t i = 0; i < p.steps().size(); ++i) {
    const RuleName r = p.steps()[i].rule;
    if (r == RuleName::IUp || r == RuleName::WUp) {
      throw TransformError(TransformError::Kind::PreconditionViolated, "input", i,
                           std::string("step ") + std::to_string(i) + " is " +
                               std::string(rule_name(r)) +
                               "; run wup-elim and atomize-cut first");
    }
  }

  // Work with plain ai-up: a fai-up above a removed cut may lose its witness
  // atom only through the substitution, and is relabelled at the end anyway.
  std::vector<Step> steps = p.steps();
  for (auto& s : steps) {
    if (s.rule == RuleName::FaiUp) s.rule = RuleName::AiUp;
  }
  Derivation cur(p.premise(), steps);
  std::size_t removed = 0;
  for (std::size_t round = 0; round <= p.steps().size(); ++round) {
    std::optional<std::size_t> bottom;
    std::string atom;
    for (std::size_t i = cur.steps().size(); i-- > 0;) {
      if (!is_atomic_cut(cur.steps()[i].rule)) continue;
      const Structure& before = cur.structure(i);
      const Structure& after = cur.steps()[i].result;
      if (validate_step(before, after, RuleName::FaiUp)) continue;
      auto v = validate_step(before, after, RuleName::AiUp);
      if (!v) {
        throw TransformError(TransformError::Kind::PostcheckFailed, "output", i,
                             "atomic cut no longer valid: " + v.message());
      }
      bottom = i;
      atom = *v.instance().bindings.atom;
      break;
    }
    if (!bottom) break;
    ++removed;
    // Everything strictly above the cut's conclusion loses the atom.
    Derivation next(substitute_literal(cur.premise(), atom));
    for (std::size_t i = 0; i < cur.steps().size(); ++i) {
      const auto& s = cur.steps()[i];
      Structure result = i < *bottom ? substitute_literal(s.result, atom) : s.result;
      if (result != next.conclusion()) next.append(s.rule, result);
    }
    if (auto r = check(next); !r) {
      throw TransformError(TransformError::Kind::PostcheckFailed, "output", r.failure().step,
                           "substituting " + atom + " broke step " +
                               std::to_string(r.failure().step) + ": " + r.failure().reason);
    }
    cur = std::move(next);
  }

  Derivation out(cur.premise());
  for (const auto& s : cur.steps()) {
    out.append(s.rule == RuleName::AiUp ? RuleName::FaiUp : s.rule, s.result);
  }
  return postcheck(std::move(out), "finitarize", report, p.steps().size(), removed);
}

Derivation flip_unchecked(const Derivation& d) {
  Derivation out(negate(d.conclusion()));
  for (std::size_t i = d.steps().size(); i-- > 0;) {
    out.append(dual(d.steps()[i].rule), negate(d.structure(i)));
  }
  return out;
}

Derivation flip(const Derivation& d, PassReport* report) {
  if (auto r = check(d); !r) {
    throw TransformError(TransformError::Kind::InputInvalid, "input", r.failure().step,
                         "input derivation is invalid: " + r.failure().reason);
  }
  return postcheck(flip_unchecked(d), "flip", report, d.steps().size(), d.steps().size());
}

std::optional<Derivation> run_pass(std::string_view name, const Derivation& d,
                                   PassReport* report) {
  if (name == "wup-elim") return eliminate_w_up(d, report);
  if (name == "atomize-cut") return atomize_cut(d, report);
  if (name == "atomize-id") return atomize_identity(d, report);
  if (name == "finitarize") return finitarize(d, report);
  if (name == "flip") return flip(d, report);
  return std::nullopt;
}

ConsistencyReport consistency_pipeline(const Derivation& p1, const Derivation& p2,
                                       const StepValidator& validator) {
  ConsistencyReport rep;
  const char* names[] = {"first", "second"};
  const Derivation* inputs[] = {&p1, &p2};
  for (int k = 0; k < 2; ++k) {
    if (auto r = check_proof(*inputs[k], validator); !r) {
      throw TransformError(TransformError::Kind::InputInvalid, names[k], r.failure().step,
                           std::string(names[k]) + " proof fails at step " +
                               std::to_string(r.failure().step) + ": " + r.failure().reason);
    }
    rep.stages.push_back({std::string("check ") + names[k], inputs[k]->steps().size(),
                          "proves " + to_string(inputs[k]->conclusion())});
  }
  const Structure r = p1.conclusion();
  if (p2.conclusion() != negate(r)) {
    throw TransformError(TransformError::Kind::InputInvalid, "second", p2.steps().size(),
                         "second proof concludes " + to_string(p2.conclusion()) +
                             ", expected the negation " + to_string(negate(r)));
  }

  const Derivation conj = conjoin(p1, p2, validator);
  rep.stages.push_back({"conjoin", conj.steps().size(), "t / " + to_string(conj.conclusion())});

  const Derivation refutation = flip_unchecked(conj);
  rep.stages.push_back({"flip", refutation.steps().size(),
                        to_string(refutation.premise()) + " / " +
                            to_string(refutation.conclusion())});

  const Derivation identity =
      atomize_identity(Derivation(Structure::t(), {{RuleName::IDown, refutation.premise()}}));
  rep.stages.push_back({"identity", identity.steps().size(),
                        "t / " + to_string(identity.conclusion()) + " with atomic identities"});

  rep.candidate = compose(identity, refutation);
  rep.candidate_checks = rep.candidate.is_proof() && rep.candidate.conclusion().is_false() &&
                         check(rep.candidate, validator).ok();
  rep.kernel_accepts = rep.candidate.is_proof() && rep.candidate.conclusion().is_false() &&
                       check(rep.candidate).ok();
  rep.stages.push_back({"assemble", rep.candidate.steps().size(),
                        rep.soundness_alarm() ? "proof of f checks: kernel soundness alarm"
                                              : "candidate proof of f does not check"});
  return rep;
}

}  // namespace deep
