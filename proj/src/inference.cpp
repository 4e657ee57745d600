#include "cos/inference.hpp"

#include <set>
#include <tuple>

#include "cos/semantics.hpp"
#include "multiset.hpp"

namespace deep {

namespace {

using detail::concat;
using detail::for_each_split;

Structure par2(const Structure& a, const Structure& b) { return Structure::par({a, b}); }
Structure times2(const Structure& a, const Structure& b) { return Structure::times({a, b}); }

const Structure& need(const std::optional<Structure>& v, const char* what) {
  if (!v) throw std::invalid_argument(std::string("missing binding ") + what);
  return *v;
}

// [a, -a] (resp. (a, -a)) with a positive atom first, as canonical order has it.
std::optional<std::string> complementary_pair(const Structure& s, Kind connective) {
  if (s.kind() != connective || s.children().size() != 2) return std::nullopt;
  const auto& x = s.children()[0];
  const auto& y = s.children()[1];
  if (x.kind() == Kind::Atom && y.kind() == Kind::NegAtom && x.name() == y.name()) {
    return x.name();
  }
  return std::nullopt;
}

// Splits the connective view of `s` into R and the rest with rest = -R.
std::optional<Structure> split_dual_pair(const Structure& s, Kind connective) {
  const auto kids = view_as(connective, s);
  std::optional<Structure> found;
  for_each_split(kids, [&](const std::vector<Structure>& sel, const std::vector<Structure>& rest) {
    Structure r = make_connective(connective, sel);
    if (make_connective(connective, rest) == negate(r)) {
      found = r;
      return true;
    }
    return false;
  });
  return found;
}

std::optional<Bindings> match_switch(const Structure& l, const Structure& r) {
  if (l == r) return Bindings{.r = l, .u = Structure::f(), .t = Structure::t()};
  // ([f, t], f) = f and [(f, f), t] = t.
  if (l.is_false() && r.is_true()) {
    return Bindings{.r = Structure::f(), .u = Structure::t(), .t = Structure::f()};
  }
  // Premise side: pick the [R,U] child of the Times view of l.
  const auto lk = view_as(Kind::Times, l);
  for (std::size_t p = 0; p < lk.size(); ++p) {
    if (p > 0 && lk[p] == lk[p - 1]) continue;
    std::vector<Structure> others = lk;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(p));
    const Structure T = make_connective(Kind::Times, others);
    std::optional<Bindings> hit;
    for_each_split(view_as(Kind::Par, lk[p]),
                   [&](const std::vector<Structure>& sel, const std::vector<Structure>& rest) {
                     Structure R = make_connective(Kind::Par, sel);
                     Structure U = make_connective(Kind::Par, rest);
                     if (par2(times2(R, T), U) == r) {
                       hit = Bindings{.r = R, .u = U, .t = T};
                       return true;
                     }
                     return false;
                   });
    if (hit) return hit;
  }
  // Conclusion side: pick the (R,T) child of the Par view of r.
  const auto rk = view_as(Kind::Par, r);
  for (std::size_t q = 0; q < rk.size(); ++q) {
    if (q > 0 && rk[q] == rk[q - 1]) continue;
    std::vector<Structure> others = rk;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(q));
    const Structure U = make_connective(Kind::Par, others);
    std::optional<Bindings> hit;
    for_each_split(view_as(Kind::Times, rk[q]),
                   [&](const std::vector<Structure>& sel, const std::vector<Structure>& rest) {
                     Structure R = make_connective(Kind::Times, sel);
                     Structure T = make_connective(Kind::Times, rest);
                     if (times2(par2(R, U), T) == l) {
                       hit = Bindings{.r = R, .u = U, .t = T};
                       return true;
                     }
                     return false;
                   });
    if (hit) return hit;
  }
  // R = t vanishes from (R,T) on the conclusion side.
  std::optional<Bindings> hit;
  for_each_split(rk, [&](const std::vector<Structure>& sel, const std::vector<Structure>& rest) {
    if (sel.empty() || rest.empty()) return false;
    Structure T = make_connective(Kind::Par, sel);
    Structure U = make_connective(Kind::Par, rest);
    if (times2(par2(Structure::t(), U), T) == l) {
      hit = Bindings{.r = Structure::t(), .u = U, .t = T};
      return true;
    }
    return false;
  });
  return hit;
}

using SeenKey = std::tuple<Structure, Structure, Structure>;

bool decompose(const Structure& p, const Structure& c, const Context& outer,
               std::optional<Kind> skip, const std::function<bool(const Decomposition&)>& visit,
               std::set<SeenKey>& seen) {
  if (!seen.emplace(outer.term(), p, c).second) return false;
  if (visit({outer, p, c})) return true;
  if (p.is_unit() && c.is_unit()) {
    // Unit fillers only nest into unit contexts. The two that matter are
    // t = [t, f] and f = (f, t), which expose the other unit on both sides.
    if (p != c) return false;
    const Kind k = p.is_true() ? Kind::Par : Kind::Times;
    const Structure other = negate(p);
    return visit({outer.compose(Context::around(k, {p})), other, other});
  }
  for (Kind k : {Kind::Par, Kind::Times}) {
    if (skip == k) continue;
    auto ov = detail::overlap(view_as(k, p), view_as(k, c));
    if (ov.common.empty()) continue;
    const Structure idem = k == Kind::Par ? Structure::t() : Structure::f();
    const bool stop = for_each_split(
        ov.common, [&](const std::vector<Structure>& moved, const std::vector<Structure>& kept) {
          if (kept.empty()) return false;
          const Context inner = outer.compose(Context::around(k, kept));
          const bool has_idem = std::find(kept.begin(), kept.end(), idem) != kept.end();
          // The context's own t (in a Par) or f (in a Times) may have absorbed
          // an identical unit coming from either filler.
          const int variants = has_idem ? 4 : 1;
          for (int v = 0; v < variants; ++v) {
            auto lhs = concat(ov.only_left, moved);
            auto rhs = concat(ov.only_right, moved);
            if (v & 1) lhs.push_back(idem);
            if (v & 2) rhs.push_back(idem);
            if (decompose(make_connective(k, std::move(lhs)), make_connective(k, std::move(rhs)),
                          inner, k, visit, seen)) {
              return true;
            }
          }
          return false;
        });
    if (stop) return true;
  }
  return false;
}

}  // namespace

std::pair<Structure, Structure> instantiate(RuleName rule, const Bindings& b) {
  switch (rule) {
    case RuleName::AiDown:
    case RuleName::AiUp:
    case RuleName::FaiUp: {
      if (!b.atom) throw std::invalid_argument("missing binding atom");
      const Structure a = Structure::atom(*b.atom);
      const Structure na = Structure::atom(*b.atom, Polarity::Negative);
      if (rule == RuleName::AiDown) return {Structure::t(), par2(a, na)};
      return {times2(a, na), Structure::f()};
    }
    case RuleName::IDown: {
      const auto& r = need(b.r, "R");
      return {Structure::t(), par2(r, negate(r))};
    }
    case RuleName::IUp: {
      const auto& r = need(b.r, "R");
      return {times2(r, negate(r)), Structure::f()};
    }
    case RuleName::Switch: {
      const auto& r = need(b.r, "R");
      const auto& u = need(b.u, "U");
      const auto& t = need(b.t, "T");
      return {times2(par2(r, u), t), par2(times2(r, t), u)};
    }
    case RuleName::CDown: {
      const auto& r = normalize(need(b.r, "R"));
      return {par2(r, r), r};
    }
    case RuleName::CUp: {
      const auto& r = normalize(need(b.r, "R"));
      return {r, times2(r, r)};
    }
    case RuleName::WDown: return {Structure::f(), normalize(need(b.r, "R"))};
    case RuleName::WUp: return {normalize(need(b.r, "R")), Structure::t()};
  }
  throw std::invalid_argument("unknown rule");
}

std::optional<Bindings> match_schema(RuleName rule, const Structure& l, const Structure& r) {
  switch (rule) {
    case RuleName::AiDown:
      if (!l.is_true()) return std::nullopt;
      if (auto a = complementary_pair(r, Kind::Par)) return Bindings{.atom = *a};
      return std::nullopt;
    case RuleName::AiUp:
    case RuleName::FaiUp:
      if (!r.is_false()) return std::nullopt;
      if (auto a = complementary_pair(l, Kind::Times)) return Bindings{.atom = *a};
      return std::nullopt;
    case RuleName::IDown:
      if (!l.is_true()) return std::nullopt;
      if (auto R = split_dual_pair(r, Kind::Par)) return Bindings{.r = *R};
      return std::nullopt;
    case RuleName::IUp:
      if (!r.is_false()) return std::nullopt;
      if (auto R = split_dual_pair(l, Kind::Times)) return Bindings{.r = *R};
      return std::nullopt;
    case RuleName::Switch:
      return match_switch(l, r);
    case RuleName::CDown:
      if (par2(r, r) == l) return Bindings{.r = r};
      return std::nullopt;
    case RuleName::CUp:
      if (times2(l, l) == r) return Bindings{.r = l};
      return std::nullopt;
    case RuleName::WDown:
      if (l.is_false()) return Bindings{.r = r};
      return std::nullopt;
    case RuleName::WUp:
      if (r.is_true()) return Bindings{.r = l};
      return std::nullopt;
  }
  return std::nullopt;
}

bool for_each_decomposition(const Structure& premise, const Structure& conclusion,
                            const std::function<bool(const Decomposition&)>& visit) {
  std::set<SeenKey> seen;
  return decompose(normalize(premise), normalize(conclusion), Context(), std::nullopt, visit,
                   seen);
}

ValidationResult validate_step(const Structure& premise, const Structure& conclusion,
                               RuleName rule) {
  const RuleName schema = rule == RuleName::FaiUp ? RuleName::AiUp : rule;
  std::optional<StepInstance> found;
  std::optional<StepInstance> violating;
  for_each_decomposition(premise, conclusion, [&](const Decomposition& d) {
    auto b = match_schema(schema, d.premise_filler, d.conclusion_filler);
    if (!b) return false;
    StepInstance inst{rule, d.context, d.premise_filler, d.conclusion_filler, *b};
    if (rule == RuleName::FaiUp && !atom_names(d.context.term()).contains(*b->atom)) {
      if (!violating) violating = std::move(inst);
      return false;
    }
    found = std::move(inst);
    return true;
  });
  if (found) return *found;
  if (violating) {
    return {StepFailure::ProvisoViolation,
            "cut on " + *violating->bindings.atom + " but neither " + *violating->bindings.atom +
                " nor -" + *violating->bindings.atom + " occurs in the context " +
                to_string(violating->context)};
  }
  return {StepFailure::NoWitness, to_string(normalize(premise)) + " / " +
                                      to_string(normalize(conclusion)) + " is not an instance of " +
                                      std::string(rule_name(rule))};
}

StepValidator kernel_validator() {
  return [](const Structure& p, const Structure& c, RuleName r) { return validate_step(p, c, r); };
}

namespace {

void add_unique(std::vector<Structure>& out, std::set<Structure>& seen, Structure s) {
  if (seen.insert(s).second) out.push_back(std::move(s));
}

}  // namespace

std::vector<Structure> premises_of(const Structure& conclusion_in, RuleName rule) {
  if (!is_finitary_upward(rule)) throw InfinitaryRule(rule);
  const Structure conclusion = normalize(conclusion_in);
  std::vector<Structure> out;
  std::set<Structure> seen;
  switch (rule) {
    case RuleName::AiDown:
      for (const auto& p : positions(conclusion)) {
        if (complementary_pair(p.filler, Kind::Par)) {
          add_unique(out, seen, p.context.plug(Structure::t()));
        }
      }
      break;
    case RuleName::Switch:
      add_unique(out, seen, conclusion);
      for (const auto& p : positions(conclusion)) {
        const auto kids = view_as(Kind::Par, p.filler);
        if (kids.size() < 2) continue;
        for (std::size_t q = 0; q < kids.size(); ++q) {
          if (q > 0 && kids[q] == kids[q - 1]) continue;
          std::vector<Structure> others = kids;
          others.erase(others.begin() + static_cast<std::ptrdiff_t>(q));
          const Structure U = make_connective(Kind::Par, others);
          for_each_split(view_as(Kind::Times, kids[q]),
                         [&](const std::vector<Structure>& sel, const std::vector<Structure>& rest) {
                           const Structure R = make_connective(Kind::Times, sel);
                           const Structure T = make_connective(Kind::Times, rest);
                           add_unique(out, seen, p.context.plug(times2(par2(R, U), T)));
                           return false;
                         });
        }
        for_each_split(kids, [&](const std::vector<Structure>& sel,
                                 const std::vector<Structure>& rest) {
          if (sel.empty() || rest.empty()) return false;
          const Structure T = make_connective(Kind::Par, sel);
          const Structure U = make_connective(Kind::Par, rest);
          add_unique(out, seen, p.context.plug(times2(par2(Structure::t(), U), T)));
          return false;
        });
      }
      break;
    case RuleName::CDown:
      for (const auto& p : positions(conclusion)) {
        add_unique(out, seen, p.context.plug(par2(p.filler, p.filler)));
      }
      break;
    case RuleName::WDown:
      for (const auto& p : positions_with_units(conclusion)) {
        add_unique(out, seen, p.context.plug(Structure::f()));
      }
      break;
    case RuleName::FaiUp: {
      std::vector<Position> cut_sites;
      for (const auto& p : positions_with_units(conclusion)) {
        if (p.filler.is_false()) cut_sites.push_back(p);
        // An f already sitting in a Times absorbs the cut's f: (X, f) = (X, f, f).
        const auto kids = view_as(Kind::Times, p.filler);
        if (std::find(kids.begin(), kids.end(), Structure::f()) != kids.end()) {
          cut_sites.push_back({p.context.compose(Context::around(Kind::Times, kids)),
                               Structure::f()});
        }
      }
      for (const auto& site : cut_sites) {
        for (const auto& name : atom_names(site.context.term())) {
          add_unique(out, seen,
                     site.context.plug(times2(Structure::atom(name),
                                              Structure::atom(name, Polarity::Negative))));
        }
      }
      break;
    }
    default:
      break;
  }
  return out;
}

bool rule_direction_sound(RuleName rule) {
  const Structure R = Structure::atom("r");
  const Structure U = Structure::atom("u");
  const Structure T = Structure::atom("v");
  Bindings b{.atom = "a", .r = R, .u = U, .t = T};
  // Exercise compound instantiations as well as atomic ones.
  const std::vector<Structure> fillers = {R, par2(R, U), times2(R, negate(U))};
  for (const auto& filler : fillers) {
    b.r = filler;
    auto [premise, conclusion] = instantiate(rule, b);
    if (!entails(premise, conclusion)) return false;
  }
  return true;
}

}  // namespace deep
