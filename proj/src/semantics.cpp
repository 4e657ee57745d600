#include "cos/semantics.hpp"

#include <cstdint>
#include <functional>
#include <unordered_map>

#include "cos/inference.hpp"

namespace deep {

namespace {

using AtomIndex = std::unordered_map<std::string, std::size_t>;

bool eval_mask(const Structure& s, const AtomIndex& index, std::uint64_t mask) {
  switch (s.kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom: return (mask >> index.at(s.name())) & 1U;
    case Kind::NegAtom: return !((mask >> index.at(s.name())) & 1U);
    case Kind::Par:
      for (const auto& c : s.children()) {
        if (eval_mask(c, index, mask)) return true;
      }
      return false;
    case Kind::Times:
      for (const auto& c : s.children()) {
        if (!eval_mask(c, index, mask)) return false;
      }
      return true;
    case Kind::Hole: break;
  }
  throw SemanticsError("cannot evaluate a context hole");
}

AtomIndex index_atoms(const std::vector<Structure>& terms) {
  AtomIndex index;
  for (const auto& s : terms) {
    for (const auto& name : atom_names(s)) index.emplace(name, index.size());
  }
  if (index.size() > kMaxTautologyAtoms) {
    throw SemanticsError("too many atoms for a truth table: " + std::to_string(index.size()) +
                         " (limit " + std::to_string(kMaxTautologyAtoms) + ")");
  }
  return index;
}

}  // namespace

bool eval(const Structure& s, const Assignment& v) {
  switch (s.kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Atom:
    case Kind::NegAtom: {
      auto it = v.find(s.name());
      if (it == v.end()) throw SemanticsError("unassigned atom " + s.name());
      return s.kind() == Kind::Atom ? it->second : !it->second;
    }
    case Kind::Par:
      for (const auto& c : s.children()) {
        if (eval(c, v)) return true;
      }
      return false;
    case Kind::Times:
      for (const auto& c : s.children()) {
        if (!eval(c, v)) return false;
      }
      return true;
    case Kind::Hole: break;
  }
  throw SemanticsError("cannot evaluate a context hole");
}

bool is_tautology(const Structure& s) {
  const auto index = index_atoms({s});
  const std::uint64_t rows = std::uint64_t{1} << index.size();
  for (std::uint64_t mask = 0; mask < rows; ++mask) {
    if (!eval_mask(s, index, mask)) return false;
  }
  return true;
}

std::optional<Assignment> falsifying_assignment(const Structure& s) {
  const auto index = index_atoms({s});
  const std::uint64_t rows = std::uint64_t{1} << index.size();
  for (std::uint64_t mask = 0; mask < rows; ++mask) {
    if (eval_mask(s, index, mask)) continue;
    Assignment v;
    for (const auto& [name, bit] : index) v[name] = ((mask >> bit) & 1U) != 0;
    return v;
  }
  return std::nullopt;
}

bool entails(const Structure& premise, const Structure& conclusion) {
  const auto index = index_atoms({premise, conclusion});
  const std::uint64_t rows = std::uint64_t{1} << index.size();
  for (std::uint64_t mask = 0; mask < rows; ++mask) {
    if (eval_mask(premise, index, mask) && !eval_mask(conclusion, index, mask)) return false;
  }
  return true;
}

Structure eval_boolean(const Structure& s) {
  if (!atoms_of(s).empty()) throw SemanticsError("not atom-free: " + to_string(s));
  return normalize(s);
}

namespace {

struct Frame {
  Kind op;
  Structure sibling;        // raw
  Structure sibling_value;  // canonical
  bool hole_first;
};

struct Shape {
  Structure raw;
  Structure value;
};

class UnitAuditor {
 public:
  explicit UnitAuditor(AuditReport& report) : report_(report) {}

  void audit(const Shape& shape) {
    ++report_.shapes;
    if (!shape.value.is_unit()) report_.shapes_collapse_to_units = false;
    if (!shape.value.is_true()) return;
    path_.clear();
    visit(shape.raw, shape.value);
  }

 private:
  void visit(const Structure& x, const Structure& value) {
    fire(x, value);
    if (!x.is_composite()) return;
    const auto& a = x.children()[0];
    const auto& b = x.children()[1];
    const Structure av = normalize(a);
    const Structure bv = normalize(b);
    path_.push_back({x.kind(), b, bv, true});
    visit(a, av);
    path_.back() = {x.kind(), a, av, false};
    visit(b, bv);
    path_.pop_back();
  }

  // Every rule instance whose redex is the raw subterm x (value = its
  // canonical form), with schema variables ranging over units.
  void fire(const Structure& x, const Structure& value) {
    current_ = x;
    if (x.is_literal()) report_.atomic_rules_inert = false;
    const Structure t = Structure::t();
    const Structure f = Structure::f();
    if (value.is_false()) {
      emit(RuleName::WDown, t);
      emit(RuleName::WDown, f);
    }
    emit(RuleName::WUp, t);
    if (value.is_true()) {
      emit(RuleName::IDown, Structure::raw_par({t, f}));
      emit(RuleName::IDown, Structure::raw_par({f, t}));
    }
    emit(RuleName::CUp, Structure::raw_times({x, x}));
    if (value.is_unit()) emit(RuleName::CDown, value);  // x = [x, x] for units
    if (!x.is_composite()) return;
    const auto& a = x.children()[0];
    const auto& b = x.children()[1];
    if (x.is_par() && normalize(a) == normalize(b)) emit(RuleName::CDown, a);
    if (x.is_times()) {
      if (normalize(b) == negate(normalize(a))) emit(RuleName::IUp, f);
      for (int side = 0; side < 2; ++side) {
        const auto& pr = side == 0 ? a : b;
        const auto& other = side == 0 ? b : a;
        if (!pr.is_par()) continue;
        const auto& r = pr.children()[0];
        const auto& u = pr.children()[1];
        emit(RuleName::Switch, Structure::raw_par({Structure::raw_times({r, other}), u}));
        emit(RuleName::Switch, Structure::raw_par({Structure::raw_times({u, other}), r}));
      }
    }
  }

  void emit(RuleName rule, const Structure& contractum) {
    ++report_.instances;
    Structure v = normalize(contractum);
    for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
      v = it->hole_first ? make_connective(it->op, {v, it->sibling_value})
                         : make_connective(it->op, {it->sibling_value, v});
    }
    if (v.is_false()) report_.violations.push_back({rule, rebuild(current_), rebuild(contractum)});
  }

  // Re-inserts `filler` at the current path.
  Structure rebuild(const Structure& filler) const {
    Structure s = filler;
    for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
      std::vector<Structure> kids = it->hole_first ? std::vector{s, it->sibling}
                                                   : std::vector{it->sibling, s};
      s = it->op == Kind::Par ? Structure::raw_par(std::move(kids))
                              : Structure::raw_times(std::move(kids));
    }
    return s;
  }

  AuditReport& report_;
  std::vector<Frame> path_;
  Structure current_;
};

}  // namespace

AuditReport audit_units(std::size_t max_leaves) {
  AuditReport report;
  report.max_leaves = max_leaves;
  UnitAuditor auditor(report);

  // shapes[k]: every binary shape with exactly k leaves. The largest level is
  // streamed instead of stored.
  std::vector<std::vector<Shape>> shapes(max_leaves + 1);
  if (max_leaves >= 1) {
    shapes[1] = {{Structure::t(), Structure::t()}, {Structure::f(), Structure::f()}};
    for (const auto& s : shapes[1]) auditor.audit(s);
  }
  for (std::size_t k = 2; k <= max_leaves; ++k) {
    const bool keep = k < max_leaves;
    for (std::size_t i = 1; i < k; ++i) {
      for (const auto& l : shapes[i]) {
        for (const auto& r : shapes[k - i]) {
          for (Kind op : {Kind::Par, Kind::Times}) {
            Shape s{op == Kind::Par ? Structure::raw_par({l.raw, r.raw})
                                    : Structure::raw_times({l.raw, r.raw}),
                    make_connective(op, {l.value, r.value})};
            auditor.audit(s);
            if (keep) shapes[k].push_back(std::move(s));
          }
        }
      }
    }
  }

  for (RuleName r : kAllRules) {
    if (validate_step(Structure::t(), Structure::f(), r)) report.kernel_rejects_t_to_f = false;
  }
  return report;
}

}  // namespace deep
