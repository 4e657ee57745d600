#include "cos/context.hpp"

#include <algorithm>

#include <functional>
#include <set>
#include <stdexcept>

#include "multiset.hpp"

namespace deep {

namespace {

std::size_t count_holes(const Structure& s) {
  if (s.is_hole()) return 1;
  std::size_t n = 0;
  for (const auto& c : s.children()) n += count_holes(c);
  return n;
}

Structure replace_hole(const Structure& term, const Structure& filler) {
  if (term.is_hole()) return filler;
  if (!term.contains_hole()) return term;
  std::vector<Structure> kids;
  kids.reserve(term.children().size());
  for (const auto& c : term.children()) kids.push_back(replace_hole(c, filler));
  return term.is_par() ? Structure::raw_par(std::move(kids))
                       : Structure::raw_times(std::move(kids));
}

// Multiset difference of two sorted lists; nullopt unless `sub` is contained.
std::optional<std::vector<Structure>> remove_all(const std::vector<Structure>& from,
                                                 std::span<const Structure> sub) {
  std::vector<Structure> rest;
  std::size_t j = 0;
  for (const auto& x : from) {
    if (j < sub.size() && x == sub[j]) {
      ++j;
    } else {
      rest.push_back(x);
    }
  }
  if (j != sub.size()) return std::nullopt;
  return rest;
}

}  // namespace

Context::Context() : term_(hole_structure()) {}

Context::Context(Structure term) : term_(normalize(term)) {
  if (count_holes(term_) != 1) {
    throw std::invalid_argument("context must contain exactly one hole: " + to_string(term_));
  }
}

Context Context::around(Kind connective, std::vector<Structure> siblings) {
  siblings.push_back(hole_structure());
  return Context(connective == Kind::Par ? Structure::raw_par(std::move(siblings))
                                         : Structure::raw_times(std::move(siblings)));
}

Structure Context::plug(const Structure& filler) const {
  return normalize(replace_hole(term_, filler));
}

Context Context::compose(const Context& inner) const {
  return Context(replace_hole(term_, inner.term_));
}

std::optional<Structure> Context::extract(const Structure& s) const {
  if (term_.is_hole()) return normalize(s);
  const Kind k = term_.kind();
  std::vector<Structure> siblings;
  Structure inner;
  for (const auto& c : term_.children()) {
    if (c.contains_hole()) {
      inner = c;
    } else {
      siblings.push_back(c);
    }
  }
  auto rest = remove_all(view_as(k, normalize(s)), siblings);
  if (!rest) return std::nullopt;
  if (inner.is_hole()) return make_connective(k, std::move(*rest));
  if (rest->size() != 1) return std::nullopt;
  return Context(inner).extract(rest->front());
}

std::string to_string(const Context& c) { return to_string(c.term()); }

namespace {

void collect_positions(const Structure& s, const Context& outer, std::vector<Position>& out) {
  out.push_back({outer, s});
  if (!s.is_composite()) return;
  const Kind k = s.kind();
  const std::size_t n = s.children().size();
  detail::for_each_split(s.children(), [&](const std::vector<Structure>& selected,
                                           const std::vector<Structure>& rest) {
    if (selected.empty() || selected.size() == n) return false;
    Context ctx = outer.compose(Context::around(k, rest));
    if (selected.size() == 1) {
      collect_positions(selected.front(), ctx, out);
    } else {
      out.push_back({ctx, make_connective(k, selected)});
    }
    return false;
  });
}

}  // namespace

std::vector<Position> positions(const Structure& s) {
  std::vector<Position> out;
  collect_positions(normalize(s), Context(), out);
  return out;
}

std::vector<Position> positions_with_units(const Structure& s) {
  auto base = positions(s);
  std::vector<Position> out = base;
  for (const auto& p : base) {
    out.push_back({p.context.compose(Context::around(Kind::Times, {p.filler})), Structure::t()});
    out.push_back({p.context.compose(Context::around(Kind::Par, {p.filler})), Structure::f()});
  }
  std::set<std::pair<Structure, Structure>> seen;
  std::vector<Position> unique;
  for (auto& p : out) {
    if (seen.emplace(p.context.term(), p.filler).second) unique.push_back(std::move(p));
  }
  return unique;
}

}  // namespace deep
