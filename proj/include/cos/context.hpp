#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cos/structure.hpp"

namespace deep {

/// A structure with exactly one hole, S{ }. The hole is never under a
/// negation because structures are kept in negation normal form.
///
/// The stored term is normalized with the hole treated as an opaque leaf, so
/// two contexts that plug every filler to the same structure usually compare
/// equal. Unit laws never fire on the hole itself.
class Context {
 public:
  /// The trivial context: S{ } = { }.
  Context();

  /// Throws std::invalid_argument unless `term` holds exactly one hole.
  explicit Context(Structure term);

  /// Context K(siblings, { }) for K = Par or Times.
  static Context around(Kind connective, std::vector<Structure> siblings);

  const Structure& term() const { return term_; }
  bool is_trivial() const { return term_.is_hole(); }

  /// S{filler}, canonical.
  Structure plug(const Structure& filler) const;

  /// S{inner}: nests another context into this one's hole.
  Context compose(const Context& inner) const;

  /// Recovers R from a structure of the form S{R} when this context's shape
  /// can be matched against it directly.
  std::optional<Structure> extract(const Structure& s) const;

  /// Literals occurring in the context outside the hole.
  std::set<Literal> atoms() const { return atoms_of(term_); }

  friend bool operator==(const Context&, const Context&) = default;

 private:
  Structure term_;
};

std::string to_string(const Context& c);

struct Position {
  Context context;
  Structure filler;
};

/// Every decomposition s = S{R}: the trivial one first, then for each
/// composite node every sub-multiset of its children (size >= 1, proper), and
/// recursively inside single selected children. Deterministic order, no
/// duplicates.
std::vector<Position> positions(const Structure& s);

/// positions() plus the decompositions whose filler is a unit hidden by the
/// unit equations: R = (R, t) and R = [R, f] for every selected R.
std::vector<Position> positions_with_units(const Structure& s);

}  // namespace deep
