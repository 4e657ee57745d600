#pragma once

// Structures of classical propositional logic in the calculus of structures.
//
// A Structure is an immutable, shared term. Terms built with the raw_*
// factories keep whatever shape they were given; everything else in the
// library works on canonical terms produced by normalize():
//
//   * negation only on atoms (NNF),
//   * no Par directly under a Par, no Times directly under a Times,
//   * children sorted by operator<=>,
//   * f removed from Par, t removed from Times, [t,t] -> t, (f,f) -> f,
//   * singleton and empty connectives collapsed.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace deep {

enum class Kind : std::uint8_t { True, False, Hole, Atom, NegAtom, Par, Times };

enum class Polarity : std::uint8_t { Positive, Negative };

struct Literal {
  std::string name;
  Polarity polarity = Polarity::Positive;

  auto operator<=>(const Literal&) const = default;
};

class Structure {
 public:
  /// The unit t.
  Structure();

  static Structure t();
  static Structure f();
  static Structure atom(std::string name, Polarity polarity = Polarity::Positive);
  static Structure literal(const Literal& lit) { return atom(lit.name, lit.polarity); }

  // Canonical constructors: the result is normalized.
  static Structure par(std::vector<Structure> children);
  static Structure times(std::vector<Structure> children);

  // Raw constructors: no flattening, sorting or unit laws.
  static Structure raw_par(std::vector<Structure> children);
  static Structure raw_times(std::vector<Structure> children);

  Kind kind() const;
  bool is_unit() const { return kind() == Kind::True || kind() == Kind::False; }
  bool is_true() const { return kind() == Kind::True; }
  bool is_false() const { return kind() == Kind::False; }
  bool is_hole() const { return kind() == Kind::Hole; }
  bool is_literal() const { return kind() == Kind::Atom || kind() == Kind::NegAtom; }
  bool is_par() const { return kind() == Kind::Par; }
  bool is_times() const { return kind() == Kind::Times; }
  bool is_composite() const { return is_par() || is_times(); }

  /// Atom name; empty for non-literals.
  const std::string& name() const;
  std::span<const Structure> children() const;
  std::size_t hash() const;
  bool is_canonical() const;

  /// Number of leaves (units, literals and holes).
  std::size_t leaf_count() const;
  bool contains_hole() const;

  friend bool operator==(const Structure& a, const Structure& b);
  friend std::strong_ordering operator<=>(const Structure& a, const Structure& b);

 private:
  struct Node;
  explicit Structure(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Structure make(Kind kind, std::string name, std::vector<Structure> children,
                        bool canonical);

  friend Structure make_connective(Kind connective, std::vector<Structure> children);
  friend Structure hole_structure();

  std::shared_ptr<const Node> node_;
};

/// The hole marker. Only Context builds terms containing it.
Structure hole_structure();

/// Canonical form modulo associativity, commutativity and the unit equations.
Structure normalize(const Structure& s);

/// De Morgan negation, pushed to the atoms. Swaps t and f. Result is canonical.
Structure negate(const Structure& s);

/// True iff the canonical forms coincide.
bool equal(const Structure& a, const Structure& b);

/// Literal occurrences. Units are never literals.
std::set<Literal> atoms_of(const Structure& s);
std::set<std::string> atom_names(const Structure& s);

/// Positive occurrences of `name` become t, negative ones f; result canonical.
Structure substitute_literal(const Structure& s, std::string_view name);

/// The Par (resp. Times) view of a structure: its children if it is a node of
/// that kind, nothing if it is that connective's unit, otherwise itself.
std::vector<Structure> view_as(Kind connective, const Structure& s);

/// Builds the canonical connective over `children`, collapsing empty and
/// singleton lists.
Structure make_connective(Kind connective, std::vector<Structure> children);

Structure unit_of(Kind connective);

std::string to_string(const Structure& s);
std::ostream& operator<<(std::ostream& os, const Structure& s);

struct StructureHash {
  std::size_t operator()(const Structure& s) const { return s.hash(); }
};

}  // namespace deep
