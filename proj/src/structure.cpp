#include "cos/structure.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace deep {

struct Structure::Node {
  Kind kind;
  std::string name;
  std::vector<Structure> children;
  std::size_t hash = 0;
  std::size_t leaves = 1;
  bool canonical = false;
  bool has_hole = false;
};

namespace {

int rank(Kind k) { return static_cast<int>(k); }

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Structure Structure::make(Kind kind, std::string name, std::vector<Structure> children,
                          bool canonical) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->children = std::move(children);
  node->canonical = canonical;
  std::size_t h = mix(0, static_cast<std::size_t>(kind) + 1);
  h = mix(h, std::hash<std::string>{}(node->name));
  if (!node->children.empty()) {
    node->leaves = 0;
    for (const auto& c : node->children) {
      h = mix(h, c.hash());
      node->leaves += c.leaf_count();
      node->has_hole = node->has_hole || c.contains_hole();
    }
  }
  node->has_hole = node->has_hole || kind == Kind::Hole;
  node->hash = h;
  return Structure(std::move(node));
}

Structure::Structure() : Structure(t()) {}

Structure Structure::t() {
  static const Structure unit = make(Kind::True, {}, {}, true);
  return unit;
}

Structure Structure::f() {
  static const Structure unit = make(Kind::False, {}, {}, true);
  return unit;
}

Structure hole_structure() {
  static const Structure hole = Structure::make(Kind::Hole, {}, {}, true);
  return hole;
}

Structure Structure::atom(std::string name, Polarity polarity) {
  if (name.empty()) throw std::invalid_argument("atom name must not be empty");
  return make(polarity == Polarity::Positive ? Kind::Atom : Kind::NegAtom, std::move(name), {},
              true);
}

Structure Structure::raw_par(std::vector<Structure> children) {
  return make(Kind::Par, {}, std::move(children), false);
}

Structure Structure::raw_times(std::vector<Structure> children) {
  return make(Kind::Times, {}, std::move(children), false);
}

Structure Structure::par(std::vector<Structure> children) {
  return normalize(raw_par(std::move(children)));
}

Structure Structure::times(std::vector<Structure> children) {
  return normalize(raw_times(std::move(children)));
}

Kind Structure::kind() const { return node_->kind; }
const std::string& Structure::name() const { return node_->name; }
std::span<const Structure> Structure::children() const { return node_->children; }
std::size_t Structure::hash() const { return node_->hash; }
bool Structure::is_canonical() const { return node_->canonical; }
std::size_t Structure::leaf_count() const { return node_->leaves; }
bool Structure::contains_hole() const { return node_->has_hole; }

bool operator==(const Structure& a, const Structure& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Structure& a, const Structure& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = rank(a.kind()) <=> rank(b.kind()); c != 0) return c;
  switch (a.kind()) {
    case Kind::True:
    case Kind::False:
    case Kind::Hole:
      return std::strong_ordering::equal;
    case Kind::Atom:
    case Kind::NegAtom:
      return a.name().compare(b.name()) <=> 0;
    case Kind::Par:
    case Kind::Times:
      break;
  }
  auto ac = a.children();
  auto bc = b.children();
  for (std::size_t i = 0; i < ac.size() && i < bc.size(); ++i) {
    if (auto c = ac[i] <=> bc[i]; c != 0) return c;
  }
  return ac.size() <=> bc.size();
}

Structure unit_of(Kind connective) {
  return connective == Kind::Par ? Structure::f() : Structure::t();
}

namespace {

// The unit that absorbs duplicates of itself inside the connective:
// [t,t] = t and (f,f) = f.
Kind idempotent_unit(Kind connective) {
  return connective == Kind::Par ? Kind::True : Kind::False;
}

}  // namespace

Structure make_connective(Kind connective, std::vector<Structure> children) {
  std::vector<Structure> flat;
  flat.reserve(children.size());
  for (auto& c : children) {
    Structure n = normalize(c);
    if (n.kind() == connective) {
      flat.insert(flat.end(), n.children().begin(), n.children().end());
    } else {
      flat.push_back(std::move(n));
    }
  }
  const Kind neutral = unit_of(connective).kind();
  const Kind idem = idempotent_unit(connective);
  bool seen_idem = false;
  std::erase_if(flat, [&](const Structure& c) {
    if (c.kind() == neutral) return true;
    if (c.kind() == idem) {
      if (seen_idem) return true;
      seen_idem = true;
    }
    return false;
  });
  if (flat.empty()) return unit_of(connective);
  if (flat.size() == 1) return flat.front();
  std::sort(flat.begin(), flat.end());
  return Structure::make(connective, {}, std::move(flat), true);
}

Structure normalize(const Structure& s) {
  if (s.is_canonical()) return s;
  std::vector<Structure> kids(s.children().begin(), s.children().end());
  return make_connective(s.kind(), std::move(kids));
}

namespace {

Structure negate_raw(const Structure& s) {
  switch (s.kind()) {
    case Kind::True: return Structure::f();
    case Kind::False: return Structure::t();
    case Kind::Hole: return s;
    case Kind::Atom: return Structure::atom(s.name(), Polarity::Negative);
    case Kind::NegAtom: return Structure::atom(s.name(), Polarity::Positive);
    case Kind::Par:
    case Kind::Times: {
      std::vector<Structure> kids;
      kids.reserve(s.children().size());
      for (const auto& c : s.children()) kids.push_back(negate_raw(c));
      return s.is_par() ? Structure::raw_times(std::move(kids))
                        : Structure::raw_par(std::move(kids));
    }
  }
  return s;
}

void collect_atoms(const Structure& s, std::set<Literal>& out) {
  if (s.kind() == Kind::Atom) {
    out.insert({s.name(), Polarity::Positive});
  } else if (s.kind() == Kind::NegAtom) {
    out.insert({s.name(), Polarity::Negative});
  } else {
    for (const auto& c : s.children()) collect_atoms(c, out);
  }
}

Structure substitute_raw(const Structure& s, std::string_view name) {
  if (s.is_literal()) {
    if (s.name() != name) return s;
    return s.kind() == Kind::Atom ? Structure::t() : Structure::f();
  }
  if (!s.is_composite()) return s;
  std::vector<Structure> kids;
  kids.reserve(s.children().size());
  for (const auto& c : s.children()) kids.push_back(substitute_raw(c, name));
  return s.is_par() ? Structure::raw_par(std::move(kids)) : Structure::raw_times(std::move(kids));
}

void print(std::ostream& os, const Structure& s) {
  switch (s.kind()) {
    case Kind::True: os << 't'; return;
    case Kind::False: os << 'f'; return;
    case Kind::Hole: os << '_'; return;
    case Kind::Atom: os << s.name(); return;
    case Kind::NegAtom: os << '-' << s.name(); return;
    case Kind::Par:
    case Kind::Times: break;
  }
  os << (s.is_par() ? '[' : '(');
  bool first = true;
  for (const auto& c : s.children()) {
    if (!first) os << ", ";
    first = false;
    print(os, c);
  }
  os << (s.is_par() ? ']' : ')');
}

}  // namespace

Structure negate(const Structure& s) { return normalize(negate_raw(s)); }

bool equal(const Structure& a, const Structure& b) { return normalize(a) == normalize(b); }

std::set<Literal> atoms_of(const Structure& s) {
  std::set<Literal> out;
  collect_atoms(s, out);
  return out;
}

std::set<std::string> atom_names(const Structure& s) {
  std::set<std::string> out;
  for (const auto& lit : atoms_of(s)) out.insert(lit.name);
  return out;
}

Structure substitute_literal(const Structure& s, std::string_view name) {
  return normalize(substitute_raw(s, name));
}

std::vector<Structure> view_as(Kind connective, const Structure& s) {
  if (s.kind() == connective) return {s.children().begin(), s.children().end()};
  if (s.kind() == unit_of(connective).kind()) return {};
  return {s};
}

std::string to_string(const Structure& s) {
  std::ostringstream os;
  print(os, s);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Structure& s) {
  print(os, s);
  return os;
}

}  // namespace deep
