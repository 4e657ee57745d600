#include "cos/parser.hpp"

#include <cctype>
#include <vector>

namespace deep {

namespace {

// De Morgan on a raw term, without normalizing.
Structure push_negation(const Structure& s) {
  switch (s.kind()) {
    case Kind::True: return Structure::f();
    case Kind::False: return Structure::t();
    case Kind::Atom: return Structure::atom(s.name(), Polarity::Negative);
    case Kind::NegAtom: return Structure::atom(s.name(), Polarity::Positive);
    case Kind::Hole: return s;
    case Kind::Par:
    case Kind::Times: break;
  }
  std::vector<Structure> kids;
  for (const auto& c : s.children()) kids.push_back(push_negation(c));
  return s.is_par() ? Structure::raw_times(std::move(kids)) : Structure::raw_par(std::move(kids));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Structure parse_all() {
    Structure s = parse_structure();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  Structure parse_structure() {
    if (at_end()) fail("expected a structure");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return push_negation(parse_structure());
    }
    if (c == '[' || c == '(') return parse_list(c);
    if (std::islower(static_cast<unsigned char>(c))) return parse_name();
    fail(std::string("unexpected character '") + c + "'");
  }

  Structure parse_name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::islower(static_cast<unsigned char>(text_[pos_])) ||
            std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (name == "t") return Structure::t();
    if (name == "f") return Structure::f();
    return Structure::atom(std::move(name));
  }

  Structure parse_list(char open) {
    const char close = open == '[' ? ']' : ')';
    const std::size_t start = pos_;
    ++pos_;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == close) {
      pos_ = start;
      fail("empty bracket pair");
    }
    std::vector<Structure> kids;
    kids.push_back(parse_structure());
    while (true) {
      if (at_end()) fail(std::string("expected ',' or '") + close + "'");
      if (text_[pos_] == ',') {
        ++pos_;
        kids.push_back(parse_structure());
        continue;
      }
      if (text_[pos_] == close) {
        ++pos_;
        break;
      }
      fail(std::string("expected ',' or '") + close + "'");
    }
    if (kids.size() < 2) {
      pos_ = start;
      fail("a bracket needs at least two structures");
    }
    return open == '[' ? Structure::raw_par(std::move(kids)) : Structure::raw_times(std::move(kids));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Structure parse_raw(std::string_view text) { return Parser(text).parse_all(); }

Structure parse(std::string_view text) { return normalize(parse_raw(text)); }

}  // namespace deep
