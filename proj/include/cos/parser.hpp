#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cos/structure.hpp"

namespace deep {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("at column " + std::to_string(position + 1) + ": " + message),
        position_(position) {}

  /// Zero-based offset into the parsed text.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the ASCII structure grammar
///
///   structure := 't' | 'f' | '-' structure | ATOM
///              | '[' structure (',' structure)+ ']'
///              | '(' structure (',' structure)+ ')'
///   ATOM      := [a-z][a-z0-9_]*
///
/// Negation may sit on any subterm and is pushed to the atoms. The result is
/// canonical.
Structure parse(std::string_view text);

/// Same grammar, but the returned term keeps its written shape (negations
/// are still pushed inward).
Structure parse_raw(std::string_view text);

}  // namespace deep
