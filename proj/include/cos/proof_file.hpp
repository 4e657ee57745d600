#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cos/derivation.hpp"

namespace deep {

// Line-oriented derivation files:
//
//   # comment
//   premise: t
//   ai-down: [a, -a]
//
// Blank lines and lines starting with '#' are skipped.

class ProofFileError : public std::runtime_error {
 public:
  ProofFileError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  /// One-based line number.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses a derivation; steps are not checked.
Derivation read_proof(std::string_view text);
Derivation read_proof_file(const std::string& path);

std::string write_proof(const Derivation& d);

}  // namespace deep
