#include "cos/proof_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cos/parser.hpp"

namespace deep {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Derivation read_proof(std::string_view text) {
  std::optional<Structure> premise;
  std::vector<Step> steps;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ProofFileError(line_no, "expected '<label>: <structure>'");
    const std::string_view label = trim(line.substr(0, colon));
    const std::string_view body = trim(line.substr(colon + 1));
    Structure s;
    try {
      s = parse(body);
    } catch (const ParseError& e) {
      throw ProofFileError(line_no, e.what());
    }
    if (!premise) {
      if (label != "premise") throw ProofFileError(line_no, "first entry must be 'premise:'");
      premise = s;
      continue;
    }
    if (label == "premise") throw ProofFileError(line_no, "duplicate premise");
    auto rule = rule_from_name(label);
    if (!rule) throw ProofFileError(line_no, "unknown rule '" + std::string(label) + "'");
    steps.push_back({*rule, s});
  }
  if (!premise) throw ProofFileError(std::max<std::size_t>(line_no, 1), "missing 'premise:' line");
  return Derivation(*premise, std::move(steps));
}

Derivation read_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_proof(buf.str());
}

std::string write_proof(const Derivation& d) {
  std::string out = "premise: " + to_string(d.premise()) + "\n";
  for (const auto& s : d.steps()) {
    out += rule_name(s.rule);
    out += ": " + to_string(s.result) + "\n";
  }
  return out;
}

}  // namespace deep
