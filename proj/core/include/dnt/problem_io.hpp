#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dnt/mcdm.hpp"

namespace dnt {

/// Problem-file syntax or validation error with its source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::string section,
             const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& section() const { return section_; }

 private:
  int line_;
  int column_;
  std::string section_;
};

/// The [options] section of a problem file.
struct FileOptions {
  std::optional<std::string> msd_threshold;
  std::optional<double> epsilon_override;
  int precision = 4;

  bool operator==(const FileOptions&) const = default;
};

struct ParsedProblem {
  DecisionProblem problem;
  FileOptions options;
};

/// Parses the sectioned problem-file format (see docs/problem-format.md).
/// Unknown sections and keys are rejected; diagnostics carry line/column and
/// the section they occurred in.
ParsedProblem parse_problem(std::string_view text);

/// Renders a problem in canonical form; parsing the output yields an equal
/// problem. Labels must be plain tokens (no whitespace or punctuation that
/// the grammar reserves).
std::string render_problem(const DecisionProblem& p, const FileOptions& options);

}  // namespace dnt
