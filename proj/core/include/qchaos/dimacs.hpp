#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qchaos/formula.hpp"

namespace qchaos::dimacs {

enum class Severity { warning, error };

struct ParseDiagnostic {
  std::uint32_t line = 1;  // 1-based input line
  std::string message;
  Severity severity = Severity::error;

  std::string to_string() const;  // "line 3: error: ..."
};

/// Thrown for unrecoverable input; carries the diagnostic that stopped parsing.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(ParseDiagnostic diag);
  const ParseDiagnostic& diagnostic() const noexcept { return diag_; }

 private:
  ParseDiagnostic diag_;
};

struct ParseResult {
  ClauseSet formula;
  std::vector<ParseDiagnostic> warnings;
};

/// Parses DIMACS CNF. Accepts 'c' comment lines anywhere, clauses spanning
/// lines, CRLF endings, and the SATLIB '%' trailer (everything after it is
/// ignored). A declared clause count that disagrees with the actual count is
/// reported as a warning.
ParseResult parse(std::string_view text);

std::string serialize(const ClauseSet& cs);

}  // namespace qchaos::dimacs
