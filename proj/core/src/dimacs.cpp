#include "qchaos/dimacs.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "qchaos/error.hpp"

namespace qchaos::dimacs {

std::string ParseDiagnostic::to_string() const {
  return "line " + std::to_string(line) + ": " +
         (severity == Severity::error ? "error: " : "warning: ") + message;
}

ParseError::ParseError(ParseDiagnostic diag)
    : std::runtime_error(diag.to_string()), diag_(std::move(diag)) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename Int>
std::optional<Int> to_int(std::string_view tok) {
  Int value{};
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  // from_chars rejects a leading '+', which DIMACS never uses anyway.
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

[[noreturn]] void fail(std::uint32_t line, std::string message) {
  throw ParseError({line, std::move(message), Severity::error});
}

std::string printable(std::string_view tok) {
  std::string out;
  for (char c : tok.substr(0, 32)) {
    const auto u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u < 0x7f) {
      out += c;
    } else {
      static constexpr char hex[] = "0123456789abcdef";
      out += "\\x";
      out += hex[u >> 4];
      out += hex[u & 0xf];
    }
  }
  if (tok.size() > 32) out += "...";
  return out;
}

}  // namespace

ParseResult parse(std::string_view text) {
  std::optional<std::uint32_t> num_vars;
  std::uint64_t declared_clauses = 0;
  std::uint32_t header_line = 0;
  std::vector<Clause> clauses;
  std::vector<int> pending;
  std::uint32_t pending_line = 0;

  std::uint32_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    const std::string_view first = tokens.front();

    if (first.front() == 'c') continue;

    if (first.front() == '%') {
      if (!num_vars) fail(line_no, "'%' trailer before 'p cnf' header");
      break;
    }

    if (first == "p") {
      if (num_vars) fail(line_no, "duplicate 'p' header");
      if (tokens.size() != 4 || tokens[1] != "cnf") {
        fail(line_no, "malformed header; expected 'p cnf <vars> <clauses>'");
      }
      const auto n = to_int<std::uint32_t>(tokens[2]);
      const auto m = to_int<std::uint64_t>(tokens[3]);
      if (!n || !m) fail(line_no, "header counts must be non-negative integers");
      if (*n == 0) fail(line_no, "header declares zero variables");
      num_vars = *n;
      declared_clauses = *m;
      header_line = line_no;
      continue;
    }

    if (!num_vars) fail(line_no, "missing 'p cnf' header before clauses");

    for (const auto tok : tokens) {
      const auto lit = to_int<int>(tok);
      if (!lit) fail(line_no, "invalid literal '" + printable(tok) + "'");
      if (*lit == 0) {
        clauses.push_back(Clause::from_ints(pending));
        pending.clear();
        continue;
      }
      const auto mag = static_cast<std::uint32_t>(*lit < 0 ? -static_cast<long long>(*lit) : *lit);
      if (mag > *num_vars) {
        fail(line_no, "literal " + std::to_string(*lit) + " out of range; header declares " +
                          std::to_string(*num_vars) + " variables");
      }
      if (pending.empty()) pending_line = line_no;
      pending.push_back(*lit);
    }
  }

  if (!num_vars) fail(line_no == 0 ? 1 : line_no, "missing 'p cnf' header");
  if (!pending.empty()) fail(pending_line, "final clause is not terminated by 0");

  ParseResult result{ClauseSet(*num_vars, std::move(clauses)), {}};
  if (result.formula.num_clauses() != declared_clauses) {
    result.warnings.push_back({header_line,
                               "header declares " + std::to_string(declared_clauses) +
                                   " clauses but " +
                                   std::to_string(result.formula.num_clauses()) + " were read",
                               Severity::warning});
  }
  return result;
}

std::string serialize(const ClauseSet& cs) {
  std::ostringstream out;
  out << "p cnf " << cs.num_vars() << ' ' << cs.num_clauses() << '\n';
  for (const auto& clause : cs.clauses()) {
    for (const auto& lit : clause.literals()) {
      out << (lit.negated ? "-" : "") << lit.var << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

}  // namespace qchaos::dimacs
