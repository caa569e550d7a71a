#include "cli/commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "qchaos/error.hpp"
#include "qchaos/extended_precision.hpp"
#include "qchaos/qsim.hpp"

namespace qchaos::cli {

using nlohmann::json;

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* decision_name(Decision d) { return d == Decision::sat ? "SAT" : "UNSAT"; }

int exit_code(Decision d) { return d == Decision::sat ? kExitSat : kExitUnsat; }

void print_warnings(const dimacs::ParseResult& parsed, std::ostream& err) {
  for (const auto& w : parsed.warnings) err << "c " << w.to_string() << '\n';
}

// Runs body and maps the library's exceptions to exit code 1.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const dimacs::ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    err << "error: resource limit: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace

std::string to_string(Method m) { return m == Method::counting ? "counting" : "statevector"; }

std::optional<Method> parse_method(std::string_view text) {
  if (text == "counting") return Method::counting;
  if (text == "statevector") return Method::statevector;
  return std::nullopt;
}

SolveReport solve(const ClauseSet& cs, const SolveOptions& options, std::string file) {
  const auto start = std::chrono::steady_clock::now();

  SolveReport report;
  report.file = std::move(file);
  report.n = cs.num_vars();
  report.m = cs.num_clauses();
  report.method = options.method;
  report.a = options.a;

  if (options.method == Method::statevector) {
    const auto outcome = qsim::run_statevector_pipeline(cs);
    report.r = outcome.roots;
    report.q_squared = outcome.q_squared_exact;
    report.q_squared_float = outcome.probability;
  } else {
    const std::uint64_t r = count_roots(cs);
    const auto qs = qsim::ReducedQubitState::from_rational(Rational::dyadic(r, cs.num_vars()));
    report.r = r;
    report.q_squared = qs.q_squared_exact;
    report.q_squared_float = qs.q_squared;
  }

  const auto params = options.max_steps
                          ? amplifier::LogisticParams(options.a, *options.max_steps)
                          : amplifier::LogisticParams::for_variables(cs.num_vars(), options.a);
  report.max_steps = params.max_steps();
  const auto rho0 = qsim::reduced_density(
      qsim::ReducedQubitState{report.q_squared, report.q_squared_float});
  report.first_crossing = amplifier::find_first_crossing(rho0.p1, params);
  report.decision = report.first_crossing ? Decision::sat : Decision::unsat;

  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

std::string format_report(const SolveReport& r, bool as_json) {
  if (as_json) {
    json j;
    j["file"] = r.file;
    j["n"] = r.n;
    j["m"] = r.m;
    j["r"] = r.r ? json(*r.r) : json(nullptr);
    j["q_squared"] = r.q_squared.to_string();
    j["q_squared_float"] = r.q_squared_float;
    j["first_crossing"] = r.first_crossing ? json(*r.first_crossing) : json(nullptr);
    j["decision"] = decision_name(r.decision);
    j["method"] = to_string(r.method);
    j["a"] = r.a;
    j["max_steps"] = r.max_steps;
    j["wall_time_ms"] = r.wall_time_ms;
    return j.dump() + "\n";
  }
  std::ostringstream out;
  out << "file:           " << (r.file.empty() ? "-" : r.file) << '\n'
      << "variables:      " << r.n << '\n'
      << "clauses:        " << r.m << '\n'
      << "method:         " << to_string(r.method) << '\n';
  if (r.r) out << "roots:          " << *r.r << '\n';
  out << "q_squared:      " << r.q_squared.to_string() << " (" << fmt17(r.q_squared_float) << ")\n"
      << "a:              " << extended::shortest_decimal(r.a) << '\n'
      << "max_steps:      " << r.max_steps << '\n'
      << "first_crossing: " << (r.first_crossing ? std::to_string(*r.first_crossing) : "none")
      << '\n'
      << "wall_time_ms:   " << r.wall_time_ms << '\n'
      << "s " << (r.decision == Decision::sat ? "SATISFIABLE" : "UNSATISFIABLE") << '\n';
  return out.str();
}

dimacs::ParseResult read_formula(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return dimacs::parse(text);
}

int cmd_solve(const std::string& path, const SolveOptions& options, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto parsed = read_formula(path);
    print_warnings(parsed, err);
    const auto report = solve(parsed.formula, options, path);
    if (report.r && (*report.r > 0) != (report.decision == Decision::sat)) {
      err << "warning: amplifier decision " << decision_name(report.decision)
          << " disagrees with root count r=" << *report.r << '\n';
    }
    out << format_report(report, options.json);
    return exit_code(report.decision);
  });
}

std::string trace_csv(const amplifier::AmplifierTrace& trace) {
  std::string csv = "m,M_m\n";
  for (const auto& s : trace.samples) {
    csv += std::to_string(s.m);
    csv += ',';
    csv += fmt17(s.value);
    csv += '\n';
  }
  return csv;
}

int cmd_trace(const TraceOptions& options, std::ostream& out, std::ostream& err) {
  if (options.file.has_value() == options.q2.has_value()) {
    err << "error: trace needs exactly one of a DIMACS file or --q2\n";
    return kExitError;
  }
  return guarded(err, [&] {
    double x0 = 0.0;
    std::uint32_t steps = 0;
    if (options.q2) {
      if (!options.max_steps) {
        err << "error: --max-steps is required with --q2\n";
        return kExitError;
      }
      x0 = *options.q2;
      steps = *options.max_steps;
    } else {
      const auto parsed = read_formula(*options.file);
      print_warnings(parsed, err);
      SolveOptions so;
      so.a = options.a;
      so.max_steps = options.max_steps;
      so.method = options.method;
      const auto report = solve(parsed.formula, so, *options.file);
      x0 = report.q_squared_float;
      steps = report.max_steps;
    }
    const auto trace = amplifier::iterate_map(x0, amplifier::LogisticParams(options.a, steps));
    out << trace_csv(trace);
    err << "first_crossing="
        << (trace.first_crossing ? std::to_string(*trace.first_crossing) : "none") << '\n';
    return kExitOk;
  });
}

OracleReport oracle(const ClauseSet& cs) {
  OracleReport rep;
  rep.n = cs.num_vars();
  rep.m = cs.num_clauses();
  rep.r = count_roots(cs);
  rep.decision = rep.r > 0 ? Decision::sat : Decision::unsat;
  return rep;
}

int cmd_oracle(const std::string& path, bool as_json, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto parsed = read_formula(path);
    print_warnings(parsed, err);
    const auto rep = oracle(parsed.formula);
    if (as_json) {
      out << json{{"file", path}, {"n", rep.n}, {"m", rep.m}, {"r", rep.r},
                  {"decision", decision_name(rep.decision)}}
                 .dump()
          << '\n';
    } else {
      out << "r: " << rep.r << '\n' << "decision: " << decision_name(rep.decision) << '\n';
    }
    return exit_code(rep.decision);
  });
}

std::string format_bounds_table(const amplifier::PropositionReport& report) {
  std::ostringstream out;
  char line[200];
  std::snprintf(line, sizeof(line), "%4s %8s %6s %6s %10s %10s %6s  %s\n", "n", "k", "m*",
                "m*ext", "lower", "lower_ex", "upper", "status");
  out << line;
  for (const auto& r : report.rows) {
    auto opt = [](const std::optional<std::uint32_t>& v) {
      return v ? std::to_string(*v) : std::string("-");
    };
    auto bound = [&](const std::optional<double>& v) {
      if (!r.bounds_applicable) return std::string("n/a");
      if (!v) return std::string("-");
      char b[32];
      std::snprintf(b, sizeof(b), "%.3f", *v);
      return std::string(b);
    };
    const std::string upper = r.bounds_applicable ? std::to_string(r.upper_bound) : "n/a";
    std::snprintf(line, sizeof(line), "%4u %8llu %6s %6s %10s %10s %6s  %s", r.n,
                  static_cast<unsigned long long>(r.k), opt(r.crossing).c_str(),
                  opt(r.crossing_extended).c_str(), bound(r.lower_bound_paper).c_str(),
                  bound(r.lower_bound_exact).c_str(), upper.c_str(), r.pass ? "pass" : "FAIL");
    out << line;
    if (!r.note.empty()) out << "  (" << r.note << ')';
    out << '\n';
  }
  return out.str();
}

int cmd_verify_bounds(const VerifyBoundsOptions& options, std::ostream& out, std::ostream& err) {
  if (options.n_min < 1 || options.n_max < options.n_min) {
    err << "error: need 1 <= n-min <= n-max\n";
    return kExitError;
  }
  return guarded(err, [&] {
    std::vector<std::uint32_t> ns;
    for (auto n = options.n_min; n <= options.n_max; ++n) ns.push_back(n);
    const auto report =
        amplifier::verify_propositions(ns, options.k, options.a, {options.precision_bits});
    if (options.json) {
      json rows = json::array();
      for (const auto& r : report.rows) {
        rows.push_back({{"n", r.n},
                        {"k", r.k},
                        {"x0", r.x0},
                        {"m_star", r.crossing ? json(*r.crossing) : json(nullptr)},
                        {"m_star_extended",
                         r.crossing_extended ? json(*r.crossing_extended) : json(nullptr)},
                        {"lower_bound", r.lower_bound_paper ? json(*r.lower_bound_paper)
                                                            : json(nullptr)},
                        {"lower_bound_exact",
                         r.lower_bound_exact ? json(*r.lower_bound_exact) : json(nullptr)},
                        {"upper_bound", r.upper_bound},
                        {"bounds_applicable", r.bounds_applicable},
                        {"pass", r.pass},
                        {"note", r.note}});
      }
      out << json{{"a", report.a}, {"all_pass", report.all_pass()}, {"rows", rows}}.dump(2)
          << '\n';
    } else {
      out << format_bounds_table(report);
    }
    return report.all_pass() ? kExitOk : kExitError;
  });
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << dimacs::serialize(generate_random_kcnf(options));
    return kExitOk;
  });
}

}  // namespace qchaos::cli
