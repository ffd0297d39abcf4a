#include "hydent/cli.hpp"

#include "hydent/entropy.hpp"
#include "hydent/oracle.hpp"
#include "hydent/parallel.hpp"
#include "hydent/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace hydent::cli {

void to_json(nlohmann::json& j, const OutputRecord& r) {
  j = nlohmann::json{{"D", r.state.D},       {"Z", r.state.Z},           {"n", r.state.n},
                     {"mu", r.state.mu},     {"radial", r.radial},       {"angular", r.angular},
                     {"total", r.total},     {"method", r.method},       {"radial_err", r.radial_err},
                     {"angular_err", r.angular_err}};
  if (r.wall_time_ms) j["wall_time_ms"] = *r.wall_time_ms;
}

void from_json(const nlohmann::json& j, OutputRecord& r) {
  j.at("D").get_to(r.state.D);
  j.at("Z").get_to(r.state.Z);
  j.at("n").get_to(r.state.n);
  j.at("mu").get_to(r.state.mu);
  j.at("radial").get_to(r.radial);
  j.at("angular").get_to(r.angular);
  j.at("total").get_to(r.total);
  j.at("method").get_to(r.method);
  j.at("radial_err").get_to(r.radial_err);
  j.at("angular_err").get_to(r.angular_err);
  r.wall_time_ms.reset();
  if (j.contains("wall_time_ms")) r.wall_time_ms = j.at("wall_time_ms").get<double>();
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string mu_string(const std::vector<int>& mu) {
  std::string s;
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? ";" : "") + std::to_string(mu[i]);
  return s;
}

}  // namespace

std::string csv_header(bool timing) {
  std::string h = "D,Z,n,mu,radial,angular,total,method,radial_err,angular_err";
  if (timing) h += ",wall_time_ms";
  return h;
}

std::string csv_row(const OutputRecord& r, bool timing) {
  std::string row = std::to_string(r.state.D) + "," + num(r.state.Z) + "," + std::to_string(r.state.n) + "," +
                    mu_string(r.state.mu) + "," + num(r.radial) + "," + num(r.angular) + "," + num(r.total) + "," +
                    r.method + "," + num(r.radial_err) + "," + num(r.angular_err);
  if (timing) row += "," + num(r.wall_time_ms.value_or(0.0));
  return row;
}

namespace {

// raised for bad flags that CLI11 cannot check on its own
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Tolerances {
  RadialOptions radial;
  QuadratureConfig angular{1e-13, 1e-15};
  QuadratureConfig oracle = oracle::kOracleConfig;

  explicit Tolerances(std::optional<double> rel) {
    if (!rel) return;
    if (!(*rel > 0.0)) throw UsageError("--rel-tol must be positive");
    radial.kummer.rel_tol = angular.rel_tol = oracle.rel_tol = *rel;
  }
};

OutputRecord compute_record(const QuantumState& s, bool use_oracle, const Tolerances& tol) {
  const auto start = std::chrono::steady_clock::now();
  OutputRecord r;
  r.state = s;
  if (use_oracle) {
    const EntropyResult e = oracle::total_entropy_oracle(s, tol.oracle);
    r.radial = e.radial;
    r.angular = e.angular;
    r.radial_err = e.radial_err;
    r.angular_err = e.angular_err;
    r.method = to_string(Method::Oracle);
  } else {
    const IntegralResult rad = radial_entropy_closed_detail(s, tol.radial);
    const IntegralResult ang = angular_entropy_gegenbauer_detail(s, tol.angular);
    if (!ang.converged) throw ConvergenceError("angular entropy integral did not converge for " + to_string(s));
    r.radial = rad.value;
    r.angular = ang.value;
    r.radial_err = rad.error_estimate;
    r.angular_err = ang.error_estimate;
    r.method = to_string(Method::ClosedForm);
  }
  r.total = r.radial + r.angular;
  r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw UsageError("--quantum: '" + tok + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--quantum: empty list");
  return out;
}

QuantumState build_state(int D, double Z, const std::string& quantum, bool shorthand) {
  const std::vector<int> q = parse_int_list(quantum);
  if (shorthand) {
    if (q.size() != 2) throw UsageError("--shorthand expects --quantum n,l");
    return QuantumState::with_l(D, Z, q[0], q[1]);
  }
  if (D >= 2 && static_cast<int>(q.size()) != D)
    throw ValidationError(ValidationFailure::MuLength,
                          "--quantum needs n and D-1 = " + std::to_string(D - 1) + " hyperquantum numbers, got " +
                              std::to_string(q.size()) + " values (pass --shorthand to give only n,l)");
  return {D, Z, q.front(), std::vector<int>(q.begin() + 1, q.end())};
}

std::pair<int, int> parse_range(const std::string& text, const char* flag) {
  // "a:b", or a single value "a"
  const auto colon = text.find(':');
  const std::string lo = text.substr(0, colon);
  const std::string hi = colon == std::string::npos ? lo : text.substr(colon + 1);
  int a = 0, b = 0;
  try {
    std::size_t ua = 0, ub = 0;
    a = std::stoi(lo, &ua);
    b = std::stoi(hi, &ub);
    if (ua != lo.size() || ub != hi.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": expected a:b, got '" + text + "'");
  }
  if (a > b) throw UsageError(std::string(flag) + ": empty range " + text);
  return {a, b};
}

void print_text(std::ostream& out, const std::vector<OutputRecord>& records, bool timing) {
  std::vector<std::string> head{"D", "Z", "n", "mu", "radial", "angular", "total", "method", "radial_err",
                                "angular_err"};
  if (timing) head.push_back("wall_time_ms");
  std::vector<std::vector<std::string>> rows{head};
  for (const auto& r : records) {
    std::vector<std::string> row{std::to_string(r.state.D), num(r.state.Z), std::to_string(r.state.n),
                                 mu_string(r.state.mu),     num(r.radial),  num(r.angular),
                                 num(r.total),              r.method,       num(r.radial_err),
                                 num(r.angular_err)};
    if (timing) row.push_back(num(r.wall_time_ms.value_or(0.0)));
    rows.push_back(row);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : rows)
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k)
      out << (k ? "  " : "") << std::setw(static_cast<int>(width[k])) << std::left << row[k];
    out << "\n";
  }
}

void emit(std::ostream& out, const std::vector<OutputRecord>& records, const std::string& format, bool timing) {
  std::vector<OutputRecord> shown = records;
  if (!timing)
    for (auto& r : shown) r.wall_time_ms.reset();
  if (format == "json") {
    for (const auto& r : shown) out << nlohmann::json(r).dump() << "\n";
  } else if (format == "csv") {
    out << csv_header(timing) << "\n";
    for (const auto& r : shown) out << csv_row(r, timing) << "\n";
  } else {
    print_text(out, shown, timing);
  }
}

struct ComputeArgs {
  int dim = 3;
  double charge = 1.0;
  std::string quantum;
  std::string method = "closed";
  std::string format = "text";
  std::optional<double> rel_tol;
  bool shorthand = false;
  bool timing = false;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  const Tolerances tol(a.rel_tol);
  const QuantumState s = build_state(a.dim, a.charge, a.quantum, a.shorthand);
  validate_and_derive(s);
  std::vector<OutputRecord> records;
  if (a.method != "oracle") records.push_back(compute_record(s, false, tol));
  if (a.method != "closed") records.push_back(compute_record(s, true, tol));
  if (records.size() == 2) {
    OutputRecord d;
    d.state = s;
    d.method = "difference";
    d.radial = records[0].radial - records[1].radial;
    d.angular = records[0].angular - records[1].angular;
    d.total = records[0].total - records[1].total;
    d.radial_err = records[0].radial_err + records[1].radial_err;
    d.angular_err = records[0].angular_err + records[1].angular_err;
    d.wall_time_ms = 0.0;
    records.push_back(d);
  }
  emit(out, records, a.format, a.timing);
  return kOk;
}

struct ScanArgs {
  std::string n_range = "1:4";
  std::string dim_range = "3:3";
  double charge = 1.0;
  std::string family = "all";
  std::string out_path;
  std::string asymptote;
  std::string method = "closed";
  std::optional<double> rel_tol;
  unsigned threads = 0;
  bool timing = false;
};

std::vector<QuantumState> scan_states(const ScanArgs& a) {
  const auto [n0, n1] = parse_range(a.n_range, "--n-range");
  const auto [d0, d1] = parse_range(a.dim_range, "--dim-range");
  if (n0 < 1) throw UsageError("--n-range: n starts at 1");
  if (d0 < 2) throw UsageError("--dim-range: D starts at 2");
  std::vector<QuantumState> states;
  for (int D = d0; D <= d1; ++D)
    for (int n = n0; n <= n1; ++n) {
      if (a.family == "quasi-spherical") {
        states.push_back({D, a.charge, n, std::vector<int>(D - 1, n - 1)});
      } else if (a.family == "s-states") {
        states.push_back({D, a.charge, n, std::vector<int>(D - 1, 0)});
      } else {
        for (auto& mu : verify::mu_chains(D, n - 1)) states.push_back({D, a.charge, n, mu});
      }
    }
  return states;
}

int cmd_scan(const ScanArgs& a, std::ostream& stdout_stream, std::ostream& err) {
  const Tolerances tol(a.rel_tol);
  const std::vector<QuantumState> states = scan_states(a);
  for (const auto& s : states) validate_and_derive(s);

  std::vector<std::optional<OutputRecord>> records(states.size());
  std::vector<std::string> failures(states.size());
  parallel_for(states.size(), a.threads, [&](std::size_t i) {
    try {
      records[i] = compute_record(states[i], a.method == "oracle", tol);
    } catch (const ConvergenceError& e) {
      failures[i] = e.what();
    }
  });

  std::ofstream file;
  if (!a.out_path.empty()) {
    file.open(a.out_path);
    if (!file) throw UsageError("--out: cannot open '" + a.out_path + "' for writing");
  }
  std::ostream& out = a.out_path.empty() ? stdout_stream : file;
  std::string header = csv_header(a.timing);
  if (!a.asymptote.empty()) header += ",asymptote,difference";
  out << header << "\n";
  int failed = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!records[i]) {
      err << "not converged: " << failures[i] << "\n";
      ++failed;
      continue;
    }
    const OutputRecord& r = *records[i];
    std::string row = csv_row(r, a.timing);
    if (!a.asymptote.empty()) {
      const QuantumState& s = r.state;
      double asym = 0, value = 0;
      if (a.asymptote == "rydberg") {
        asym = asymptote(AsymptoticRegime::RydbergRadial, s.n, s.D, s.Z);
        value = r.radial;
      } else {
        asym = asymptote(is_quasi_spherical(s) ? AsymptoticRegime::HighDTotalQuasiSpherical
                                               : AsymptoticRegime::HighDTotalConjecture,
                         s.n, s.D, s.Z);
        value = r.total;
      }
      row += "," + num(asym) + "," + num(value - asym);
    }
    out << row << "\n";
  }
  return failed ? kNotConverged : kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::optional<double> tol;
  unsigned threads = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const std::vector<int> ids = verify::suite_criteria(a.suite);
  if (a.tol && !(*a.tol > 0.0)) throw UsageError("--tol must be positive");
  verify::VerifyOptions options;
  options.tol = a.tol;
  options.threads = a.threads;
  int passed = 0;
  for (int id : ids) {
    const verify::CriterionResult r = verify::run_criterion(id, options);
    out << verify::format_line(r) << "\n" << std::flush;
    passed += r.pass ? 1 : 0;
  }
  out << "verify " << a.suite << ": " << passed << "/" << ids.size() << " criteria passed\n";
  return passed == static_cast<int>(ids.size()) ? kOk : kFailed;
}

std::string failure_name(ValidationFailure f) {
  switch (f) {
    case ValidationFailure::Dimension: return "dimension";
    case ValidationFailure::Charge: return "charge";
    case ValidationFailure::PrincipalNumber: return "principal number";
    case ValidationFailure::MuLength: return "mu length";
    case ValidationFailure::LRange: return "l range";
    case ValidationFailure::MuChain: return "mu chain";
  }
  return "state";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shannon entropies of D-dimensional hydrogenic states", "hydent"};
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "Entropies of one state");
  compute->add_option("--dim", ca.dim, "Dimension D >= 2")->required();
  compute->add_option("--charge", ca.charge, "Nuclear charge Z > 0");
  compute->add_option("--quantum", ca.quantum, "n,mu_1,...,mu_{D-1} (or n,l with --shorthand)")->required();
  compute->add_option("--method", ca.method, "closed, oracle or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  compute->add_option("--format", ca.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  compute->add_option("--rel-tol", ca.rel_tol, "Relative tolerance of every quadrature");
  compute->add_flag("--shorthand", ca.shorthand, "Read --quantum as n,l and set mu_2.. = 0");
  compute->add_flag("--timing", ca.timing, "Add wall_time_ms to each record");

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "CSV over a grid of states");
  scan->add_option("--n-range", sa.n_range, "a:b principal numbers");
  scan->add_option("--dim-range", sa.dim_range, "a:b dimensions");
  scan->add_option("--charge", sa.charge, "Nuclear charge Z > 0");
  scan->add_option("--family", sa.family, "all, quasi-spherical or s-states")
      ->check(CLI::IsMember({"all", "quasi-spherical", "s-states"}));
  scan->add_option("--out", sa.out_path, "Write CSV here instead of stdout");
  scan->add_option("--asymptote", sa.asymptote, "rydberg or highd: add asymptote and difference columns")
      ->check(CLI::IsMember({"rydberg", "highd"}));
  scan->add_option("--method", sa.method, "closed or oracle")->check(CLI::IsMember({"closed", "oracle"}));
  scan->add_option("--rel-tol", sa.rel_tol, "Relative tolerance of every quadrature");
  scan->add_option("--threads", sa.threads, "Worker threads, 0 = all cores");
  scan->add_flag("--timing", sa.timing, "Add wall_time_ms to each row");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run acceptance suites");
  ver->add_option("--suite", va.suite, "ground, lowlying, special, asymptotic or all")
      ->check(CLI::IsMember({"ground", "lowlying", "special", "asymptotic", "all"}));
  ver->add_option("--tol", va.tol, "Closed-vs-oracle tolerance for ground and lowlying");
  ver->add_option("--threads", va.threads, "Worker threads, 0 = all cores");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    if (compute->parsed()) return cmd_compute(ca, out);
    if (scan->parsed()) return cmd_scan(sa, out, err);
    return cmd_verify(va, out);
  } catch (const ValidationError& e) {
    err << "invalid state (" << failure_name(e.kind()) << "): " << e.what() << "\n";
    return kInvalid;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ConvergenceError& e) {
    err << "not converged: " << e.what() << "\n";
    return kNotConverged;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace hydent::cli
