#include "hydent/verify.hpp"

#include "hydent/entropy.hpp"
#include "hydent/hypersum.hpp"
#include "hydent/oracle.hpp"
#include "hydent/parallel.hpp"
#include "hydent/specfun.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hydent::verify {

namespace {

constexpr std::size_t kMaxReportedFailures = 8;

class Collector {
 public:
  explicit Collector(CriterionResult& r) : r_(r) {}

  void check(const std::string& label, double got, double want, double tol) {
    const double diff = std::abs(got - want);
    std::lock_guard lock(mu_);
    ++r_.checks;
    if (std::isfinite(diff)) r_.worst = std::max(r_.worst, diff);
    if (!(diff <= tol)) fail_locked(label + ": got " + fmt(got) + ", want " + fmt(want) + " (|diff| " + fmt(diff) + ")");
  }

  void require(const std::string& label, bool ok) {
    std::lock_guard lock(mu_);
    ++r_.checks;
    if (!ok) fail_locked(label);
  }

  void fail(const std::string& what) {
    std::lock_guard lock(mu_);
    ++r_.checks;
    fail_locked(what);
  }

  // runs fn, turning any exception into a failed check
  void guarded(const std::string& label, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      fail(label + ": " + e.what());
    }
  }

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
  }

 private:
  void fail_locked(const std::string& what) {
    r_.pass = false;
    if (r_.failures.size() < kMaxReportedFailures) r_.failures.push_back(what);
  }

  CriterionResult& r_;
  std::mutex mu_;
};

double oracle_value(const IntegralResult& r, const char* what) {
  if (!r.converged) throw ConvergenceError(std::string(what) + " oracle did not converge");
  return r.value;
}

QuantumState state(int D, double Z, int n, std::vector<int> mu) { return {D, Z, n, std::move(mu)}; }

void criterion_known_values(Collector& c, double tol) {
  const double ln2 = std::numbers::ln2, pi = std::numbers::pi;
  const auto g2 = QuantumState::with_l(2, 1.0, 1, 0), g3 = QuantumState::with_l(3, 1.0, 1, 0);
  struct Radial {
    QuantumState s;
    double want;
  };
  for (const auto& [s, want] : {Radial{g3, 3.0 - 2.0 * ln2}, Radial{g2, 2.0 - 4.0 * ln2}}) {
    c.guarded("radial " + to_string(s), [&] {
      c.check("radial closed " + to_string(s), radial_entropy_closed(s), want, tol);
      c.check("radial oracle " + to_string(s), oracle_value(oracle::radial_entropy_oracle(s), "radial"), want, tol);
    });
  }
  for (const auto& [s, want] : {Radial{g2, std::log(2.0 * pi)}, Radial{g3, std::log(4.0 * pi)}}) {
    c.guarded("angular " + to_string(s), [&] {
      c.check("angular closed " + to_string(s), angular_entropy_gegenbauer(s), want, tol);
      c.check("angular oracle " + to_string(s), oracle_value(oracle::angular_entropy_oracle(s), "angular"), want,
              tol);
    });
  }
  for (const auto& [s, want] : {Radial{g2, 2.0 + std::log(pi / 8.0)}, Radial{g3, 3.0 + std::log(pi)}}) {
    c.guarded("total " + to_string(s), [&] {
      c.check("total closed " + to_string(s), total_entropy(s, Method::ClosedForm).total, want, tol);
      c.check("total oracle " + to_string(s), total_entropy(s, Method::Oracle).total, want, tol);
    });
  }
}

void criterion_radial_sweep(Collector& c, double tol, unsigned threads) {
  std::vector<QuantumState> states;
  for (double Z : {1.0, 2.0, 3.7})
    for (int D = 2; D <= 8; ++D)
      for (int n = 1; n <= 6; ++n)
        for (int l = 0; l < n; ++l) states.push_back(QuantumState::with_l(D, Z, n, l));
  parallel_for(states.size(), threads, [&](std::size_t i) {
    const QuantumState& s = states[i];
    c.guarded(to_string(s), [&] {
      const double oracle = oracle_value(oracle::radial_entropy_oracle(s), "radial");
      c.check("radial closed vs oracle " + to_string(s), radial_entropy_closed(s), oracle, tol);
    });
  });
}

std::vector<QuantumState> angular_test_states() {
  std::vector<QuantumState> out;
  for (int D = 3; D <= 6; ++D)
    for (auto& mu : mu_chains(D, 4)) {
      const int n = mu.front() + 1;
      out.push_back(state(D, 1.0, n, mu));
    }
  return out;
}

void criterion_angular_methods(Collector& c, unsigned threads) {
  constexpr double tol = 1e-6;
  const auto states = angular_test_states();
  parallel_for(states.size(), threads, [&](std::size_t i) {
    const QuantumState& s = states[i];
    c.guarded(to_string(s), [&] {
      const IntegralResult b = angular_entropy_from_moments_detail(s);
      c.require("moment-derivative refinement " + to_string(s), b.converged);
      const double a = angular_entropy_gegenbauer(s);
      const double o = oracle_value(oracle::angular_entropy_oracle(s), "angular");
      c.check("A vs B " + to_string(s), a, b.value, tol);
      c.check("A vs oracle " + to_string(s), a, o, tol);
      c.check("B vs oracle " + to_string(s), b.value, o, tol);
    });
  });
}

void criterion_moments(Collector& c, unsigned threads) {
  const auto states = angular_test_states();
  parallel_for(states.size(), threads, [&](std::size_t i) {
    const QuantumState& s = states[i];
    c.guarded(to_string(s), [&] {
      c.check("Lambda_1 " + to_string(s), entropic_moment(s, 1), 1.0, 1e-12);
      for (int q : {2, 3}) {
        const double o = oracle_value(oracle::lambda_q_oracle(s, q), "Lambda_q");
        c.check("Lambda_" + std::to_string(q) + " " + to_string(s), entropic_moment(s, q), o, 1e-9);
      }
    });
  });
  const double pi = std::numbers::pi;
  c.guarded("known moments", [&] {
    c.check("Lambda_2 l=0 D=3", entropic_moment(state(3, 1.0, 1, {0, 0}), 2), 1.0 / (4.0 * pi), 1e-9);
    c.check("Lambda_2 mu=(1,0) D=3", entropic_moment(state(3, 1.0, 2, {1, 0}), 2), 9.0 / (20.0 * pi), 1e-9);
  });
}

void criterion_norm_identity(Collector& c) {
  for (int D = 2; D <= 10; ++D)
    for (int n = 1; n <= 8; ++n)
      for (int l = 0; l < n; ++l) {
        const std::string label = "I1 (n=" + std::to_string(n) + ", l=" + std::to_string(l) +
                                  ", D=" + std::to_string(D) + ")";
        c.guarded(label, [&] {
          const Rational got = radial_norm_sum_exact(n, l, D);
          const Rational want(BigInt(2 * n + D - 3) * factorial_exact(n + l + D - 3), factorial_exact(n - l - 1));
          c.require(label + " is not exactly 2 eta Gamma(n+l+D-2)/(n-l-1)!", got == want);
        });
      }
}

void criterion_special_paths(Collector& c) {
  constexpr double tol = 1e-9;
  for (int D = 2; D <= 8; ++D)
    for (int n = 1; n <= 5; ++n) {
      const QuantumState s = state(D, 1.0, n, std::vector<int>(D - 1, n - 1));
      c.guarded(to_string(s), [&] {
        const double special = radial_entropy_special(s) + angular_entropy_special(s);
        const double quasi = total_quasi_spherical(s);
        c.check("quasi-spherical vs special sum " + to_string(s), quasi, special, tol);
        c.check("radial closed vs special " + to_string(s), radial_entropy_closed(s), radial_entropy_special(s), tol);
        c.check("total closed vs quasi-spherical " + to_string(s), total_entropy(s).total, quasi, tol);
      });
    }
  c.guarded("(2,1,{1}) D=3", [&] {
    const double want = 2.5 + std::log(16.0 * std::numbers::pi) + 2.0 * kEulerGamma;
    c.check("quasi-spherical (2,1,{1}) D=3", total_quasi_spherical(state(3, 1.0, 2, {1, 1})), want, 1e-10);
  });
}

// |gaps| strictly decreasing along the sequence
void require_decreasing(Collector& c, const std::string& label, const std::vector<double>& gaps) {
  std::string seq;
  bool ok = true;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    seq += (i ? ", " : "") + Collector::fmt(gaps[i]);
    if (i > 0 && !(std::abs(gaps[i]) < std::abs(gaps[i - 1]))) ok = false;
  }
  c.require(label + " gaps not strictly decreasing: " + seq, ok);
}

void criterion_asymptotics(Collector& c) {
  c.guarded("Rydberg", [&] {
    std::vector<double> gaps;
    for (int n : {20, 40, 80})
      gaps.push_back(radial_entropy_closed(QuantumState::with_l(3, 1.0, n, 0)) -
                     asymptote(AsymptoticRegime::RydbergRadial, n, 3, 1.0));
    require_decreasing(c, "Rydberg radial (D=3, l=0)", gaps);
  });
  c.guarded("high-D angular", [&] {
    std::vector<double> gaps;
    for (int D : {50, 100, 200}) {
      const double exact = angular_entropy_special(QuantumState::with_l(D, 1.0, 1, 0));
      const double asym = asymptote(AsymptoticRegime::HighDAngular, 1, D, 1.0);
      gaps.push_back((exact - asym) / std::abs(asym));
    }
    require_decreasing(c, "high-D s-state angular, relative", gaps);
  });
  c.guarded("high-D quasi-spherical total", [&] {
    for (int n : {1, 2, 3}) {
      std::vector<double> gaps;
      for (int D : {50, 100, 200}) {
        const double exact = total_quasi_spherical(state(D, 1.0, n, std::vector<int>(D - 1, n - 1)));
        gaps.push_back((exact - asymptote(AsymptoticRegime::HighDTotalQuasiSpherical, n, D, 1.0)) / D);
      }
      require_decreasing(c, "high-D quasi-spherical total / D, n=" + std::to_string(n), gaps);
    }
  });
}

QuantumState random_state(std::mt19937& rng) {
  const int D = std::uniform_int_distribution<int>(2, 8)(rng);
  const int n = std::uniform_int_distribution<int>(1, 6)(rng);
  std::vector<int> mu(D - 1);
  int cap = n - 1;
  for (int k = 0; k < D - 1; ++k) {
    mu[k] = std::uniform_int_distribution<int>(0, cap)(rng);
    cap = mu[k];
  }
  if (mu.back() > 0 && std::uniform_int_distribution<int>(0, 1)(rng)) mu.back() = -mu.back();
  const double Z = std::uniform_real_distribution<double>(0.1, 10.0)(rng);
  return {D, Z, n, mu};
}

void criterion_z_scaling(Collector& c) {
  std::mt19937 rng(20240601u);
  for (int k = 0; k < 20; ++k) {
    const QuantumState s = random_state(rng);
    QuantumState unit = s;
    unit.Z = 1.0;
    c.guarded(to_string(s), [&] {
      const double shift = -s.D * std::log(s.Z);
      c.check("radial Z-shift " + to_string(s), radial_entropy_closed(s) - radial_entropy_closed(unit), shift, 1e-12);
      if (is_radial_special(s))
        c.check("special radial Z-shift " + to_string(s), radial_entropy_special(s) - radial_entropy_special(unit),
                shift, 1e-12);
      c.require("angular depends on Z " + to_string(s),
                angular_entropy_gegenbauer(s) == angular_entropy_gegenbauer(unit));
    });
  }
}

struct Spec {
  const char* title;
  double tol;
  double time_limit;
};

constexpr std::array<Spec, kCriterionCount> kSpecs{{
    {"exact known values, closed and oracle", 1e-9, 1.0},
    {"closed vs oracle radial sweep", 1e-8, 60.0},
    {"angular methods A, B and oracle agree", 1e-6, 60.0},
    {"entropic moments", 1e-9, 60.0},
    {"exact normalization identity", 0.0, 60.0},
    {"special-path consistency", 1e-9, 60.0},
    {"asymptotic gaps shrink monotonically", 0.0, 120.0},
    {"Z-scaling law", 1e-12, 60.0},
}};

}  // namespace

std::vector<std::vector<int>> mu_chains(int D, int max_l) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> extend = [&](int cap) {
    if (static_cast<int>(cur.size()) == D - 1) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      cur.push_back(v);
      extend(v);
      cur.pop_back();
    }
  };
  extend(max_l);
  return out;
}

CriterionResult run_criterion(int id, const VerifyOptions& options) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("criterion id must be in 1..8");
  const Spec& spec = kSpecs[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = spec.title;
  r.tol = (id <= 2 && options.tol) ? *options.tol : spec.tol;
  r.time_limit = spec.time_limit;
  r.pass = true;
  Collector c(r);
  const auto start = std::chrono::steady_clock::now();
  c.guarded("criterion " + std::to_string(id), [&] {
    switch (id) {
      case 1: criterion_known_values(c, r.tol); break;
      case 2: criterion_radial_sweep(c, r.tol, options.threads); break;
      case 3: criterion_angular_methods(c, options.threads); break;
      case 4: criterion_moments(c, options.threads); break;
      case 5: criterion_norm_identity(c); break;
      case 6: criterion_special_paths(c); break;
      case 7: criterion_asymptotics(c); break;
      case 8: criterion_z_scaling(c); break;
    }
  });
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > r.time_limit) {
    r.pass = false;
    r.failures.push_back("runtime " + Collector::fmt(r.seconds) + " s exceeds " + Collector::fmt(r.time_limit) + " s");
  }
  return r;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "ground") return {1};
  if (suite == "lowlying") return {2, 3};
  if (suite == "special") return {4, 5, 6, 8};
  if (suite == "asymptotic") return {7};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8};
  throw std::invalid_argument("unknown suite '" + suite + "' (expected ground, lowlying, special, asymptotic, all)");
}

std::string format_line(const CriterionResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s C%d %s: %d checks, worst %.3g (tol %.3g), %.2f s (limit %.0f s)",
                r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.checks, r.worst, r.tol, r.seconds, r.time_limit);
  std::string line = buf;
  for (const auto& f : r.failures) line += "\n    " + f;
  return line;
}

}  // namespace hydent::verify
