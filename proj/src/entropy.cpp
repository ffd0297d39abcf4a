#include "hydent/entropy.hpp"

#include "hydent/oracle.hpp"
#include "hydent/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace hydent {

std::string to_string(Method m) {
  switch (m) {
    case Method::ClosedForm: return "closed_form";
    case Method::Oracle: return "oracle";
    case Method::SpecialCase: return "special_case";
    case Method::Asymptote: return "asymptote";
  }
  return "unknown";
}

std::string to_string(AsymptoticRegime r) {
  switch (r) {
    case AsymptoticRegime::RydbergRadial: return "rydberg_radial";
    case AsymptoticRegime::HighDRadial: return "high_d_radial";
    case AsymptoticRegime::HighDAngular: return "high_d_angular";
    case AsymptoticRegime::HighDTotalQuasiSpherical: return "high_d_total_quasi_spherical";
    case AsymptoticRegime::HighDTotalConjecture: return "high_d_total_conjecture";
  }
  return "unknown";
}

namespace {

constexpr double kLogPi = 1.1447298858494001741434273513530587;
// double sums of the alternating c_ij lose ~1e-9 by n-l-1 = 4 and grow ~30x per step after
constexpr int kExactThreshold = 3;

void check_nld(int n, int l, int D) {
  if (D < 2 || n < 1 || l < 0 || l > n - 1) throw DomainError("invalid (n, l, D) for the radial sums");
}

// Averages of x and ln x under the weight x^{2l+D-1} e^{-x} L^2, taken from
// the c_{i,j} sums: <x> = sum c (2l+D+i+j) / sum c, <ln x> = sum c psi(2l+D+i+j) / sum c.
struct RadialMoments {
  double sum_c = 0;
  double mean_x = 0;
  double mean_log = 0;
};

RadialMoments radial_moments_exact(int n, int l, int D) {
  const int shift = 2 * l + D;
  const std::vector<Rational> diag = coeff_diagonal_sums_exact(n, l, D);
  Rational s0 = 0, sx = 0, sh = 0;
  for (std::size_t s = 0; s < diag.size(); ++s) {
    s0 += diag[s];
    sx += diag[s] * Rational(shift + static_cast<int>(s));
    // psi(k) = H_{k-1} - gamma at the integer k = 2l+D+s
    sh += diag[s] * harmonic_exact(shift - 1 + static_cast<unsigned>(s));
  }
  return {to_double(s0), to_double(sx / s0), to_double(sh / s0) - kEulerGamma};
}

RadialMoments radial_moments_compensated(int n, int l, int D) {
  const int m = n - l - 1;
  struct Neumaier {
    double sum = 0, comp = 0;
    void add(double v) {
      const double t = sum + v;
      comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
      sum = t;
    }
    double value() const { return sum + comp; }
  } s0, sx, sp;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) {
      const double c = coeff_cij(n, l, D, i, j);
      const int k = 2 * l + D + i + j;
      s0.add(c);
      sx.add(c * k);
      sp.add(c * digamma(k));
    }
  }
  return {s0.value(), sx.value() / s0.value(), sp.value() / s0.value()};
}

RadialMoments radial_moments(int n, int l, int D, RadialBackend backend) {
  check_nld(n, l, D);
  const bool exact =
      backend == RadialBackend::Exact || (backend == RadialBackend::Auto && n - l - 1 > kExactThreshold);
  return exact ? radial_moments_exact(n, l, D) : radial_moments_compensated(n, l, D);
}

// ln (n-l)_{2l+D-2}
double log_P(int n, int l, int D) { return log_gamma(n + l + D - 2.0) - log_gamma(static_cast<double>(n - l)); }

}  // namespace

RadialAuxIntegrals radial_aux_integrals(int n, int l, int D, RadialBackend backend) {
  const RadialMoments mom = radial_moments(n, l, D, backend);
  const double p2 = std::exp(2.0 * log_P(n, l, D));
  const double i1 = p2 * mom.sum_c;
  return {i1, i1 * mom.mean_log, i1 * mom.mean_x};
}

Rational radial_norm_sum_exact(int n, int l, int D) {
  check_nld(n, l, D);
  const BigInt P = factorial_exact(n + l + D - 3) / factorial_exact(n - l - 1);
  Rational sum = 0;
  for (const auto& c : coeff_diagonal_sums_exact(n, l, D)) sum += c;
  return sum * Rational(P * P);
}

IntegralResult radial_entropy_closed_detail(const QuantumState& s, const RadialOptions& options) {
  const DerivedParams p = validate_and_derive(s);
  const int n = s.n, l = s.l(), D = s.D;
  const double eta = p.eta;
  const double log_gamma_b = log_gamma(2.0 * l + D - 1);  // ln Gamma(2l+D-1)
  const double lp = log_P(n, l, D);

  const RadialMoments mom = radial_moments(n, l, D, options.backend);
  // K*_{i,j} averaged against c_{i,j}; the D ln Z part is split off below
  const double k_const = D * std::log(2.0 / eta) + lp - std::log(2.0 * eta) - 2.0 * log_gamma_b;
  const double k_mean = k_const + 2.0 * l * mom.mean_log - mom.mean_x;

  const IntegralResult kummer = kummer_log_integral(n, l, D, options.kummer);
  if (!kummer.converged)
    throw ConvergenceError("Kummer-log integral did not converge for " + to_string(s));
  const double kummer_coeff = std::exp(lp - std::log(2.0 * eta) - 2.0 * log_gamma_b);

  IntegralResult out;
  out.value = -k_mean - kummer_coeff * kummer.value - D * std::log(s.Z);
  out.error_estimate = kummer_coeff * kummer.error_estimate;
  out.evaluations = kummer.evaluations;
  out.converged = true;
  return out;
}

double radial_entropy_closed(const QuantumState& s, const RadialOptions& options) {
  return radial_entropy_closed_detail(s, options).value;
}

bool is_radial_special(const QuantumState& s) {
  validate_and_derive(s);
  return s.l() == s.n - 1;
}

bool is_angular_special(const QuantumState& s) {
  validate_and_derive(s);
  const int l = s.l();
  return std::all_of(s.mu.begin(), s.mu.end(), [l](int v) { return std::abs(v) == l; });
}

bool is_quasi_spherical(const QuantumState& s) { return is_radial_special(s) && is_angular_special(s); }

double radial_entropy_special(const QuantumState& s) {
  const DerivedParams p = validate_and_derive(s);
  if (s.l() != s.n - 1) throw DomainError("radial_entropy_special: needs l = n-1");
  const double eta = p.eta;
  return s.D * std::log(eta / 2.0) + 2.0 * eta + 1.0 + log_gamma(2.0 * eta + 1.0) -
         2.0 * (s.n - 1) * digamma(2.0 * eta + 1.0) - s.D * std::log(s.Z);
}

double radial_entropy_ground(int D, double Z) {
  validate_and_derive(QuantumState::with_l(D, Z, 1, 0));
  return D * std::log(D - 1.0) + log_gamma(D) - D * (2.0 * std::numbers::ln2 - 1.0) - D * std::log(Z);
}

IntegralResult angular_entropy_gegenbauer_detail(const QuantumState& s, const QuadratureConfig& config) {
  validate_and_derive(s);
  const double log_2pi = std::log(2.0 * std::numbers::pi);
  IntegralResult out{log_2pi, 0.0, 0, true};
  for (const auto& f : angular_factors(s)) {
    const double a = f.alpha;
    const int hi = f.mu_hi, lo = f.mu_lo;
    if (lo > 0)
      out.value -= 2.0 * lo *
                   (digamma(2.0 * a + hi + lo) - digamma(a + hi) - std::numbers::ln2 - 1.0 / (2.0 * (a + hi)));
    const IntegralResult e = poly_entropy_E(PolynomialSpec::gegenbauer(f.degree, f.lambda), config);
    out.value += e.value;
    out.error_estimate += e.error_estimate;
    out.evaluations += e.evaluations;
    out.converged = out.converged && e.converged;
  }
  return out;
}

double angular_entropy_gegenbauer(const QuantumState& s) {
  const IntegralResult r = angular_entropy_gegenbauer_detail(s);
  if (!r.converged) throw ConvergenceError("Gegenbauer entropy integral did not converge for " + to_string(s));
  return r.value;
}

IntegralResult angular_moment_quadrature(const QuantumState& s, double q, const QuadratureConfig& config) {
  validate_and_derive(s);
  IntegralResult out{1.0, 0.0, 0, true};
  double log_v = (1.0 - q) * std::log(2.0 * std::numbers::pi);
  double rel_err = 0.0;
  for (const auto& f : angular_factors(s)) {
    const auto spec = PolynomialSpec::gegenbauer(f.degree, f.lambda);
    const double log_h2 = gegenbauer_log_norm_sq(f.degree, f.lambda);
    std::vector<double> cuts;
    if (f.degree > 0)
      for (double x : poly_roots(spec)) cuts.push_back(std::acos(x));
    const auto integrand = [&](double theta) {
      const double c = poly_eval(spec, std::cos(theta));
      if (c == 0.0) return 0.0;
      const double log_sin = std::log(std::sin(theta));
      const double log_f = 2.0 * std::log(std::abs(c)) - log_h2 + 2.0 * f.mu_lo * log_sin;
      return std::exp(q * log_f + 2.0 * f.alpha * log_sin);
    };
    const IntegralResult r = integrate_adaptive(integrand, {0.0, std::numbers::pi}, cuts, config);
    log_v += std::log(r.value);
    rel_err += r.error_estimate / std::abs(r.value);
    out.evaluations += r.evaluations;
    out.converged = out.converged && r.converged;
  }
  out.value = std::exp(log_v);
  out.error_estimate = rel_err * out.value;
  return out;
}

IntegralResult angular_entropy_from_moments_detail(const QuantumState& s) {
  validate_and_derive(s);
  const QuadratureConfig config{1e-13, 1e-16, 4000};
  constexpr std::array<double, 3> steps{1e-3, 5e-4, 2.5e-4};
  std::array<double, 3> diffs{};
  double noise = 0.0;
  long evals = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const double h = steps[k];
    const IntegralResult up = angular_moment_quadrature(s, 1.0 + h, config);
    const IntegralResult down = angular_moment_quadrature(s, 1.0 - h, config);
    diffs[k] = (up.value - down.value) / (2.0 * h);
    noise = std::max(noise, (up.error_estimate + down.error_estimate) / (2.0 * h));
    evals += up.evaluations + down.evaluations;
  }
  // central differences carry h^2, h^4, ... errors
  const double r1 = (4.0 * diffs[1] - diffs[0]) / 3.0;
  const double r2 = (4.0 * diffs[2] - diffs[1]) / 3.0;
  const double r = (16.0 * r2 - r1) / 15.0;

  IntegralResult out;
  out.value = -r;
  out.error_estimate = std::abs(r - r2) + noise;
  out.evaluations = evals;
  out.converged = std::abs(r2 - r1) <= 1e-6;
  return out;
}

double angular_entropy_from_moments(const QuantumState& s) {
  const IntegralResult r = angular_entropy_from_moments_detail(s);
  if (!r.converged) throw ConvergenceError("moment-derivative refinement disagrees for " + to_string(s));
  return r.value;
}

double angular_entropy_special(const QuantumState& s) {
  validate_and_derive(s);
  if (!is_angular_special(s)) throw DomainError("angular_entropy_special: needs mu_1 = ... = |mu_{D-1}| = l");
  const int l = s.l();
  const double half_d = s.D / 2.0;
  double v = std::numbers::ln2 + half_d * kLogPi + log_gamma(l + 1.0) - log_gamma(l + half_d);
  if (l > 0) v += l * (digamma(l + half_d) - digamma(l + 1.0));
  return v;
}

EntropyResult total_entropy(const QuantumState& s, Method method, AngularMethod angular) {
  validate_and_derive(s);
  EntropyResult r;
  r.method = method;
  switch (method) {
    case Method::ClosedForm: {
      const IntegralResult rad = radial_entropy_closed_detail(s);
      const IntegralResult ang = angular == AngularMethod::Gegenbauer ? angular_entropy_gegenbauer_detail(s)
                                                                      : angular_entropy_from_moments_detail(s);
      if (!ang.converged) throw ConvergenceError("angular entropy did not converge for " + to_string(s));
      r.radial = rad.value;
      r.radial_err = rad.error_estimate;
      r.angular = ang.value;
      r.angular_err = ang.error_estimate;
      break;
    }
    case Method::SpecialCase:
      r.radial = radial_entropy_special(s);
      r.angular = angular_entropy_special(s);
      break;
    case Method::Oracle:
      return oracle::total_entropy_oracle(s);
    case Method::Asymptote:
      throw std::invalid_argument("total_entropy: asymptotic values need a regime; use asymptote()");
  }
  r.total = r.radial + r.angular;
  return r;
}

double total_quasi_spherical(const QuantumState& s) {
  const DerivedParams p = validate_and_derive(s);
  if (!is_quasi_spherical(s)) throw DomainError("total_quasi_spherical: needs mu_1 = ... = |mu_{D-1}| = n-1");
  const int n = s.n, D = s.D;
  const double eta = p.eta;
  const double c = digamma(eta + 0.5) - digamma(n) - 2.0 * digamma(2.0 * eta + 1.0) + 2.0;
  const double log_poch = log_gamma(n + D / 2.0 - 1.0) - log_gamma(n);  // ln (n)_{D/2-1}
  return D * (1.0 + 0.5 * kLogPi + std::log(eta / 2.0)) + std::numbers::ln2 + log_gamma(2.0 * eta + 1.0) -
         log_poch + (n - 1) * c - D * std::log(s.Z);
}

double total_ground(int D, double Z) {
  validate_and_derive(QuantumState::with_l(D, Z, 1, 0));
  return D * (1.0 + 0.5 * kLogPi - 2.0 * std::numbers::ln2) + std::numbers::ln2 + D * std::log(D - 1.0) +
         log_gamma(D) - log_gamma(D / 2.0) - D * std::log(Z);
}

double asymptote(AsymptoticRegime regime, int n, int D, double Z) {
  if (n < 1 || D < 2 || !(Z > 0.0)) throw std::invalid_argument("asymptote: needs n >= 1, D >= 2, Z > 0");
  const double d = D;
  switch (regime) {
    case AsymptoticRegime::RydbergRadial:
      return 2.0 * d * std::log(n) + (2.0 - d) * std::numbers::ln2 + kLogPi + d - 3.0 - d * std::log(Z);
    case AsymptoticRegime::HighDRadial:
      return 2.0 * d * std::log(d) - d * std::log(4.0 * Z);
    case AsymptoticRegime::HighDAngular:
      return -log_gamma(d / 2.0) + d / 2.0 * kLogPi;
    case AsymptoticRegime::HighDTotalQuasiSpherical:
      return d * (std::log(d + 2.0 * n - 3.0) + 0.5 * std::log(d + 2.0 * n - 2.0)) +
             d * (0.5 * (kLogPi + 1.0) - 1.5 * std::numbers::ln2 - std::log(Z)) -
             ((n - 1) * (std::log(n) - 1.0) + 0.5 * std::numbers::ln2);
    case AsymptoticRegime::HighDTotalConjecture:
      return 2.0 * d * std::log(d) - log_gamma(d / 2.0) + d * (0.5 * kLogPi - std::log(4.0 * Z));
  }
  throw std::invalid_argument("asymptote: unknown regime");
}

}  // namespace hydent
