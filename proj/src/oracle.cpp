#include "hydent/oracle.hpp"

#include "hydent/specfun.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <utility>

namespace hydent::oracle {

namespace {

constexpr double kNormTol = 1e-10;

void accumulate(IntegralResult& into, const IntegralResult& r) {
  into.value += r.value;
  into.error_estimate += r.error_estimate;
  into.evaluations += r.evaluations;
  into.converged = into.converged && r.converged;
}

// theta_j integral of g(ln f_j, ln sin theta) against the (sin theta)^{2 alpha_j} measure
IntegralResult theta_integral(const AngularFactor& f, const std::function<double(double, double)>& g,
                              const QuadratureConfig& config) {
  std::vector<double> cuts;
  if (f.degree > 0)
    for (double x : poly_roots(PolynomialSpec::gegenbauer(f.degree, f.lambda))) cuts.push_back(std::acos(x));
  const auto integrand = [&](double theta) {
    const double log_f = log_angular_factor(f, theta);
    if (std::isinf(log_f)) return 0.0;
    return g(log_f, std::log(std::sin(theta)));
  };
  return integrate_adaptive(integrand, {0.0, std::numbers::pi}, cuts, config);
}

}  // namespace

IntegralResult radial_entropy_oracle(const QuantumState& s, const QuadratureConfig& config) {
  const DerivedParams p = validate_and_derive(s);
  const int D = s.D;
  std::vector<double> cuts;
  if (p.laguerre_degree > 0)
    for (double x : poly_roots(PolynomialSpec::laguerre(p.laguerre_degree, p.laguerre_alpha)))
      cuts.push_back(p.lambda * x);
  const double scale = p.lambda * (4.0 * p.laguerre_degree + 2.0 * p.laguerre_alpha + 10.0);

  const auto weighted = [&](bool with_log) {
    return [&, with_log](double r) {
      if (r <= 0.0) return 0.0;
      const double lr = log_radial_density(s, p, r);
      if (std::isinf(lr)) return 0.0;
      const double v = std::exp((D - 1) * std::log(r) + lr);
      return with_log ? -v * lr : v;
    };
  };
  const IntegralResult norm = integrate_adaptive(weighted(false), {0.0}, cuts, config, scale);
  IntegralResult out = integrate_adaptive(weighted(true), {0.0}, cuts, config, scale);
  out.evaluations += norm.evaluations;
  out.converged = out.converged && norm.converged && std::abs(norm.value - 1.0) <= kNormTol;
  return out;
}

IntegralResult angular_entropy_oracle(const QuantumState& s, const QuadratureConfig& config) {
  validate_and_derive(s);
  IntegralResult out{std::log(2.0 * std::numbers::pi), 0.0, 0, true};
  for (const auto& f : angular_factors(s)) {
    const double two_alpha = 2.0 * f.alpha;
    const IntegralResult norm = theta_integral(
        f, [two_alpha](double lf, double ls) { return std::exp(lf + two_alpha * ls); }, config);
    const IntegralResult part = theta_integral(
        f, [two_alpha](double lf, double ls) { return -std::exp(lf + two_alpha * ls) * lf; }, config);
    accumulate(out, part);
    out.evaluations += norm.evaluations;
    out.converged = out.converged && norm.converged && std::abs(norm.value - 1.0) <= kNormTol;
  }
  return out;
}

IntegralResult lambda_q_oracle(const QuantumState& s, double q, const QuadratureConfig& config) {
  validate_and_derive(s);
  if (!(q > 0.0)) throw DomainError("lambda_q_oracle: q must be positive");
  double log_v = (1.0 - q) * std::log(2.0 * std::numbers::pi);
  double rel_err = 0.0;
  IntegralResult out{0.0, 0.0, 0, true};
  for (const auto& f : angular_factors(s)) {
    const double two_alpha = 2.0 * f.alpha;
    const IntegralResult r = theta_integral(
        f, [q, two_alpha](double lf, double ls) { return std::exp(q * lf + two_alpha * ls); }, config);
    log_v += std::log(r.value);
    rel_err += r.error_estimate / std::abs(r.value);
    out.evaluations += r.evaluations;
    out.converged = out.converged && r.converged;
  }
  out.value = std::exp(log_v);
  out.error_estimate = rel_err * out.value;
  return out;
}

EntropyResult total_entropy_oracle(const QuantumState& s, const QuadratureConfig& config) {
  const IntegralResult rad = radial_entropy_oracle(s, config);
  if (!rad.converged) throw ConvergenceError("radial oracle did not converge for " + to_string(s));
  const IntegralResult ang = angular_entropy_oracle(s, config);
  if (!ang.converged) throw ConvergenceError("angular oracle did not converge for " + to_string(s));
  EntropyResult r;
  r.method = Method::Oracle;
  r.radial = rad.value;
  r.angular = ang.value;
  r.total = rad.value + ang.value;
  r.radial_err = rad.error_estimate;
  r.angular_err = ang.error_estimate;
  return r;
}

bool CrossCheckReport::passed() const {
  if (!valid || !errors.empty()) return false;
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

namespace {

using Candidate = std::pair<std::string, std::function<IntegralResult()>>;

void compare_all(CrossCheckReport& report, const std::string& quantity, const std::vector<Candidate>& candidates,
                 double tol, double moments_tol, std::vector<std::pair<std::string, double>>& values) {
  values.clear();
  for (const auto& [name, run] : candidates) {
    try {
      const IntegralResult r = run();
      if (!r.converged) {
        report.errors.push_back(quantity + "/" + name + ": not converged");
        continue;
      }
      values.emplace_back(name, r.value);
    } catch (const std::exception& e) {
      report.errors.push_back(quantity + "/" + name + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t k = i + 1; k < values.size(); ++k) {
      CrossCheckRow row;
      row.quantity = quantity;
      row.method_a = values[i].first;
      row.method_b = values[k].first;
      row.value_a = values[i].second;
      row.value_b = values[k].second;
      row.diff = std::abs(row.value_a - row.value_b);
      row.tol = (row.method_a == "moments" || row.method_b == "moments") ? moments_tol : tol;
      row.pass = row.diff <= row.tol;
      report.rows.push_back(row);
    }
  }
}

IntegralResult exact(double v) { return {v, 0.0, 0, true}; }

}  // namespace

CrossCheckReport cross_check(const QuantumState& s, const CrossCheckTolerances& tol) {
  CrossCheckReport report;
  report.state = s;
  try {
    validate_and_derive(s);
  } catch (const std::exception& e) {
    report.valid = false;
    report.errors.push_back(std::string("invalid state: ") + e.what());
    return report;
  }

  std::vector<Candidate> radial{{"closed", [&] { return radial_entropy_closed_detail(s); }},
                                {"oracle", [&] { return radial_entropy_oracle(s); }}};
  if (is_radial_special(s)) radial.emplace_back("special", [&] { return exact(radial_entropy_special(s)); });

  std::vector<Candidate> angular{{"gegenbauer", [&] { return angular_entropy_gegenbauer_detail(s); }},
                                 {"moments", [&] { return angular_entropy_from_moments_detail(s); }},
                                 {"oracle", [&] { return angular_entropy_oracle(s); }}};
  if (is_angular_special(s)) angular.emplace_back("special", [&] { return exact(angular_entropy_special(s)); });

  std::vector<std::pair<std::string, double>> rad_values, ang_values;
  compare_all(report, "radial", radial, tol.radial, tol.moments, rad_values);
  compare_all(report, "angular", angular, tol.angular, tol.moments, ang_values);

  const auto find = [](const std::vector<std::pair<std::string, double>>& v, const std::string& name) {
    for (const auto& [k, x] : v)
      if (k == name) return x;
    return std::numeric_limits<double>::quiet_NaN();
  };
  std::vector<Candidate> total;
  const double closed_total = find(rad_values, "closed") + find(ang_values, "gegenbauer");
  const double oracle_total = find(rad_values, "oracle") + find(ang_values, "oracle");
  if (std::isfinite(closed_total)) total.emplace_back("closed", [closed_total] { return exact(closed_total); });
  if (std::isfinite(oracle_total)) total.emplace_back("oracle", [oracle_total] { return exact(oracle_total); });
  if (is_quasi_spherical(s)) total.emplace_back("quasi_spherical", [&] { return exact(total_quasi_spherical(s)); });
  std::vector<std::pair<std::string, double>> tot_values;
  compare_all(report, "total", total, tol.total, tol.moments, tot_values);
  return report;
}

}  // namespace hydent::oracle
