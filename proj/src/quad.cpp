#include "hydent/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace hydent {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw std::invalid_argument("quadrature tolerances must be positive");
  if (max_subdivisions < 1) throw std::invalid_argument("max_subdivisions must be at least 1");
  if (!(tail_cut_multiplier >= 1.0)) throw std::invalid_argument("tail_cut_multiplier must be at least 1");
  if (panel_order < 2) throw std::invalid_argument("panel_order must be at least 2");
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a, b;
  int segment;  // 0: the user integrand, 1: the mapped tail
  double value, error;
  double floor;  // roundoff floor of the error estimate
  friend bool operator<(const Panel& x, const Panel& y) { return x.error < y.error; }
};

class PanelRule {
 public:
  explicit PanelRule(int order) : low_(gauss_legendre(order)), high_(gauss_legendre(2 * order)) {}

  template <class F>
  Panel evaluate(const F& f, double a, double b, int segment, long& evals) const {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double lo = 0.0, hi = 0.0, abs_hi = 0.0;
    bool finite = true;
    for (std::size_t i = 0; i < low_.nodes.size(); ++i) lo += low_.weights[i] * f(c + h * low_.nodes[i]);
    for (std::size_t i = 0; i < high_.nodes.size(); ++i) {
      const double v = f(c + h * high_.nodes[i]);
      finite = finite && std::isfinite(v);
      hi += high_.weights[i] * v;
      abs_hi += high_.weights[i] * std::abs(v);
    }
    evals += static_cast<long>(low_.nodes.size() + high_.nodes.size());
    const double diff = std::abs(hi - lo) * std::abs(h);
    const double floor = 50.0 * kEps * abs_hi * std::abs(h);
    double err = std::max(diff, floor);
    if (!finite || !std::isfinite(err)) err = std::numeric_limits<double>::infinity();
    return {a, b, segment, hi * h, err, floor};
  }

 private:
  GaussRule low_, high_;
};

double neumaier_total(const std::vector<Panel>& panels, double Panel::*field) {
  double sum = 0.0, comp = 0.0;
  for (const auto& p : panels) {
    const double v = p.*field;
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace

IntegralResult integrate_adaptive(const std::function<double(double)>& f, Interval interval,
                                  std::span<const double> breakpoints, const QuadratureConfig& config, double scale) {
  config.validate();
  const double a = interval.a;
  const bool infinite = std::isinf(interval.b);
  if (!std::isfinite(a) || (!infinite && !(interval.b > a)))
    throw std::invalid_argument("integrate_adaptive: need a finite lower limit below the upper limit");

  std::vector<double> cuts;
  for (double bp : breakpoints)
    if (bp > a && (infinite || bp < interval.b)) cuts.push_back(bp);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double finite_end = interval.b;
  if (infinite) {
    const double reach = std::max({scale, cuts.empty() ? 0.0 : cuts.back() - a, 1.0});
    finite_end = a + config.tail_cut_multiplier * reach;
  }

  // tail: int_R^inf f(x) dx = int_0^1 f(R - ln u) / u du
  const auto tail = [&f, finite_end](double u) {
    const double v = f(finite_end - std::log(u));
    return v == 0.0 ? 0.0 : v / u;
  };

  const PanelRule rule(config.panel_order);
  IntegralResult result;
  std::priority_queue<Panel> work;
  std::vector<Panel> done;

  auto eval = [&](double lo, double hi, int segment) {
    return segment == 0 ? rule.evaluate(f, lo, hi, 0, result.evaluations)
                        : rule.evaluate(tail, lo, hi, 1, result.evaluations);
  };

  double prev = a;
  for (double cut : cuts) {
    if (cut >= finite_end) break;
    work.push(eval(prev, cut, 0));
    prev = cut;
  }
  work.push(eval(prev, finite_end, 0));
  if (infinite) work.push(eval(0.0, 1.0, 1));

  double total = 0.0, total_err = 0.0, total_floor = 0.0;
  auto refresh = [&] {
    std::vector<Panel> all = done;
    auto copy = work;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    total = neumaier_total(all, &Panel::value);
    total_err = neumaier_total(all, &Panel::error);
    total_floor = neumaier_total(all, &Panel::floor);
  };
  refresh();

  // below twice the summed roundoff floor, further bisection only reshuffles rounding noise
  auto tolerance = [&] { return std::max({config.rel_tol * std::abs(total), config.abs_tol, 2.0 * total_floor}); };
  int panels = static_cast<int>(work.size());
  while (total_err > tolerance() && !work.empty() && panels < config.max_subdivisions) {
    Panel worst = work.top();
    work.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const bool tiny =
        !(mid > worst.a && mid < worst.b) || (worst.b - worst.a) < 4.0 * kEps * std::max(1.0, std::abs(mid));
    if (tiny) {
      done.push_back(worst);
      continue;
    }
    const Panel left = eval(worst.a, mid, worst.segment);
    const Panel right = eval(mid, worst.b, worst.segment);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_floor += left.floor + right.floor - worst.floor;
    work.push(left);
    work.push(right);
    ++panels;
    if (panels % 64 == 0) refresh();
  }
  refresh();

  result.value = total;
  result.error_estimate = total_err;
  result.converged = total_err <= tolerance();
  return result;
}

double gegenbauer_log_norm_sq(int n, double lambda) {
  return (1.0 - 2.0 * lambda) * std::numbers::ln2 + std::log(std::numbers::pi) + log_gamma(n + 2.0 * lambda) -
         2.0 * log_gamma(lambda) - std::log(n + lambda) - log_gamma(n + 1.0);
}

IntegralResult poly_entropy_E(const PolynomialSpec& spec, const QuadratureConfig& config) {
  validate(spec);
  if (spec.family != PolyFamily::GegenbauerC) throw DomainError("poly_entropy_E: expects a Gegenbauer spec");
  const double lambda = spec.param1;
  if (!(lambda > 0.0)) throw DomainError("poly_entropy_E: needs lambda > 0 for a finite norm");
  const double log_h2 = gegenbauer_log_norm_sq(spec.degree, lambda);
  // constant orthonormal polynomial: the density is the normalized weight
  if (spec.degree == 0) return {log_h2, 0.0, 0, true};

  std::vector<double> cuts;
  for (double x : poly_roots(spec)) cuts.push_back(std::acos(x));
  std::sort(cuts.begin(), cuts.end());

  const auto integrand = [&](double theta) {
    const double c = poly_eval(spec, std::cos(theta));
    if (c == 0.0) return 0.0;
    const double log_y2 = 2.0 * std::log(std::abs(c)) - log_h2;
    return -std::exp(2.0 * lambda * std::log(std::sin(theta)) + log_y2) * log_y2;
  };
  return integrate_adaptive(integrand, {0.0, std::numbers::pi}, cuts, config);
}

IntegralResult kummer_log_integral(int n, int l, int D, const QuadratureConfig& config) {
  if (D < 2 || n < 1 || l < 0 || l > n - 1) throw DomainError("kummer_log_integral: invalid (n, l, D)");
  const int m = n - l - 1;
  if (m == 0) return {0.0, 0.0, 0, true};
  const double b = 2.0 * l + D - 1;
  const auto spec = PolynomialSpec::kummer(m, b);
  const std::vector<double> roots = poly_roots(spec);

  const auto integrand = [&](double t) {
    if (t <= 0.0) return 0.0;
    const double F = poly_eval(spec, t);
    if (F == 0.0) return 0.0;
    const double log_f2 = 2.0 * std::log(std::abs(F));
    return std::exp(-t + b * std::log(t) + log_f2) * log_f2;
  };
  return integrate_adaptive(integrand, {0.0}, roots, config, 2.0 * m + b + 1.0);
}

}  // namespace hydent
