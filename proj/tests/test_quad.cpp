#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hydent/quad.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

using namespace hydent;
using doctest::Approx;

TEST_CASE("integrate_adaptive basics") {
  const auto exp_neg = [](double x) { return std::exp(-x); };
  IntegralResult r = integrate_adaptive(exp_neg, {0.0});
  CHECK(r.converged);
  CHECK(r.value == Approx(1.0).epsilon(1e-12));

  const std::vector<double> bp{2.0};
  r = integrate_adaptive([](double x) { return x * x * x * std::exp(-x) * (2 - x) * (2 - x); }, {0.0}, bp);
  CHECK(r.converged);
  CHECK(r.value == Approx(48.0).epsilon(1e-10));

  r = integrate_adaptive([](double x) { return std::log(x); }, {0.0, 1.0});
  CHECK(r.converged);
  CHECK(r.value == Approx(-1.0).epsilon(1e-10));
  CHECK(r.error_estimate >= 0.0);
  CHECK(r.evaluations > 0);
}

TEST_CASE("bad configuration and intervals") {
  const auto f = [](double x) { return x; };
  CHECK_THROWS_AS(integrate_adaptive(f, {0.0, 1.0}, {}, {0.0, 1e-12}), std::invalid_argument);
  CHECK_THROWS_AS(integrate_adaptive(f, {0.0, 1.0}, {}, {1e-10, 1e-12, 0}), std::invalid_argument);
  CHECK_THROWS_AS(integrate_adaptive(f, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(integrate_adaptive(f, {-std::numeric_limits<double>::infinity(), 1.0}), std::invalid_argument);
}

TEST_CASE("non-convergence is flagged with a best estimate") {
  const QuadratureConfig tight{1e-14, 1e-16, 2};
  const IntegralResult r = integrate_adaptive([](double x) { return std::pow(x, -0.9); }, {0.0, 1.0}, {}, tight);
  CHECK_FALSE(r.converged);
  CHECK(std::isfinite(r.value));
  CHECK(r.value > 1.0);
}

TEST_CASE("gamma moments of x^k e^-x") {
  for (int k = 0; k <= 30; ++k) {
    const IntegralResult r =
        integrate_adaptive([k](double x) { return std::exp(k * std::log(x) - x); }, {0.0}, {}, {}, k + 1.0);
    CAPTURE(k);
    CHECK(r.converged);
    CHECK(r.value == Approx(std::tgamma(k + 1.0)).epsilon(1e-10));
  }
}

TEST_CASE("doubling the panel order stays within the error estimate") {
  const auto f = [](double x) { return std::exp(-x) * std::pow(x, 4.5) * std::log(std::abs(x - 3.0) + 1e-300); };
  const std::vector<double> bp{3.0};
  QuadratureConfig lo;
  QuadratureConfig hi;
  hi.panel_order = 20;
  const IntegralResult a = integrate_adaptive(f, {0.0}, bp, lo, 6.0);
  const IntegralResult b = integrate_adaptive(f, {0.0}, bp, hi, 6.0);
  CHECK(a.converged);
  CHECK(b.converged);
  CHECK(std::abs(a.value - b.value) <= a.error_estimate + b.error_estimate + 1e-14);
}

TEST_CASE("Gegenbauer polynomial entropy") {
  CHECK(poly_entropy_E(PolynomialSpec::gegenbauer(0, 0.5)).value == Approx(std::numbers::ln2).epsilon(1e-14));
  IntegralResult r = poly_entropy_E(PolynomialSpec::gegenbauer(1, 0.5));
  CHECK(r.converged);
  CHECK(r.value == Approx(2.0 / 3.0 - std::log(1.5)).epsilon(1e-11));
  for (double lambda : {0.5, 1.0, 1.5, 5.0, 20.0})
    CHECK(std::abs(poly_entropy_E(PolynomialSpec::gegenbauer(0, lambda)).value -
                   gegenbauer_log_norm_sq(0, lambda)) <= 1e-12);
  // reference values from an independent high-precision quadrature
  r = poly_entropy_E(PolynomialSpec::gegenbauer(2, 1.5), {1e-13, 1e-15});
  CHECK(r.converged);
  CHECK(r.value == Approx(-0.511969512112618418).epsilon(1e-12));
  r = poly_entropy_E(PolynomialSpec::gegenbauer(3, 1.0), {1e-13, 1e-15});
  CHECK(r.converged);
  CHECK(r.value == Approx(-0.298417294710545135).epsilon(1e-12));
  CHECK_THROWS_AS(poly_entropy_E(PolynomialSpec::laguerre(1, 1.0)), DomainError);
}

TEST_CASE("Gegenbauer norm") {
  // h_n^2 = int (1-x^2)^{l-1/2} C_n^2; Legendre case 2/(2n+1)
  for (int n = 0; n <= 6; ++n) CHECK(std::exp(gegenbauer_log_norm_sq(n, 0.5)) == Approx(2.0 / (2 * n + 1)));
  // Chebyshev U case pi/2
  for (int n = 0; n <= 6; ++n) CHECK(std::exp(gegenbauer_log_norm_sq(n, 1.0)) == Approx(std::numbers::pi / 2));
}

TEST_CASE("Kummer-log integral") {
  CHECK(kummer_log_integral(1, 0, 3).value == 0.0);
  CHECK(kummer_log_integral(5, 4, 7).value == 0.0);
  const QuadratureConfig cfg{1e-13, 1e-15, 4000};
  IntegralResult r = kummer_log_integral(2, 0, 3, cfg);
  CHECK(r.converged);
  CHECK(r.value == Approx(2.22648412587794813).epsilon(1e-12));
  r = kummer_log_integral(2, 0, 4, cfg);
  CHECK(r.converged);
  CHECK(r.value == Approx(1.55418365678889739).epsilon(1e-12));
  CHECK_THROWS_AS(kummer_log_integral(2, 2, 3), DomainError);
}

TEST_CASE("Kummer-log integral ignores spurious breakpoints") {
  for (auto [n, l, D] : {std::array{4, 0, 3}, std::array{6, 2, 5}, std::array{9, 1, 2}}) {
    const int m = n - l - 1;
    const double b = 2.0 * l + D - 1;
    const auto spec = PolynomialSpec::kummer(m, b);
    std::vector<double> bp = poly_roots(spec);
    for (double extra : {0.7, 3.3, 11.1, 17.9}) bp.push_back(extra);
    const auto f = [&](double t) {
      const double F = poly_eval(spec, t);
      if (F == 0.0) return 0.0;
      const double lf = 2.0 * std::log(std::abs(F));
      return std::exp(-t + b * std::log(t) + lf) * lf;
    };
    const QuadratureConfig cfg{1e-12, 1e-14, 4000};
    const IntegralResult a = kummer_log_integral(n, l, D, cfg);
    const IntegralResult c = integrate_adaptive(f, {0.0}, bp, cfg, 2.0 * m + b + 1.0);
    CHECK(a.converged);
    CHECK(c.converged);
    CHECK(a.value == Approx(c.value).epsilon(1e-11));
  }
}
