#include "hydent/specfun.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <math.h>  // lgamma_r

namespace hydent {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// psi(x) for x >= 10 by the asymptotic series; the last retained term is
// below 1e-15 at x = 10.
double digamma_asymptotic(double x) {
  const double r = 1.0 / (x * x);
  const double series =
      r * (1.0 / 12 -
           r * (1.0 / 120 -
                r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r * (1.0 / 12)))))));
  return std::log(x) - 0.5 / x - series;
}

// Neumaier summation of 1/(a + step*i) for i in [0, count).
double reciprocal_sum(double a, double step, long count) {
  double sum = 0.0, comp = 0.0;
  for (long i = 0; i < count; ++i) {
    const double term = 1.0 / (a + step * static_cast<double>(i));
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double digamma(double x) {
  if (!(x > 0.0)) throw DomainError("digamma: argument must be positive, got " + std::to_string(x));

  constexpr long kExactLimit = 200;
  if (x == std::floor(x) && x <= kExactLimit) {
    // psi(n) = -gamma + H_{n-1}
    return -kEulerGamma + reciprocal_sum(1.0, 1.0, static_cast<long>(x) - 1);
  }
  const double twice = 2.0 * x;
  if (twice == std::floor(twice) && x <= kExactLimit) {
    // psi(k + 1/2) = -gamma - 2 ln 2 + sum_{i=1}^{k} 2/(2i-1)
    const long k = static_cast<long>(x - 0.5);
    return -kEulerGamma - 2.0 * std::numbers::ln2 + 2.0 * reciprocal_sum(1.0, 2.0, k);
  }

  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  return digamma_asymptotic(x) + shift;
}

double pochhammer(double z, int k) {
  if (k < 0) throw DomainError("pochhammer: negative count");
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= z + i;
  return p;
}

double pochhammer_real(double z, double y) {
  if (y == 0.0) return 1.0;
  if (y == std::floor(y) && y > 0.0 && y <= 64.0) return pochhammer(z, static_cast<int>(y));
  if (!(z > 0.0) || !(z + y > 0.0)) throw DomainError("pochhammer_real: needs z > 0 and z + y > 0");
  return std::exp(log_gamma(z + y) - log_gamma(z));
}

void validate(const PolynomialSpec& spec) {
  if (spec.degree < 0) throw DomainError("polynomial degree must be nonnegative");
  switch (spec.family) {
    case PolyFamily::LaguerreL:
      if (!(spec.param1 > -1.0)) throw DomainError("Laguerre parameter must exceed -1");
      break;
    case PolyFamily::GegenbauerC:
      if (!(spec.param1 > -0.5)) throw DomainError("Gegenbauer parameter must exceed -1/2");
      if (spec.param1 == 0.0 && spec.degree > 0) throw DomainError("Gegenbauer parameter 0 is degenerate");
      break;
    case PolyFamily::KummerPoly:
      if (is_nonpositive_integer(spec.kummer_lower()))
        throw DomainError("Kummer lower parameter must not be a nonpositive integer");
      break;
  }
}

PolyValue poly_eval_with_derivative(const PolynomialSpec& spec, double x) {
  validate(spec);
  const int n = spec.degree;
  double p_prev = 1.0, d_prev = 0.0;
  if (n == 0) return {1.0, 0.0};

  double p = 0.0, d = 0.0;
  switch (spec.family) {
    case PolyFamily::LaguerreL: {
      const double a = spec.param1;
      p = 1.0 + a - x;
      d = -1.0;
      for (int k = 1; k < n; ++k) {
        const double c = 2.0 * k + 1.0 + a - x;
        const double p_next = (c * p - (k + a) * p_prev) / (k + 1);
        const double d_next = (c * d - p - (k + a) * d_prev) / (k + 1);
        p_prev = p, d_prev = d, p = p_next, d = d_next;
      }
      break;
    }
    case PolyFamily::GegenbauerC: {
      const double lam = spec.param1;
      p = 2.0 * lam * x;
      d = 2.0 * lam;
      for (int k = 1; k < n; ++k) {
        const double c = 2.0 * (k + lam);
        const double e = k + 2.0 * lam - 1.0;
        const double p_next = (c * x * p - e * p_prev) / (k + 1);
        const double d_next = (c * (p + x * d) - e * d_prev) / (k + 1);
        p_prev = p, d_prev = d, p = p_next, d = d_next;
      }
      break;
    }
    case PolyFamily::KummerPoly: {
      // (b+k) M_{k+1} = (2k+b-x) M_k - k M_{k-1},  M_k = 1F1(-k; b; x)
      const double b = spec.kummer_lower();
      p = 1.0 - x / b;
      d = -1.0 / b;
      for (int k = 1; k < n; ++k) {
        const double c = 2.0 * k + b - x;
        const double p_next = (c * p - k * p_prev) / (b + k);
        const double d_next = (c * d - p - k * d_prev) / (b + k);
        p_prev = p, d_prev = d, p = p_next, d = d_next;
      }
      break;
    }
  }
  return {p, d};
}

double poly_eval(const PolynomialSpec& spec, double x) { return poly_eval_with_derivative(spec, x).value; }

std::vector<double> poly_roots(const PolynomialSpec& spec) {
  validate(spec);
  const int n = spec.degree;
  if (n < 1) throw DomainError("poly_roots: degree must be at least 1");

  PolynomialSpec work = spec;
  if (spec.family == PolyFamily::KummerPoly) {
    const double b = spec.kummer_lower();
    if (!(b > 0.0)) throw DomainError("poly_roots: Kummer roots need a positive lower parameter");
    work = PolynomialSpec::laguerre(n, b - 1.0);
  }

  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  if (work.family == PolyFamily::LaguerreL) {
    const double a = work.param1;
    for (int k = 0; k < n; ++k) diag(k) = 2.0 * k + a + 1.0;
    for (int k = 1; k < n; ++k) sub(k - 1) = std::sqrt(k * (k + a));
  } else {
    const double lam = work.param1;
    diag.setZero();
    for (int k = 1; k < n; ++k)
      sub(k - 1) = std::sqrt(k * (k + 2.0 * lam - 1.0) / (4.0 * (k + lam) * (k + lam - 1.0)));
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("poly_roots: eigenvalue iteration failed");

  std::vector<double> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  for (double& r : roots) {
    for (int it = 0; it < 3; ++it) {
      const auto [p, dp] = poly_eval_with_derivative(work, r);
      if (dp == 0.0 || p == 0.0) break;
      const double next = r - p / dp;
      if (std::abs(poly_eval(work, next)) >= std::abs(p)) break;
      r = next;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  GaussRule rule{std::vector<double>(n), std::vector<double>(n)};
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // one more pass for the derivative at the converged node
    double p0 = 1.0, p1 = 0.0;
    for (int k = 0; k < n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace hydent
