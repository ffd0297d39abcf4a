#pragma once

#include "hydent/specfun.hpp"

#include <functional>
#include <limits>
#include <span>
#include <stdexcept>

namespace hydent {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  /// Start of the mapped tail on [a, inf): R = tail_cut_multiplier * max(a, last breakpoint, scale hint).
  double tail_cut_multiplier = 2.0;
  /// Gauss-Legendre order of the low rule; the high rule uses twice as many nodes.
  int panel_order = 10;

  void validate() const;
};

struct IntegralResult {
  double value = 0;
  double error_estimate = 0;
  long evaluations = 0;
  bool converged = true;
};

/// Thrown when a quadrature that feeds a closed form does not meet its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Interval {
  double a = 0;
  double b = std::numeric_limits<double>::infinity();
};

/// Globally adaptive integration of f over [a,b] or [a,inf).
///
/// The interval is split at every breakpoint; nodes never land on a
/// breakpoint or an endpoint, so integrable singularities there (log, x^2 log x^2
/// at a polynomial zero) are never evaluated. For b = inf the tail past R is
/// mapped onto (0,1] by u = exp(-(x-R)). Panels are bisected, worst error
/// first, until the summed estimate meets max(rel_tol*|I|, abs_tol).
/// `scale` is a hint for where the integrand mass sits on a semi-infinite range.
IntegralResult integrate_adaptive(const std::function<double(double)>& f, Interval interval,
                                  std::span<const double> breakpoints = {}, const QuadratureConfig& config = {},
                                  double scale = 1.0);

/// E[y] = -int_{-1}^{1} w(x) y^2 ln y^2 dx for the orthonormal Gegenbauer
/// polynomial y = C_n^{(lambda)} / h_n, w(x) = (1-x^2)^{lambda-1/2}.
/// Evaluated in theta = arccos x with breakpoints at the polynomial zeros.
IntegralResult poly_entropy_E(const PolynomialSpec& gegenbauer, const QuadratureConfig& config = {});

/// ln h_n^2 for the Gegenbauer norm h_n^2 = 2^{1-2l} pi Gamma(n+2l) / (Gamma(l)^2 (n+l) n!).
double gegenbauer_log_norm_sq(int n, double lambda);

/// I~ = int_0^inf e^{-t} t^{2l+D-1} F^2 ln F^2 dt, F = 1F1(-(n-l-1); 2l+D-1; t).
IntegralResult kummer_log_integral(int n, int l, int D, const QuadratureConfig& config = {});

}  // namespace hydent
