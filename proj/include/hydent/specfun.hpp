#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace hydent {

/// Thrown for arguments outside the domain of a special function or for an
/// inadmissible polynomial specification.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

double log_gamma(double x);
double digamma(double x);

/// Rising factorial (z)_k = z (z+1) ... (z+k-1), by direct product so that a
/// nonpositive integer z yields an exact zero once the factor z+i = 0 is hit.
double pochhammer(double z, int k);

/// (z)_y = Gamma(z+y)/Gamma(z) for real y, evaluated through log-gamma.
/// Requires z > 0 and z + y > 0.
double pochhammer_real(double z, double y);

enum class PolyFamily { LaguerreL, GegenbauerC, KummerPoly };

/// A classical polynomial of fixed degree.
///
///  - LaguerreL:   L_n^{(a)}(x),  param1 = a > -1
///  - GegenbauerC: C_n^{(l)}(x),  param1 = l > -1/2, l != 0
///  - KummerPoly:  1F1(-n; b; x), param1 = b, not a nonpositive integer
///
/// param2 is reserved for the Kummer lower parameter when a caller prefers to
/// keep param1 for something else; when set it overrides param1 for Kummer.
struct PolynomialSpec {
  PolyFamily family = PolyFamily::LaguerreL;
  int degree = 0;
  double param1 = 0.0;
  std::optional<double> param2;

  static PolynomialSpec laguerre(int n, double alpha) { return {PolyFamily::LaguerreL, n, alpha, {}}; }
  static PolynomialSpec gegenbauer(int n, double lambda) { return {PolyFamily::GegenbauerC, n, lambda, {}}; }
  static PolynomialSpec kummer(int m, double b) { return {PolyFamily::KummerPoly, m, b, {}}; }

  double kummer_lower() const { return param2.value_or(param1); }
};

/// Throws DomainError naming the violated invariant.
void validate(const PolynomialSpec& spec);

/// Three-term recurrence evaluation.
double poly_eval(const PolynomialSpec& spec, double x);

struct PolyValue {
  double value;
  double derivative;
};

/// Value and first derivative, both by differentiating the recurrence.
PolyValue poly_eval_with_derivative(const PolynomialSpec& spec, double x);

/// All real roots in ascending order (Golub-Welsch eigenvalues, Newton polished).
/// Kummer roots come from the equivalent Laguerre spec, since
/// 1F1(-m; a+1; x) is proportional to L_m^{(a)}(x); this needs b > 0.
std::vector<double> poly_roots(const PolynomialSpec& spec);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

}  // namespace hydent
