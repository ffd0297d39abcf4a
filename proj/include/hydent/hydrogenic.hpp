#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hydent {

/// A stationary state of the D-dimensional hydrogenic system.
///
/// `mu` holds (mu_1, ..., mu_{D-1}); mu_1 is the grand orbital number l and
/// mu_{D-1} the signed azimuthal number m. Every entropy depends on |m| only.
struct QuantumState {
  int D = 3;
  double Z = 1.0;
  int n = 1;
  std::vector<int> mu;

  int l() const;
  int m() const { return mu.empty() ? 0 : mu.back(); }

  /// Convenience for the common (D, Z, n, l) form with mu_2.. = 0.
  static QuantumState with_l(int D, double Z, int n, int l);

  friend bool operator==(const QuantumState&, const QuantumState&) = default;
};

std::string to_string(const QuantumState& s);

enum class ValidationFailure { Dimension, Charge, PrincipalNumber, MuLength, LRange, MuChain };

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationFailure kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  ValidationFailure kind() const { return kind_; }

 private:
  ValidationFailure kind_;
};

/// Parameters derived from a valid state.
struct DerivedParams {
  double eta = 0;     // n + (D-3)/2
  double Lc = 0;      // l + (D-3)/2
  double lambda = 0;  // eta / (2Z), the radial length scale r = lambda * x
  std::vector<double> alpha;  // alpha_j = (D-j-1)/2, j = 1..D-2
  double log_Nsq = 0;         // ln of the squared radial normalization
  double log_NangSq = 0;      // ln of the squared angular normalization
  double Nsq = 0;
  double NangSq = 0;

  int laguerre_degree = 0;         // n - l - 1
  double laguerre_alpha = 0;       // 2l + D - 2
};

/// Throws ValidationError naming the violated invariant.
DerivedParams validate_and_derive(const QuantumState& s);

/// rho_{n,l}(r) = N^2 x^{2l} e^{-x} [L_{n-l-1}^{(2l+D-2)}(x)]^2 with x = r/lambda.
/// The radial measure is r^{D-1} rho dr.
double radial_density(const QuantumState& s, double r);

/// ln rho_{n,l}(r); -infinity at a node.
double log_radial_density(const QuantumState& s, const DerivedParams& p, double r);

/// One theta_j factor of |Y|^2:
///   f_j(theta) = c_j [C_{deg}^{(lambda)}(cos theta)]^2 (sin theta)^{2 mu_lo}
/// integrated against (sin theta)^{2 alpha} d theta. The product over j of the
/// c_j times 1/(2 pi) is the squared angular normalization.
struct AngularFactor {
  int j = 1;
  int mu_hi = 0;
  int mu_lo = 0;   // |mu_{j+1}|
  int degree = 0;  // mu_hi - mu_lo
  double alpha = 0;
  double lambda = 0;  // alpha + mu_lo
  double log_c = 0;
};

std::vector<AngularFactor> angular_factors(const QuantumState& s);

/// ln f_j(theta); -infinity at a node of the factor.
double log_angular_factor(const AngularFactor& f, double theta);

/// |Y_{l,{mu}}(Omega)|^2 at hyperangles (theta_1, ..., theta_{D-2}, phi).
double angular_density(const QuantumState& s, std::span<const double> angles);

}  // namespace hydent
