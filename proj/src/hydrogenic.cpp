#include "hydent/hydrogenic.hpp"

#include "hydent/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace hydent {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_abs(double v) { return v == 0.0 ? kNegInf : std::log(std::abs(v)); }
}  // namespace

int QuantumState::l() const {
  if (mu.empty()) return 0;
  return D == 2 ? std::abs(mu.front()) : mu.front();
}

QuantumState QuantumState::with_l(int D, double Z, int n, int l) {
  QuantumState s{D, Z, n, std::vector<int>(D > 1 ? D - 1 : 0, 0)};
  if (!s.mu.empty()) s.mu.front() = l;
  return s;
}

std::string to_string(const QuantumState& s) {
  std::ostringstream os;
  os << "(D=" << s.D << ", Z=" << s.Z << ", n=" << s.n << ", mu=(";
  for (std::size_t i = 0; i < s.mu.size(); ++i) os << (i ? "," : "") << s.mu[i];
  os << "))";
  return os.str();
}

DerivedParams validate_and_derive(const QuantumState& s) {
  if (s.D < 2) throw ValidationError(ValidationFailure::Dimension, "dimension must be at least 2");
  if (!(s.Z > 0.0) || !std::isfinite(s.Z))
    throw ValidationError(ValidationFailure::Charge, "nuclear charge must be positive and finite");
  if (s.n < 1) throw ValidationError(ValidationFailure::PrincipalNumber, "principal number n must be at least 1");
  if (static_cast<int>(s.mu.size()) != s.D - 1) {
    std::ostringstream os;
    os << "expected " << s.D - 1 << " hyperquantum numbers mu_1..mu_{D-1}, got " << s.mu.size();
    throw ValidationError(ValidationFailure::MuLength, os.str());
  }
  const int l = s.l();
  if (l < 0) throw ValidationError(ValidationFailure::LRange, "l must be nonnegative");
  if (l > s.n - 1) {
    std::ostringstream os;
    os << "l exceeds n-1 (l = " << l << ", n = " << s.n << ")";
    throw ValidationError(ValidationFailure::LRange, os.str());
  }
  for (int k = 1; k < s.D - 1; ++k) {
    const bool last = k == s.D - 2;
    const int cur = last ? std::abs(s.mu[k]) : s.mu[k];
    if (cur < 0 || cur > s.mu[k - 1]) {
      std::ostringstream os;
      os << "hyperquantum numbers must satisfy mu_1 >= mu_2 >= ... >= |mu_{D-1}| >= 0 (violated at mu_" << k + 1
         << ")";
      throw ValidationError(ValidationFailure::MuChain, os.str());
    }
  }

  DerivedParams p;
  const int D = s.D;
  p.eta = s.n + (D - 3) / 2.0;
  p.Lc = l + (D - 3) / 2.0;
  p.lambda = p.eta / (2.0 * s.Z);
  p.laguerre_degree = s.n - l - 1;
  p.laguerre_alpha = 2.0 * l + D - 2;
  p.log_Nsq = -D * std::log(p.lambda) + log_gamma(p.laguerre_degree + 1.0) - std::log(2.0 * p.eta) -
              log_gamma(static_cast<double>(s.n + l + D - 2));
  p.Nsq = std::exp(p.log_Nsq);

  for (int j = 1; j <= D - 2; ++j) p.alpha.push_back((D - j - 1) / 2.0);
  p.log_NangSq = -std::log(2.0 * std::numbers::pi);
  for (const auto& f : angular_factors(s)) p.log_NangSq += f.log_c;
  p.NangSq = std::exp(p.log_NangSq);
  return p;
}

std::vector<AngularFactor> angular_factors(const QuantumState& s) {
  std::vector<AngularFactor> out;
  for (int j = 1; j <= s.D - 2; ++j) {
    AngularFactor f;
    f.j = j;
    f.mu_hi = std::abs(s.mu[j - 1]);
    f.mu_lo = std::abs(s.mu[j]);
    f.degree = f.mu_hi - f.mu_lo;
    f.alpha = (s.D - j - 1) / 2.0;
    f.lambda = f.alpha + f.mu_lo;
    // per-factor term of the hyperspherical normalization constant
    f.log_c = std::log(f.alpha + f.mu_hi) + log_gamma(f.degree + 1.0) + 2.0 * log_gamma(f.alpha + f.mu_lo) -
              std::log(std::numbers::pi) - (1.0 - 2.0 * f.alpha - 2.0 * f.mu_lo) * std::numbers::ln2 -
              log_gamma(2.0 * f.alpha + f.mu_hi + f.mu_lo);
    out.push_back(f);
  }
  return out;
}

double log_angular_factor(const AngularFactor& f, double theta) {
  const double c = poly_eval(PolynomialSpec::gegenbauer(f.degree, f.lambda), std::cos(theta));
  double v = f.log_c + 2.0 * log_abs(c);
  if (f.mu_lo > 0) v += 2.0 * f.mu_lo * log_abs(std::sin(theta));
  return v;
}

double log_radial_density(const QuantumState& s, const DerivedParams& p, double r) {
  const double x = r / p.lambda;
  const double lag = poly_eval(PolynomialSpec::laguerre(p.laguerre_degree, p.laguerre_alpha), x);
  double v = p.log_Nsq - x + 2.0 * log_abs(lag);
  const int l = s.l();
  if (l > 0) v += 2.0 * l * log_abs(x);
  return v;
}

double radial_density(const QuantumState& s, double r) {
  const DerivedParams p = validate_and_derive(s);
  return std::exp(log_radial_density(s, p, r));
}

double angular_density(const QuantumState& s, std::span<const double> angles) {
  validate_and_derive(s);
  if (static_cast<int>(angles.size()) != s.D - 1)
    throw std::invalid_argument("angular_density: expected D-1 hyperangles");
  double logv = -std::log(2.0 * std::numbers::pi);
  for (const auto& f : angular_factors(s)) logv += log_angular_factor(f, angles[f.j - 1]);
  return std::exp(logv);
}

}  // namespace hydent
