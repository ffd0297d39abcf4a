#pragma once

#include "hydent/entropy.hpp"
#include "hydent/hydrogenic.hpp"
#include "hydent/quad.hpp"

#include <string>
#include <vector>

namespace hydent::oracle {

/// Default oracle accuracy: tight enough for 1e-9 comparisons against the closed forms.
inline constexpr QuadratureConfig kOracleConfig{1e-11, 1e-11, 4000};

/// -int r^{D-1} rho ln rho dr by direct quadrature with breakpoints at the
/// scaled Laguerre roots. `converged` is false if the density fails its
/// normalization check (1e-10) or the quadrature misses tolerance.
IntegralResult radial_entropy_oracle(const QuantumState& s, const QuadratureConfig& config = kOracleConfig);

/// -int |Y|^2 ln |Y|^2 dOmega, one theta integral per factor of |Y|^2.
IntegralResult angular_entropy_oracle(const QuantumState& s, const QuadratureConfig& config = kOracleConfig);

/// int |Y|^{2q} dOmega for real q >= 1 (any q > 0 is accepted).
IntegralResult lambda_q_oracle(const QuantumState& s, double q, const QuadratureConfig& config = kOracleConfig);

/// Both parts by the oracle; throws ConvergenceError when either misses tolerance.
EntropyResult total_entropy_oracle(const QuantumState& s, const QuadratureConfig& config = kOracleConfig);

struct CrossCheckTolerances {
  double radial = 1e-8;
  double angular = 1e-8;
  double moments = 1e-6;  // any pair that involves the moment-derivative method
  double total = 1e-8;
};

struct CrossCheckRow {
  std::string quantity;  // radial, angular, total
  std::string method_a;
  std::string method_b;
  double value_a = 0;
  double value_b = 0;
  double diff = 0;
  double tol = 0;
  bool pass = false;
};

struct CrossCheckReport {
  QuantumState state;
  bool valid = true;
  std::vector<std::string> errors;  // validation or numeric failures, one line each
  std::vector<CrossCheckRow> rows;

  bool passed() const;
};

/// Every applicable method for each part, compared pairwise. Never throws.
CrossCheckReport cross_check(const QuantumState& s, const CrossCheckTolerances& tol = {});

}  // namespace hydent::oracle
