#pragma once

#include "hydent/hydrogenic.hpp"
#include "hydent/rational.hpp"

#include <vector>

namespace hydent {

/// Summation backend for terminating hypergeometric sums.
///  Compensated: double precision with Neumaier-compensated accumulation.
///  Exact:       arbitrary-precision rationals (every double input is exact).
enum class SumBackend { Compensated, Exact };

/// F_A^{(s)}(a; b_1..b_s; c_1..c_s; 1, ..., 1), terminating because every
/// b_k is a nonpositive integer.
struct LauricellaSpec {
  double a = 0;
  std::vector<double> b;
  std::vector<double> c;
};

/// r-variate Srivastava-Daoust F^{1:2;...;2}_{1:1;...;1} at unit arguments:
///   sum_j (a0)_{|j|}/(b0)_{|j|} prod_k (a_k1)_{j_k} (a_k2)_{j_k} / ((b_k1)_{j_k} j_k!)
/// terminating because every a_k1 is a nonpositive integer.
struct SrivastavaDaoustSpec {
  double a0 = 0;
  double b0 = 1;
  struct Variable {
    double a1 = 0;
    double a2 = 0;
    double b1 = 1;
  };
  std::vector<Variable> vars;
};

/// Throws DomainError for a non-terminating or ill-posed spec.
double lauricella_fa_unit(const LauricellaSpec& spec, SumBackend backend = SumBackend::Compensated);
Rational lauricella_fa_unit_exact(const LauricellaSpec& spec);

double srivastava_daoust_unit(const SrivastavaDaoustSpec& spec, SumBackend backend = SumBackend::Compensated);
Rational srivastava_daoust_unit_exact(const SrivastavaDaoustSpec& spec);

/// c_{i,j}(n,l,D) = (2l+D-1+i)_{1+j} / Gamma(2l+D-1+j) * (-n+l+1)_i (-n+l+1)_j / (i! j!)
double coeff_cij(int n, int l, int D, int i, int j);
Rational coeff_cij_exact(int n, int l, int D, int i, int j);

/// C_s = sum_{i+j=s} c_{i,j}, s = 0..2(n-l-1), exactly.
std::vector<Rational> coeff_diagonal_sums_exact(int n, int l, int D);

/// Per-hyperangle factor B_q of the angular entropic moment, for real q >= 1.
/// Arguments: mu_hi = mu_j, mu_lo = |mu_{j+1}|, alpha_j = (D-j-1)/2.
double angular_factor_B(int D, int mu_hi, int mu_lo, int j, double q);

/// Per-hyperangle Srivastava-Daoust factor G_q; q must be a positive integer
/// (the sum has 2q variables).
double angular_factor_G(int D, int mu_hi, int mu_lo, int j, int q);

/// Lambda_q[Y] = integral of |Y|^{2q} over the sphere, in closed form.
double entropic_moment(const QuantumState& s, int q);

}  // namespace hydent
