#include "hydent/hypersum.hpp"

#include "hydent/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <type_traits>

namespace hydent {

namespace {

constexpr double kMaxTerminatingOrder = 4096;

// Upper summation limit M for a numerator parameter -M; throws unless M is a
// nonnegative integer.
int termination_order(double p, const char* what) {
  if (!(p <= 0.0) || p != std::floor(p) || -p > kMaxTerminatingOrder)
    throw DomainError(std::string(what) + ": numerator parameter must be a nonpositive integer, got " +
                      std::to_string(p));
  return static_cast<int>(-p);
}

template <class T>
struct Accumulator {
  T sum{0};
  void add(const T& v) { sum += v; }
  T value() const { return sum; }
};

// Neumaier compensated summation
template <>
struct Accumulator<double> {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// sum over the box prod_k [0, |g_k|) of h(|j|) prod_k g_k(j_k). The summand
// factorizes, so the box reduces to a convolution over the total index.
template <class T>
T factorized_sum(const std::vector<std::vector<T>>& g, const std::vector<T>& h) {
  std::vector<T> conv{T(1)};
  for (const auto& gk : g) {
    std::vector<T> next(conv.size() + gk.size() - 1);
    for (std::size_t s = 0; s < next.size(); ++s) {
      Accumulator<T> acc;
      const std::size_t lo = s >= gk.size() ? s - gk.size() + 1 : 0;
      for (std::size_t i = lo; i <= std::min(s, conv.size() - 1); ++i) acc.add(conv[i] * gk[s - i]);
      next[s] = acc.value();
    }
    conv = std::move(next);
  }
  Accumulator<T> total;
  for (std::size_t s = 0; s < conv.size(); ++s) total.add(h[s] * conv[s]);
  return total.value();
}

template <class T>
T convert(double x) {
  if constexpr (std::is_same_v<T, double>)
    return x;
  else
    return to_rational(x);
}

template <class T>
T lauricella_impl(const LauricellaSpec& spec) {
  if (spec.b.empty() || spec.b.size() != spec.c.size())
    throw DomainError("lauricella_fa_unit: need s >= 1 and matching b/c lists");
  std::vector<std::vector<T>> g;
  int total = 0;
  for (std::size_t k = 0; k < spec.b.size(); ++k) {
    const int M = termination_order(spec.b[k], "lauricella_fa_unit");
    if (!(spec.c[k] > 0.0)) throw DomainError("lauricella_fa_unit: denominator parameters must be positive");
    const T b = convert<T>(spec.b[k]), c = convert<T>(spec.c[k]);
    std::vector<T> gk(M + 1);
    gk[0] = T(1);
    for (int j = 0; j < M; ++j) gk[j + 1] = gk[j] * (b + T(j)) / ((c + T(j)) * T(j + 1));
    g.push_back(std::move(gk));
    total += M;
  }
  const T a = convert<T>(spec.a);
  std::vector<T> h(total + 1);
  h[0] = T(1);
  for (int s = 0; s < total; ++s) h[s + 1] = h[s] * (a + T(s));
  return factorized_sum(g, h);
}

template <class T>
T srivastava_daoust_impl(const SrivastavaDaoustSpec& spec) {
  std::vector<std::vector<T>> g;
  int total = 0;
  for (const auto& v : spec.vars) {
    const int M = termination_order(v.a1, "srivastava_daoust_unit");
    for (int j = 0; j < M; ++j)
      if (v.b1 + j == 0.0) throw DomainError("srivastava_daoust_unit: denominator vanishes inside the sum");
    const T a1 = convert<T>(v.a1), a2 = convert<T>(v.a2), b1 = convert<T>(v.b1);
    std::vector<T> gk(M + 1);
    gk[0] = T(1);
    for (int j = 0; j < M; ++j) gk[j + 1] = gk[j] * (a1 + T(j)) * (a2 + T(j)) / ((b1 + T(j)) * T(j + 1));
    g.push_back(std::move(gk));
    total += M;
  }
  for (int s = 0; s < total; ++s)
    if (spec.b0 + s == 0.0) throw DomainError("srivastava_daoust_unit: denominator vanishes inside the sum");
  const T a0 = convert<T>(spec.a0), b0 = convert<T>(spec.b0);
  std::vector<T> h(total + 1);
  h[0] = T(1);
  for (int s = 0; s < total; ++s) h[s + 1] = h[s] * (a0 + T(s)) / (b0 + T(s));
  return factorized_sum(g, h);
}

void check_radial_indices(int n, int l, int D, int i, int j) {
  if (D < 2 || n < 1 || l < 0 || l > n - 1) throw DomainError("coeff_cij: invalid (n, l, D)");
  const int m = n - l - 1;
  if (i < 0 || j < 0 || i > m || j > m) throw DomainError("coeff_cij: index out of range 0..n-l-1");
}

double log_binomial(int n, int k) { return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0); }

}  // namespace

double lauricella_fa_unit(const LauricellaSpec& spec, SumBackend backend) {
  if (backend == SumBackend::Exact) return to_double(lauricella_impl<Rational>(spec));
  return lauricella_impl<double>(spec);
}

Rational lauricella_fa_unit_exact(const LauricellaSpec& spec) { return lauricella_impl<Rational>(spec); }

double srivastava_daoust_unit(const SrivastavaDaoustSpec& spec, SumBackend backend) {
  if (backend == SumBackend::Exact) return to_double(srivastava_daoust_impl<Rational>(spec));
  return srivastava_daoust_impl<double>(spec);
}

Rational srivastava_daoust_unit_exact(const SrivastavaDaoustSpec& spec) {
  return srivastava_daoust_impl<Rational>(spec);
}

// c_{i,j} = (-1)^{i+j} C(m,i) C(m,j) (b+i+j)! / ((b+i-1)! (b+j-1)!),  b = 2l+D-1, m = n-l-1
double coeff_cij(int n, int l, int D, int i, int j) {
  check_radial_indices(n, l, D, i, j);
  const int m = n - l - 1;
  const int b = 2 * l + D - 1;
  const double sign = (i + j) % 2 == 0 ? 1.0 : -1.0;
  if (b + i + j <= 170) {
    double v = pochhammer(b + i, 1 + j);
    for (int k = 1; k < b + j; ++k) v /= k;
    double bi = 1.0, bj = 1.0;
    for (int k = 1; k <= i; ++k) bi = bi * (m - k + 1) / k;
    for (int k = 1; k <= j; ++k) bj = bj * (m - k + 1) / k;
    return sign * v * bi * bj;
  }
  const double lv = log_gamma(b + i + j + 1.0) - log_gamma(b + i) - log_gamma(b + j) + log_binomial(m, i) +
                    log_binomial(m, j);
  return sign * std::exp(lv);
}

Rational coeff_cij_exact(int n, int l, int D, int i, int j) {
  check_radial_indices(n, l, D, i, j);
  const int m = n - l - 1;
  const unsigned b = 2 * l + D - 1;
  Rational v(factorial_exact(b + i + j) * binomial_exact(m, i) * binomial_exact(m, j),
             factorial_exact(b + i - 1) * factorial_exact(b + j - 1));
  return (i + j) % 2 == 0 ? v : Rational(-v);
}

std::vector<Rational> coeff_diagonal_sums_exact(int n, int l, int D) {
  check_radial_indices(n, l, D, 0, 0);
  const int m = n - l - 1;
  const unsigned b = 2 * l + D - 1;
  std::vector<Rational> u(m + 1);
  for (int i = 0; i <= m; ++i) {
    u[i] = Rational(binomial_exact(m, i), factorial_exact(b + i - 1));
    if (i % 2) u[i] = -u[i];
  }
  std::vector<Rational> out(2 * m + 1);
  for (int s = 0; s <= 2 * m; ++s) {
    Rational acc = 0;
    for (int i = std::max(0, s - m); i <= std::min(s, m); ++i) acc += u[i] * u[s - i];
    out[s] = acc * Rational(factorial_exact(b + s));
  }
  return out;
}

namespace {
void check_angular_args(int D, int mu_hi, int mu_lo, int j) {
  if (D < 3 || j < 1 || j > D - 2) throw DomainError("angular factor: need D >= 3 and 1 <= j <= D-2");
  if (mu_lo < 0 || mu_hi < mu_lo) throw DomainError("angular factor: need mu_hi >= mu_lo >= 0");
}
}  // namespace

double angular_factor_B(int D, int mu_hi, int mu_lo, int j, double q) {
  check_angular_args(D, mu_hi, mu_lo, j);
  if (!(q > 0.0)) throw DomainError("angular_factor_B: q must be positive");
  const int delta = mu_hi - mu_lo;
  if (delta == 0) return 1.0;
  const double alpha = (D - j - 1) / 2.0;
  const auto log_poch = [](double z, int k) { return log_gamma(z + k) - log_gamma(z); };
  const double per_power =
      log_poch(2.0 * alpha + 2.0 * mu_lo, delta) - log_gamma(delta + 1.0) - log_poch(alpha + mu_lo, delta);
  const double shifted = log_gamma(q * mu_hi + alpha + 1.0) - log_gamma(q * mu_lo + alpha + 1.0);
  return std::exp(q * per_power + shifted);
}

double angular_factor_G(int D, int mu_hi, int mu_lo, int j, int q) {
  check_angular_args(D, mu_hi, mu_lo, j);
  if (q < 1) throw DomainError("angular_factor_G: q must be a positive integer");
  const double alpha = (D - j - 1) / 2.0;
  SrivastavaDaoustSpec spec;
  spec.a0 = alpha + q * mu_lo + 0.5;
  spec.b0 = 2.0 * q * mu_lo + 2.0 * alpha + 1.0;
  const SrivastavaDaoustSpec::Variable v{static_cast<double>(mu_lo - mu_hi), 2.0 * alpha + mu_lo + mu_hi,
                                         alpha + mu_lo + 0.5};
  spec.vars.assign(2 * q, v);
  // the alternating sum loses ~8 digits in double already at Delta = 2, q = 3
  return srivastava_daoust_unit(spec, SumBackend::Exact);
}

double entropic_moment(const QuantumState& s, int q) {
  validate_and_derive(s);
  if (q < 1) throw DomainError("entropic_moment: q must be a positive integer");
  const int D = s.D;
  const int l = s.l();
  const int m = std::abs(s.m());
  const double half_d = D / 2.0;
  double log_v = (1.0 - q) * (std::numbers::ln2 + half_d * std::log(std::numbers::pi)) +
                 q * log_gamma(l + half_d) + log_gamma(q * m + 1.0) - log_gamma(q * l + half_d) -
                 q * log_gamma(m + 1.0);
  double product = 1.0;
  for (int j = 1; j <= D - 2; ++j) {
    const int hi = std::abs(s.mu[j - 1]);
    const int lo = std::abs(s.mu[j]);
    log_v += std::log(angular_factor_B(D, hi, lo, j, q));
    product *= angular_factor_G(D, hi, lo, j, q);
  }
  return std::exp(log_v) * product;
}

}  // namespace hydent
