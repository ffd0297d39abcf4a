#include "hydent/rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hydent {

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("to_rational: non-finite value");
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  // 53-bit integer mantissa, exact
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  BigInt num(scaled);
  if (exponent >= 0) return Rational(num << exponent);
  BigInt den(1);
  den <<= -exponent;
  return Rational(num, den);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt factorial_exact(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial_exact(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

Rational harmonic_exact(unsigned k) {
  Rational h = 0;
  for (unsigned i = 1; i <= k; ++i) h += Rational(1, i);
  return h;
}

}  // namespace hydent
