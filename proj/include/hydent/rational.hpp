#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hydent {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact value of a finite double (every double is a dyadic rational).
Rational to_rational(double x);

double to_double(const Rational& q);

BigInt factorial_exact(unsigned n);
BigInt binomial_exact(unsigned n, unsigned k);

/// Harmonic number H_k = sum_{i=1}^k 1/i.
Rational harmonic_exact(unsigned k);

}  // namespace hydent
