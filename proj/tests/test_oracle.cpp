#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hydent/oracle.hpp"

#include <cmath>
#include <numbers>

using namespace hydent;
using namespace hydent::oracle;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

QuantumState st(int D, double Z, int n, std::vector<int> mu) { return {D, Z, n, std::move(mu)}; }

double near(const IntegralResult& r, double want) {
  CHECK(r.converged);
  return std::abs(r.value - want);
}

}  // namespace

TEST_CASE("radial oracle") {
  CHECK(near(radial_entropy_oracle(st(3, 1, 1, {0, 0})), 3.0 - 2.0 * std::numbers::ln2) <= 1e-9);
  CHECK(near(radial_entropy_oracle(st(4, 1, 1, {0, 0, 0})), 4.0 + std::log(6.0) + 4.0 * std::log(0.75)) <= 1e-9);
  CHECK(near(radial_entropy_oracle(st(3, 1, 2, {1, 0})), 5.0 / 6.0 + std::log(24.0) + 2.0 * kEulerGamma) <= 1e-9);
}

TEST_CASE("angular oracle") {
  CHECK(near(angular_entropy_oracle(st(3, 1, 1, {0, 0})), std::log(4.0 * kPi)) <= 1e-9);
  CHECK(near(angular_entropy_oracle(st(3, 1, 2, {1, 1})), std::log(2.0 * kPi / 3.0) + 5.0 / 3.0) <= 1e-8);
  const double s7 = std::log(2.0 * std::pow(kPi, 3.5) / (15.0 * std::sqrt(kPi) / 8.0));
  CHECK(near(angular_entropy_oracle(st(7, 1, 1, {0, 0, 0, 0, 0, 0})), s7) <= 1e-9);
  CHECK(near(angular_entropy_oracle(st(2, 1, 3, {2})), std::log(2.0 * kPi)) == 0.0);
}

TEST_CASE("moment oracle") {
  for (const auto& s : {st(3, 1, 1, {0, 0}), st(5, 1, 4, {3, 2, 0, 0}), st(4, 1, 6, {5, 1, -1})})
    CHECK(near(lambda_q_oracle(s, 1.0), 1.0) <= 1e-10);
  CHECK(near(lambda_q_oracle(st(3, 1, 1, {0, 0}), 2.0), 1.0 / (4.0 * kPi)) <= 1e-10);
  CHECK(near(lambda_q_oracle(st(3, 1, 2, {1, 0}), 2.0), 9.0 / (20.0 * kPi)) <= 1e-9);
  CHECK_THROWS_AS(lambda_q_oracle(st(3, 1, 1, {0, 0}), 0.0), DomainError);
}

TEST_CASE("moment oracle is continuous in q") {
  const QuantumState s = st(4, 1, 4, {3, 1, 0});
  double prev = 0.0;
  for (double h : {1e-2, 5e-3, 2.5e-3}) {
    const double dev = std::abs(lambda_q_oracle(s, 1.0 + h).value - 1.0);
    if (prev > 0.0) CHECK(dev / prev == Approx(0.5).epsilon(0.05));
    prev = dev;
  }
}

TEST_CASE("oracle is stable under a tighter tolerance") {
  for (const auto& s : {st(3, 1.0, 5, {2, 1}), st(6, 2.0, 6, {1, 1, 0, 0, 0}), st(2, 3.7, 6, {0})}) {
    QuadratureConfig tight = kOracleConfig;
    tight.rel_tol /= 2;
    CHECK(std::abs(radial_entropy_oracle(s).value - radial_entropy_oracle(s, tight).value) <= 1e-9);
    CHECK(std::abs(angular_entropy_oracle(s).value - angular_entropy_oracle(s, tight).value) <= 1e-9);
  }
}

TEST_CASE("total oracle") {
  const EntropyResult r = total_entropy_oracle(st(3, 1, 1, {0, 0}));
  CHECK(r.method == Method::Oracle);
  CHECK(r.total == r.radial + r.angular);
  CHECK(r.total == Approx(3.0 + std::log(kPi)).epsilon(1e-11));
}

TEST_CASE("cross_check reports") {
  CrossCheckReport rep = cross_check(st(3, 1, 1, {0, 0}));
  CHECK(rep.valid);
  CHECK(rep.passed());
  CHECK(rep.errors.empty());
  CHECK(rep.rows.size() >= 6);
  for (const auto& row : rep.rows) CHECK(row.diff < 1e-9 + (row.tol > 1e-8 ? 1e-7 : 0.0));

  rep = cross_check(st(4, 2, 3, {1, 0, 0}));
  CHECK(rep.passed());
  bool seen = false;
  for (const auto& row : rep.rows)
    if (row.quantity == "radial" && row.method_a == "closed" && row.method_b == "oracle") {
      seen = true;
      CHECK(row.diff < 1e-8);
    }
  CHECK(seen);

  rep = cross_check(st(3, 1, 1, {1, 0}));
  CHECK_FALSE(rep.valid);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.errors.size() == 1);
  CHECK(rep.errors[0].find("l exceeds n-1") != std::string::npos);

  CrossCheckTolerances strict;
  strict.moments = 1e-30;
  rep = cross_check(st(3, 1, 2, {1, 0}), strict);
  CHECK_FALSE(rep.passed());
}
