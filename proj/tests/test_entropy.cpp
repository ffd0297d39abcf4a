#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hydent/entropy.hpp"
#include "hydent/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

using namespace hydent;
using doctest::Approx;

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kPi = std::numbers::pi;

QuantumState st(int D, double Z, int n, std::vector<int> mu) { return {D, Z, n, std::move(mu)}; }

}  // namespace

TEST_CASE("radial auxiliary integrals") {
  RadialAuxIntegrals a = radial_aux_integrals(1, 0, 3);
  CHECK(a.I1 == Approx(2.0).epsilon(1e-15));
  CHECK(a.I2 == Approx(2.0 * digamma(3.0)).epsilon(1e-14));
  CHECK(a.I3 == Approx(6.0).epsilon(1e-15));
  CHECK(radial_aux_integrals(2, 0, 3).I1 == Approx(8.0).epsilon(1e-14));
  for (auto backend : {RadialBackend::Compensated, RadialBackend::Exact, RadialBackend::Auto})
    for (auto [n, l, D] : {std::array{3, 1, 4}, std::array{4, 0, 2}, std::array{8, 2, 7}, std::array{16, 1, 3}}) {
      // plain double sums are only trusted up to n-l-1 = 3
      if (backend == RadialBackend::Compensated && n - l - 1 > 3) continue;
      const double eta = n + (D - 3) / 2.0;
      const double want = 2.0 * eta * std::exp(std::lgamma(n + l + D - 2.0) - std::lgamma(n - l + 0.0));
      CHECK(radial_aux_integrals(n, l, D, backend).I1 == Approx(want).epsilon(1e-11));
    }
  CHECK_THROWS_AS(radial_aux_integrals(2, 2, 3), DomainError);
}

TEST_CASE("exact normalization sum") {
  CHECK(radial_norm_sum_exact(1, 0, 3) == Rational(2));
  CHECK(radial_norm_sum_exact(2, 0, 3) == Rational(8));
  // 2 eta Gamma(n+l+D-2) / (n-l-1)!: n=5, l=2, D=6 gives 13 * 10! / 2!
  CHECK(radial_norm_sum_exact(5, 2, 6) == Rational(BigInt(13) * factorial_exact(10), factorial_exact(2)));
}

TEST_CASE("radial closed form, known values") {
  CHECK(radial_entropy_closed(st(3, 1, 1, {0, 0})) == Approx(3.0 - 2.0 * kLn2).epsilon(1e-14));
  CHECK(radial_entropy_closed(st(2, 1, 1, {0})) == Approx(2.0 - 4.0 * kLn2).epsilon(1e-14));
  CHECK(radial_entropy_closed(st(4, 1, 1, {0, 0, 0})) ==
        Approx(4.0 + std::log(6.0) + 4.0 * std::log(0.75)).epsilon(1e-14));
  // first excited s-state in 3D reduces to ln 2 + 6 - I~/2
  const double kummer = kummer_log_integral(2, 0, 3, {1e-13, 1e-15, 4000}).value;
  CHECK(radial_entropy_closed(st(3, 1, 2, {0, 0})) == Approx(kLn2 + 6.0 - kummer / 2.0).epsilon(1e-13));
  // reference values from independent high-precision quadrature
  CHECK(radial_entropy_closed(st(3, 1, 2, {0, 0})) == Approx(5.57990511762097124).epsilon(1e-12));
  CHECK(radial_entropy_closed(st(4, 1, 2, {0, 0, 0})) == Approx(8.83029191254610580).epsilon(1e-12));
  CHECK(radial_entropy_closed(st(4, 2, 3, {1, 0, 0})) == Approx(8.43860859592608476).epsilon(1e-12));
}

TEST_CASE("radial backends agree") {
  for (int D : {2, 3, 5})
    for (int n = 1; n <= 10; ++n)
      for (int l = std::max(0, n - 4); l < n; ++l) {
        const QuantumState s = QuantumState::with_l(D, 1.0, n, l);
        const double a = radial_entropy_closed(s, {RadialBackend::Compensated});
        const double b = radial_entropy_closed(s, {RadialBackend::Exact});
        CAPTURE(to_string(s));
        CHECK(std::abs(a - b) <= 1e-10);
      }
}

TEST_CASE("radial special formulas") {
  CHECK(radial_entropy_special(st(3, 1, 2, {1, 0})) ==
        Approx(5.0 / 6.0 + std::log(24.0) + 2.0 * kEulerGamma).epsilon(1e-14));
  CHECK(radial_entropy_special(st(3, 1, 1, {0, 0})) == Approx(3.0 - 2.0 * kLn2).epsilon(1e-14));
  CHECK(radial_entropy_special(st(2, 2, 1, {0})) == Approx(2.0 - 6.0 * kLn2).epsilon(1e-14));
  CHECK_THROWS_AS(radial_entropy_special(st(3, 1, 2, {0, 0})), DomainError);
  for (int D = 2; D <= 12; ++D) {
    CHECK(radial_entropy_ground(D, 1.3) == Approx(radial_entropy_special(QuantumState::with_l(D, 1.3, 1, 0))));
    CHECK(radial_entropy_ground(D, 1.3) ==
          Approx(radial_entropy_closed(QuantumState::with_l(D, 1.3, 1, 0))).epsilon(1e-13));
  }
  CHECK_THROWS_AS(radial_entropy_ground(1, 1.0), ValidationError);
}

TEST_CASE("angular entropy, Gegenbauer route") {
  CHECK(angular_entropy_gegenbauer(st(3, 1, 1, {0, 0})) == Approx(std::log(4.0 * kPi)).epsilon(1e-14));
  CHECK(angular_entropy_gegenbauer(st(2, 1, 1, {0})) == Approx(std::log(2.0 * kPi)).epsilon(1e-14));
  CHECK(angular_entropy_gegenbauer(st(2, 1, 4, {-3})) == Approx(std::log(2.0 * kPi)).epsilon(1e-14));
  const double y11 = kLn2 + std::log(kPi) - std::log(3.0) + 5.0 / 3.0;
  CHECK(angular_entropy_gegenbauer(st(3, 1, 2, {1, 1})) == Approx(y11).epsilon(1e-12));
  CHECK(angular_entropy_gegenbauer(st(4, 1, 3, {2, 1, 0})) == Approx(2.24380851081724794).epsilon(1e-12));
  CHECK(angular_entropy_gegenbauer(st(5, 1, 4, {3, 1, 1, -1})) == Approx(2.51664969629657413).epsilon(1e-12));
}

TEST_CASE("angular entropy, moment-derivative route") {
  IntegralResult r = angular_entropy_from_moments_detail(st(3, 1, 1, {0, 0}));
  CHECK(r.converged);
  CHECK(std::abs(r.value - std::log(4.0 * kPi)) <= 1e-6);
  r = angular_entropy_from_moments_detail(st(3, 1, 2, {1, 1}));
  CHECK(std::abs(r.value - 2.4059315) <= 1e-6);
  for (const auto& s : {st(4, 1, 3, {2, 1, 0}), st(6, 1, 5, {4, 2, 1, 1, -1}), st(5, 1, 5, {4, 4, 0, 0})}) {
    CAPTURE(to_string(s));
    CHECK(std::abs(angular_entropy_from_moments(s) - angular_entropy_gegenbauer(s)) <= 1e-6);
  }
  // the moment quadrature agrees with the closed moments
  const QuantumState s = st(4, 1, 3, {2, 1, 0});
  for (int q : {1, 2, 3})
    CHECK(angular_moment_quadrature(s, q, {1e-12, 1e-15}).value == Approx(entropic_moment(s, q)).epsilon(1e-10));
}

TEST_CASE("angular special formula") {
  CHECK(angular_entropy_special(st(3, 1, 1, {0, 0})) == Approx(std::log(4.0 * kPi)).epsilon(1e-15));
  CHECK(angular_entropy_special(st(2, 1, 1, {0})) == Approx(std::log(2.0 * kPi)).epsilon(1e-15));
  CHECK(angular_entropy_special(st(3, 1, 2, {1, 1})) ==
        Approx(kLn2 + std::log(kPi) - std::log(3.0) + 5.0 / 3.0).epsilon(1e-14));
  CHECK(angular_entropy_special(st(3, 1, 2, {1, -1})) == angular_entropy_special(st(3, 1, 2, {1, 1})));
  CHECK_THROWS_AS(angular_entropy_special(st(3, 1, 2, {1, 0})), DomainError);
  for (int D = 2; D <= 9; ++D)
    for (int l = 0; l <= 4; ++l) {
      const QuantumState s = st(D, 1, l + 1, std::vector<int>(D - 1, l));
      CHECK(angular_entropy_special(s) == Approx(angular_entropy_gegenbauer(s)).epsilon(1e-12));
    }
}

TEST_CASE("family predicates") {
  CHECK(is_radial_special(st(3, 1, 3, {2, 0})));
  CHECK_FALSE(is_radial_special(st(3, 1, 3, {1, 0})));
  CHECK(is_angular_special(st(4, 1, 5, {2, 2, -2})));
  CHECK(is_angular_special(st(4, 1, 5, {0, 0, 0})));
  CHECK_FALSE(is_angular_special(st(4, 1, 5, {2, 2, 1})));
  CHECK(is_quasi_spherical(st(4, 1, 3, {2, 2, 2})));
  CHECK_FALSE(is_quasi_spherical(st(4, 1, 4, {2, 2, 2})));
}

TEST_CASE("totals") {
  const EntropyResult g3 = total_entropy(st(3, 1, 1, {0, 0}));
  CHECK(g3.total == Approx(3.0 + std::log(kPi)).epsilon(1e-14));
  CHECK(g3.total == g3.radial + g3.angular);
  CHECK(g3.method == Method::ClosedForm);
  CHECK(total_entropy(st(2, 1, 1, {0})).total == Approx(2.0 + std::log(kPi / 8.0)).epsilon(1e-14));
  const double q21 = 2.5 + std::log(16.0 * kPi) + 2.0 * kEulerGamma;
  CHECK(total_entropy(st(3, 1, 2, {1, 1})).total == Approx(q21).epsilon(1e-13));
  CHECK(total_entropy(st(3, 1, 2, {1, 1}), Method::SpecialCase).total == Approx(q21).epsilon(1e-14));
  CHECK(total_entropy(st(3, 1, 2, {1, 1}), Method::Oracle).total == Approx(q21).epsilon(1e-10));
  CHECK(total_entropy(st(4, 1, 3, {2, 1, 0}), Method::ClosedForm, AngularMethod::Moments).total ==
        Approx(total_entropy(st(4, 1, 3, {2, 1, 0})).total).epsilon(1e-7));
  CHECK_THROWS_AS(total_entropy(st(3, 1, 2, {1, 1}), Method::Asymptote), std::invalid_argument);
  CHECK_THROWS_AS(total_entropy(st(3, 1, 2, {0, 0}), Method::SpecialCase), DomainError);
  CHECK_THROWS_AS(total_entropy(st(3, 1, 1, {1, 0})), ValidationError);
}

TEST_CASE("quasi-spherical and ground totals") {
  CHECK(total_quasi_spherical(st(3, 1, 1, {0, 0})) == Approx(3.0 + std::log(kPi)).epsilon(1e-14));
  CHECK(total_quasi_spherical(st(3, 1, 2, {1, 1})) ==
        Approx(2.5 + std::log(16.0 * kPi) + 2.0 * kEulerGamma).epsilon(1e-14));
  CHECK(total_quasi_spherical(st(2, 1, 1, {0})) == Approx(2.0 + std::log(kPi / 8.0)).epsilon(1e-14));
  CHECK_THROWS_AS(total_quasi_spherical(st(3, 1, 2, {1, 0})), DomainError);
  for (int D = 2; D <= 12; ++D)
    CHECK(total_ground(D, 2.0) == Approx(total_quasi_spherical(QuantumState::with_l(D, 2.0, 1, 0))).epsilon(1e-14));
}

TEST_CASE("asymptotic expressions") {
  CHECK(asymptote(AsymptoticRegime::RydbergRadial, 10, 3, 1.0) ==
        Approx(6.0 * std::log(10.0) - kLn2 + std::log(kPi)).epsilon(1e-15));
  CHECK(asymptote(AsymptoticRegime::RydbergRadial, 10, 3, 1.0) == Approx(14.2670933).epsilon(1e-8));
  CHECK(asymptote(AsymptoticRegime::HighDRadial, 1, 100, 1.0) == Approx(782.4046).epsilon(1e-7));
  CHECK(asymptote(AsymptoticRegime::HighDAngular, 1, 100, 1.0) == Approx(-87.3292).epsilon(1e-6));
  CHECK(asymptote(AsymptoticRegime::HighDTotalConjecture, 1, 100, 2.0) ==
        Approx(200.0 * std::log(100.0) - std::lgamma(50.0) + 100.0 * std::log(std::sqrt(kPi) / 8.0)));
  CHECK_THROWS_AS(asymptote(AsymptoticRegime::HighDRadial, 1, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(asymptote(AsymptoticRegime::RydbergRadial, 0, 3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(asymptote(AsymptoticRegime::RydbergRadial, 3, 3, 0.0), std::invalid_argument);
  CHECK(to_string(AsymptoticRegime::HighDAngular) == "high_d_angular");
  CHECK(to_string(Method::SpecialCase) == "special_case");
}

TEST_CASE("Rydberg and high-D gaps shrink") {
  double prev = 1e300;
  for (int n : {20, 40, 80}) {
    const double gap = std::abs(radial_entropy_closed(QuantumState::with_l(3, 1.0, n, 0)) -
                                asymptote(AsymptoticRegime::RydbergRadial, n, 3, 1.0));
    CHECK(gap < prev);
    prev = gap;
  }
  prev = 1e300;
  for (int D : {50, 100, 200}) {
    const QuantumState s = st(D, 1.0, 2, std::vector<int>(D - 1, 1));
    const double gap = std::abs(total_quasi_spherical(s) - asymptote(AsymptoticRegime::HighDTotalQuasiSpherical, 2, D, 1.0)) / D;
    CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("scaling and independence laws") {
  for (const auto& s : {st(3, 1, 4, {2, 1}), st(5, 1, 6, {3, 3, 1, 0}), st(2, 1, 7, {-4})}) {
    for (double Z : {0.3, 2.0, 7.5}) {
      QuantumState sz = s;
      sz.Z = Z;
      CHECK(radial_entropy_closed(sz) - radial_entropy_closed(s) == Approx(-s.D * std::log(Z)).epsilon(1e-12));
      CHECK(angular_entropy_gegenbauer(sz) == angular_entropy_gegenbauer(s));
    }
  }
  // angular part ignores n, radial part ignores mu_2..
  CHECK(angular_entropy_gegenbauer(st(4, 1, 3, {2, 1, 0})) == angular_entropy_gegenbauer(st(4, 1, 7, {2, 1, 0})));
  CHECK(radial_entropy_closed(st(4, 1, 5, {3, 0, 0})) == radial_entropy_closed(st(4, 1, 5, {3, 2, -1})));
}
