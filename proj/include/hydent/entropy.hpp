#pragma once

#include "hydent/hydrogenic.hpp"
#include "hydent/hypersum.hpp"
#include "hydent/quad.hpp"

#include <optional>
#include <string>

namespace hydent {

enum class Method { ClosedForm, Oracle, SpecialCase, Asymptote };

std::string to_string(Method m);

/// Radial, angular and total Shannon entropy of one state; total = radial + angular.
struct EntropyResult {
  double radial = 0;
  double angular = 0;
  double total = 0;
  Method method = Method::ClosedForm;
  double radial_err = 0;
  double angular_err = 0;
};

enum class AsymptoticRegime {
  RydbergRadial,             // n -> inf
  HighDRadial,               // D -> inf
  HighDAngular,              // D -> inf
  HighDTotalQuasiSpherical,  // D -> inf, mu_1 = ... = mu_{D-1} = n-1
  HighDTotalConjecture,      // D -> inf, any state
};

std::string to_string(AsymptoticRegime r);

/// Which backend evaluates the c_{i,j} sums. Auto uses Exact once n-l-1 > 3.
enum class RadialBackend { Auto, Compensated, Exact };

struct RadialAuxIntegrals {
  double I1 = 0;  // int x^{2l+D-1} e^{-x} L^2
  double I2 = 0;  // int x^{2l+D-1} e^{-x} L^2 ln x
  double I3 = 0;  // int x^{2l+D}   e^{-x} L^2
};

RadialAuxIntegrals radial_aux_integrals(int n, int l, int D, RadialBackend backend = RadialBackend::Auto);

/// (n-l)_{2l+D-2}^2 sum c_{i,j}, exactly; equals 2 eta Gamma(n+l+D-2)/(n-l-1)!.
Rational radial_norm_sum_exact(int n, int l, int D);

struct RadialOptions {
  RadialBackend backend = RadialBackend::Auto;
  QuadratureConfig kummer{1e-13, 1e-15, 4000};
};

/// Closed-form radial entropy with the Kummer-log integral evaluated by quadrature.
/// Throws ConvergenceError if that quadrature misses its tolerance.
IntegralResult radial_entropy_closed_detail(const QuantumState& s, const RadialOptions& options = {});
double radial_entropy_closed(const QuantumState& s, const RadialOptions& options = {});

/// Fast paths: the (n, l = n-1) formula, which includes the ground state.
double radial_entropy_special(const QuantumState& s);
/// Ground-state form in terms of Gamma(D); n must be 1.
double radial_entropy_ground(int D, double Z);

bool is_radial_special(const QuantumState& s);
bool is_angular_special(const QuantumState& s);
bool is_quasi_spherical(const QuantumState& s);

/// B(l,{mu},D) + sum_j E[orthonormal Gegenbauer], the E's by quadrature.
IntegralResult angular_entropy_gegenbauer_detail(const QuantumState& s, const QuadratureConfig& config = {1e-13, 1e-15});
double angular_entropy_gegenbauer(const QuantumState& s);

/// -dLambda(q)/dq at q = 1 by Richardson-extrapolated central differences of
/// the directly integrated moment. `converged` is false when the refinement
/// levels disagree by more than 1e-6.
IntegralResult angular_entropy_from_moments_detail(const QuantumState& s);
double angular_entropy_from_moments(const QuantumState& s);

/// Lambda(q) for real q by factorized quadrature, normalised through h_n.
IntegralResult angular_moment_quadrature(const QuantumState& s, double q, const QuadratureConfig& config);

/// The (l, {l}) formula; at l = 0 the s-state value ln(2 pi^{D/2} / Gamma(D/2)).
double angular_entropy_special(const QuantumState& s);

enum class AngularMethod { Gegenbauer, Moments };

/// Sum of radial and angular parts. ClosedForm uses the general closed
/// radial form and the selected angular method; SpecialCase uses the fast
/// paths (throws if the state is outside their family); Oracle delegates to
/// direct quadrature of the densities.
EntropyResult total_entropy(const QuantumState& s, Method method = Method::ClosedForm,
                            AngularMethod angular = AngularMethod::Gegenbauer);

/// Closed total for mu_1 = ... = |mu_{D-1}| = n-1.
double total_quasi_spherical(const QuantumState& s);
/// Ground-state total in terms of Gamma(D) and Gamma(D/2).
double total_ground(int D, double Z);

/// Leading-order asymptotic expression (no remainder term).
double asymptote(AsymptoticRegime regime, int n, int D, double Z);

}  // namespace hydent
