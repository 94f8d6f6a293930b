#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lzlab/types.hpp"

namespace lzlab::amplitude_phase {

/// Magnitude of a below which the polar map is rejected.
inline constexpr double kMinAmplitude = 1e-12;

/// a = A e^{i phi}. Phase derivatives come from the analytic a', a'', a''';
/// phi itself is integrated from phi' with phi(tau_min) = 0 using a
/// sixth-order Hermite rule over phi', phi'', phi'''. Throws NumericError if
/// |a| < kMinAmplitude anywhere.
PolarTrajectory polar_decompose(const Trajectory& traj);

/// Continuous arg(a) by unwrapping successive increments arg(a_{k+1}/a_k),
/// offset so the first value is 0. Cross-check for polar_decompose.
std::vector<double> unwrapped_phase(const Trajectory& traj);

struct PolarResidual {
  double tau;
  double r_A;    // A'' + (-phi'^2 - 2 eps tau phi' + 1) A
  double r_phi;  // A phi'' + 2 A' (phi' + eps tau)
};

std::vector<PolarResidual> polar_residuals(const PolarTrajectory& traj, double epsilon);

/// Left side of 3 phi''^2 - 2 g phi''' + 2 eps phi'' - 4 g^4 + 4 (1 + (eps tau)^2) g^2,
/// g = phi' + eps tau, at every sample.
std::vector<double> nonlinear_phase_residual(const PolarTrajectory& traj, double epsilon);

struct DenominatorZero {
  double tau0;
  double phi_ddot;  // phi'' interpolated at tau0
  double g_at_root; // |phi' + eps tau| of the interpolant at tau0
  bool realized_branch; // |phi''(tau0)| <= kBranchFraction * (2 eps / 3)
};

inline constexpr double kBranchFraction = 0.05;

/// First root of g = phi' + eps tau, located on a sampled sign change and
/// refined by bisection of the cubic Hermite interpolant built from g and
/// g' = phi'' + eps. Returns nullopt when g keeps its sign over the window.
std::optional<DenominatorZero> find_denominator_zero(const PolarTrajectory& traj, double epsilon);

/// All roots of g in the window, each refined as above.
std::vector<DenominatorZero> find_denominator_zeros(const PolarTrajectory& traj, double epsilon);

/// Phase velocity of the Markov solution, -Im eta_M.
double markov_phase_velocity(double tau, double epsilon);

/// Residual of phi''' - phi''/tau + (2 eps tau)^2 phi' - 2 eps tau for
/// phi' = -Im eta_M, using the analytic derivatives of eta. tau must be nonzero.
double markov_phase_residual(double tau, double epsilon);

/// R(|tau|) = eps |tau| - sqrt((eps tau)^2 + 1), evaluated without cancellation.
double sqrt_branch(double tau, double epsilon);

/// Piecewise phase velocity: R(|tau|) for tau < 0, -R(|tau|) - S sin(beta - eps tau^2)
/// for tau > 0. Throws std::domain_error at tau = 0, where the two branches jump.
double sqrt_phase_velocity(double tau, double epsilon, double S, double beta);
double sqrt_phase_velocity(double tau, double epsilon);  // S = sqrt(pi/eps), beta = pi/4

struct StueckelbergFit {
  double S_fit;
  double beta_fit;  // (-pi, pi]
  double tau_lo;
  double tau_hi;
  double rms_residual;
  std::size_t n_samples;
};

/// Default lower edge of the fit window, 20 / sqrt(eps).
double default_fit_start(double epsilon);

/// Least-squares fit of phi' + R(tau) = -S sin(beta - eps tau^2) over
/// [tau_lo, tau_hi], linear in (S cos beta, S sin beta). Throws ConfigError
/// unless 0 < tau_lo < tau_hi and the window spans at least five periods of
/// the quadratic phase.
StueckelbergFit fit_stueckelberg(const PolarTrajectory& traj, double tau_lo, double tau_hi);

struct AmplitudeReconstruction {
  std::vector<double> A;              // exp(-int f), same samples as the input
  double band_halfwidth;              // excluded band around each root of g
  std::vector<double> roots;          // tau0 values that were bridged
  std::vector<std::string> warnings;  // band widenings
};

/// Integrand f = phi'' / (2 (phi' + eps tau)). Its derivative is used by the
/// corrected trapezoid in amplitude_from_phase.
double amplitude_integrand(const PolarSample& s, double epsilon);

/// A(tau) = A(tau_min) exp(-int_{tau_min}^{tau} f). Inside a band of
/// half-width 10 * step around each root of g, f is replaced by linear
/// interpolation between the band edges; the band doubles (with a warning)
/// while |f| at its edges exceeds kIntegrandCap.
inline constexpr double kIntegrandCap = 50.0;
AmplitudeReconstruction amplitude_from_phase(const PolarTrajectory& traj, double epsilon);

}  // namespace lzlab::amplitude_phase
