#pragma once

#include <array>
#include <vector>

#include "lzlab/types.hpp"

namespace lzlab::amplitude_phase {

// Linearized phase-velocity equation
//
//   u'' - u'/tau + ((2 eps tau)^2 - 4) u = 2 eps tau,   u = phi_l'
//
// has a regular singular point at tau = 0 with exponents 0 and 2. The -4 u
// term forces a tau^2 ln|tau| piece into the exponent-0 solution, so near
// the origin
//
//   u = sum_m a_m tau^m + ln|tau| sum_m b_m tau^m,   b_2 = 2 a_0,
//
// with a_0 and a_2 free. Every solution has u'(0) = 0; u''(tau) grows like
// 4 a_0 ln|tau|. The solver integrates numerically up to -delta, fits (a_0, a_2)
// to the arriving (u, u'), evaluates the series across the origin, and
// resumes the numerical integration from +delta. The same ln|tau| branch is
// used on both sides.

struct LinearizedSample {
  double tau;
  double phi_dot;
  double phi_ddot;
};

struct LinearizedSolution {
  Params params;
  std::vector<LinearizedSample> samples;
  double a0 = 0.0;  // series constants fitted at the left bridge edge
  double a2 = 0.0;
  double bridge_left = 0.0;   // series used on [bridge_left, bridge_right]
  double bridge_right = 0.0;
};

/// Frobenius series of the linearized equation about tau = 0.
class OriginSeries {
 public:
  /// Coefficients for given free constants; `forced` selects whether the
  /// 2 eps tau source is included.
  OriginSeries(double epsilon, double a0, double a2, bool forced, double radius);

  /// (u, u') at tau != 0; at tau = 0 returns (a_0, 0).
  std::array<double, 2> eval(double tau) const;

  /// u'' at tau != 0 (diverges logarithmically at the origin unless a_0 = 0).
  double second_derivative(double tau) const;

 private:
  std::vector<double> a_, b_;
};

/// Solve on make_grid(params), seeded at tau_min with u = -Im eta_M and
/// u' = -Im eta_M'. Throws NumericError if the integrator fails on either side.
LinearizedSolution solve_linearized_phase(const Params& params);

/// Residual u'' - u'/tau + ((2 eps tau)^2 - 4) u - 2 eps tau with u'' taken from
/// the series; used to verify the bridge. tau must be nonzero.
double linearized_series_residual(const OriginSeries& s, double tau, double epsilon);

}  // namespace lzlab::amplitude_phase
