#pragma once

// Pointwise grid kernels. Each has an OpenMP-parallel version used by the
// library and a serial reference with the same signature; the two must agree
// bit for bit since every sample is computed independently.

#include <span>
#include <vector>

#include "lzlab/types.hpp"

namespace lzlab::kernels {

namespace serial {

std::vector<cplx> eta_on_grid(std::span<const double> taus, double epsilon, double tol);

/// Amplitude and phase derivatives at each sample; phi is left at zero.
std::vector<PolarSample> polar_pointwise(std::span<const State> samples, double epsilon);

/// Left side of the nonlinear phase-velocity equation at each sample.
std::vector<double> nonlinear_phase_residuals(std::span<const PolarSample> samples, double epsilon);

}  // namespace serial

namespace parallel {

std::vector<cplx> eta_on_grid(std::span<const double> taus, double epsilon, double tol);
std::vector<PolarSample> polar_pointwise(std::span<const State> samples, double epsilon);
std::vector<double> nonlinear_phase_residuals(std::span<const PolarSample> samples, double epsilon);

}  // namespace parallel

/// One sample of the pointwise polar map (shared by both versions).
PolarSample polar_at(const State& s, double epsilon);

/// 3 phi''^2 - 2 g phi''' + 2 eps phi'' - 4 g^4 + 4 (1 + (eps tau)^2) g^2, g = phi' + eps tau.
double nonlinear_phase_residual_at(const PolarSample& s, double epsilon);

}  // namespace lzlab::kernels
