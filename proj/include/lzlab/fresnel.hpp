#pragma once

#include <complex>

namespace lzlab::fresnel {

using cplx = std::complex<double>;

struct FresnelValue {
  cplx value;
  double est_error = 0.0;  // absolute; never exactly zero
};

/// Scaled distance x = |tau| sqrt(epsilon) above which the asymptotic branch
/// is used. Below it the finite segment is integrated adaptively.
inline constexpr double kAsymptoticCrossover = 6.0;

/// Full-line Gaussian integral of exp(+-i eps tau^2): sqrt(pi/eps) e^{+-i pi/4}.
/// `sign` must be +1 or -1; throws std::invalid_argument on eps <= 0.
cplx gauss_integral(int sign, double epsilon);

/// Half-line Fresnel integral F(tau) = int_tau^inf exp(i eps s^2) ds, any real tau.
/// The result carries an absolute error estimate; if `tol` is not reachable
/// the best estimate is returned with the larger est_error.
FresnelValue fresnel_F(double tau, double epsilon, double tol = 1e-12);

/// e^{-i eps tau^2} F(tau). Equal to eta_M(-tau) for tau >= 0; evaluated
/// without the cancelling phase factors on the asymptotic branch.
FresnelValue scaled_fresnel(double tau, double epsilon, double tol = 1e-12);

/// Partial sum [-1/(2 i eps tau) + 1/(4 eps^2 tau^3)] e^{i eps tau^2} truncated
/// after `order` (1 or 2) terms. Requires tau > 0.
cplx fresnel_asymptotic(double tau, double epsilon, int order);

/// Magnitude of the third asymptotic term, 3/(8 eps^3 tau^5).
double asymptotic_third_term(double tau, double epsilon);

}  // namespace lzlab::fresnel
