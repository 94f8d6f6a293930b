#pragma once
// Reference values computed independently of the library's quadrature and
// asymptotic code paths.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace oracle {

using cplx = std::complex<double>;

template <class F>
auto integrate(F f, double lo, double hi, double rel_tol = 1e-14) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 20, rel_tol);
}

/// int_tau^inf e^{i eps s^2} ds. For tau >= 0 along the steepest-descent
/// ray s = tau + e^{i pi/4} v, where the integrand decays like a Gaussian;
/// for tau < 0 the finite piece [tau, 0] is integrated directly and
/// F(0) = sqrt(pi/eps) e^{i pi/4} / 2 added.
inline cplx fresnel(double tau, double eps) {
  using std::numbers::pi;
  const cplx w = std::polar(1.0, pi / 4);
  if (tau >= 0) {
    const double k = std::sqrt(2.0) * eps * tau;
    // e^{-eps v^2} e^{k (i - 1) v}, cut where the envelope is below e^{-45}
    const double vmax = (-k + std::sqrt(k * k + 180.0 * eps)) / (2.0 * eps);
    // one complex integral so the tolerance is relative to |F|, not to a part near zero
    const cplx ray = integrate([&](double v) { return std::exp(-eps * v * v - k * v) * std::polar(1.0, k * v); }, 0.0, vmax, 1e-13);
    return w * std::polar(1.0, eps * tau * tau) * ray;
  }
  const double re = integrate([&](double s) { return std::cos(eps * s * s); }, tau, 0.0);
  const double im = integrate([&](double s) { return std::sin(eps * s * s); }, tau, 0.0);
  return cplx(re, im) + 0.5 * std::sqrt(pi / eps) * w;
}

/// e^{-i eps tau^2} int_{-inf}^{tau} e^{i eps s^2} ds = e^{-i eps tau^2} F(-tau).
inline cplx eta(double tau, double eps) { return std::polar(1.0, -eps * tau * tau) * fresnel(-tau, eps); }

}  // namespace oracle
