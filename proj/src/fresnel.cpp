#include "lzlab/fresnel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "lzlab/quadrature.hpp"

namespace lzlab::fresnel {

namespace {

constexpr double kMachEps = std::numeric_limits<double>::epsilon();
constexpr cplx kI{0.0, 1.0};

void require_positive_eps(double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
}

cplx phase(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Optimally truncated series for e^{-i eps tau^2} F(tau), tau > 0:
//   sum_k g_k / tau^{2k+1},  g_0 = i/(2 eps),  g_{k+1} = -i (2k+1)/(2 eps) g_k.
// Stops at the smallest term; the first omitted term bounds the error.
FresnelValue asymptotic_bracket(double tau, double epsilon) {
  const double inv_tau2 = 1.0 / (tau * tau);
  cplx term = kI / (2.0 * epsilon * tau);
  cplx sum = term;
  double last = std::abs(term);
  for (int k = 0; k < 200; ++k) {
    cplx next = term * (-kI * (2.0 * k + 1.0) / (2.0 * epsilon)) * inv_tau2;
    const double mag = std::abs(next);
    if (mag >= last) break;  // divergent tail from here on
    if (mag < kMachEps * std::abs(sum)) {
      last = mag;
      break;
    }
    sum += next;
    term = next;
    last = mag;
  }
  return {sum, std::max(last, 4.0 * kMachEps * std::abs(sum))};
}

// int_0^tau exp(i eps s^2) ds by adaptive quadrature.
quad::Result finite_segment(double tau, double epsilon, double tol) {
  return quad::gauss_kronrod([epsilon](double s) { return phase(epsilon * s * s); }, 0.0, tau,
                             tol);
}

}  // namespace

cplx gauss_integral(int sign, double epsilon) {
  require_positive_eps(epsilon);
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  return std::sqrt(std::numbers::pi / epsilon) * phase(sign * std::numbers::pi / 4.0);
}

FresnelValue fresnel_F(double tau, double epsilon, double tol) {
  require_positive_eps(epsilon);
  const double x = std::abs(tau) * std::sqrt(epsilon);
  if (x >= kAsymptoticCrossover) {
    FresnelValue pos = asymptotic_bracket(std::abs(tau), epsilon);
    const cplx upper = pos.value * phase(epsilon * tau * tau);
    if (tau > 0) return {upper, pos.est_error};
    // F(-t) = full-line integral - F(t)
    const cplx v = gauss_integral(1, epsilon) - upper;
    return {v, std::max(pos.est_error, 4.0 * kMachEps * std::abs(v))};
  }
  const quad::Result seg = finite_segment(tau, epsilon, tol);
  const cplx v = 0.5 * gauss_integral(1, epsilon) - seg.value;
  return {v, std::max(seg.error, 4.0 * kMachEps * std::abs(v))};
}

FresnelValue scaled_fresnel(double tau, double epsilon, double tol) {
  require_positive_eps(epsilon);
  if (tau > 0 && tau * std::sqrt(epsilon) >= kAsymptoticCrossover)
    return asymptotic_bracket(tau, epsilon);
  FresnelValue f = fresnel_F(tau, epsilon, tol);
  return {f.value * phase(-epsilon * tau * tau), f.est_error};
}

cplx fresnel_asymptotic(double tau, double epsilon, int order) {
  require_positive_eps(epsilon);
  if (!(tau > 0.0)) throw std::invalid_argument("asymptotic expansion needs tau > 0");
  if (order != 1 && order != 2) throw std::invalid_argument("order must be 1 or 2");
  cplx bracket = -1.0 / (2.0 * kI * epsilon * tau);
  if (order == 2) bracket += 1.0 / (4.0 * epsilon * epsilon * tau * tau * tau);
  return bracket * phase(epsilon * tau * tau);
}

double asymptotic_third_term(double tau, double epsilon) {
  return 3.0 / (8.0 * std::pow(epsilon, 3) * std::pow(tau, 5));
}

}  // namespace lzlab::fresnel
