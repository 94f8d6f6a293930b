#include "lzlab/kernels.hpp"

#include <cmath>

#include "lzlab/exact_solver.hpp"
#include "lzlab/markov.hpp"

namespace lzlab::kernels {

PolarSample polar_at(const State& s, double epsilon) {
  const Derivatives d = derivatives(s, epsilon);
  const cplx r1 = d.a_dot / s.a;
  const cplx r2 = d.a_ddot / s.a;
  const cplx r3 = d.a_dddot / s.a;
  // successive derivatives of log a = log A + i phi
  const cplx l2 = r2 - r1 * r1;
  const cplx l3 = r3 - 3.0 * r2 * r1 + 2.0 * r1 * r1 * r1;
  PolarSample p;
  p.tau = s.tau;
  p.A = std::abs(s.a);
  p.phi_dot = r1.imag();
  p.phi_ddot = l2.imag();
  p.phi_dddot = l3.imag();
  p.A_dot = r1.real() * p.A;
  p.A_ddot = (l2.real() + r1.real() * r1.real()) * p.A;
  return p;
}

double nonlinear_phase_residual_at(const PolarSample& s, double epsilon) {
  const double g = s.phi_dot + epsilon * s.tau;
  const double et = epsilon * s.tau;
  const double g2 = g * g;
  return 3.0 * s.phi_ddot * s.phi_ddot - 2.0 * g * s.phi_dddot + 2.0 * epsilon * s.phi_ddot -
         4.0 * g2 * g2 + 4.0 * (1.0 + et * et) * g2;
}

namespace serial {

std::vector<cplx> eta_on_grid(std::span<const double> taus, double epsilon, double tol) {
  std::vector<cplx> out(taus.size());
  for (std::size_t i = 0; i < taus.size(); ++i) out[i] = markov::eta_direct(taus[i], epsilon, tol);
  return out;
}

std::vector<PolarSample> polar_pointwise(std::span<const State> samples, double epsilon) {
  std::vector<PolarSample> out(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) out[i] = polar_at(samples[i], epsilon);
  return out;
}

std::vector<double> nonlinear_phase_residuals(std::span<const PolarSample> samples,
                                              double epsilon) {
  std::vector<double> out(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i)
    out[i] = nonlinear_phase_residual_at(samples[i], epsilon);
  return out;
}

}  // namespace serial

namespace parallel {

std::vector<cplx> eta_on_grid(std::span<const double> taus, double epsilon, double tol) {
  std::vector<cplx> out(taus.size());
  const auto n = static_cast<std::ptrdiff_t>(taus.size());
  // quadrature near tau = 0 costs far more than the asymptotic branch
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = markov::eta_direct(taus[i], epsilon, tol);
  return out;
}

std::vector<PolarSample> polar_pointwise(std::span<const State> samples, double epsilon) {
  std::vector<PolarSample> out(samples.size());
  const auto n = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = polar_at(samples[i], epsilon);
  return out;
}

std::vector<double> nonlinear_phase_residuals(std::span<const PolarSample> samples,
                                              double epsilon) {
  std::vector<double> out(samples.size());
  const auto n = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = nonlinear_phase_residual_at(samples[i], epsilon);
  return out;
}

}  // namespace parallel

}  // namespace lzlab::kernels
