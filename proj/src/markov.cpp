#include "lzlab/markov.hpp"

#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>

#include "lzlab/kernels.hpp"
#include "lzlab/quadrature.hpp"

namespace lzlab::markov {

namespace odeint = boost::numeric::odeint;

namespace {

constexpr cplx kI{0.0, 1.0};

cplx expi(double theta) { return {std::cos(theta), std::sin(theta)}; }

// Scaled distance beyond which real_tail uses its series.
constexpr double kTailSeriesStart = 20.0;

double real_tail_series(double T, double eps) {
  // int_T^inf Re eta(-s) ds from Re eta(-s) = 1/(4 e^2 s^3) - 15/(16 e^4 s^7) + 945/(64 e^6 s^11)
  const double e2 = eps * eps;
  const double T2 = T * T;
  return 1.0 / (8.0 * e2 * T2) - 15.0 / (96.0 * e2 * e2 * T2 * T2 * T2) +
         945.0 / (640.0 * e2 * e2 * e2 * std::pow(T2, 5));
}

}  // namespace

fresnel::FresnelValue eta_direct_estimate(double tau, double epsilon, double tol) {
  if (tau <= 0.0) return fresnel::scaled_fresnel(-tau, epsilon, tol);
  const fresnel::FresnelValue s = fresnel::scaled_fresnel(tau, epsilon, tol);
  const cplx full = fresnel::gauss_integral(1, epsilon) * expi(-epsilon * tau * tau);
  return {full - s.value, s.est_error};
}

cplx eta_direct(double tau, double epsilon, double tol) {
  return eta_direct_estimate(tau, epsilon, tol).value;
}

cplx eta_negative_asymptotic(double tau, double epsilon) {
  const double t = std::abs(tau);
  return {1.0 / (4.0 * epsilon * epsilon * t * t * t), 1.0 / (2.0 * epsilon * t)};
}

cplx eta_dot(double tau, cplx eta, double epsilon) {
  return 1.0 - 2.0 * kI * epsilon * tau * eta;
}

cplx eta_ddot(double tau, cplx eta, double epsilon) {
  return -2.0 * kI * epsilon * eta - 2.0 * kI * epsilon * tau * eta_dot(tau, eta, epsilon);
}

MarkovTrajectory eta_ode(const Params& params) {
  using Vec2 = std::array<double, 2>;
  const double eps = params.epsilon;
  const std::vector<double> grid = make_grid(params);
  MarkovTrajectory out{params, {}};
  out.samples.reserve(grid.size());

  const cplx seed = eta_direct(params.tau_min, eps, params.quad_tol);
  Vec2 y{seed.real(), seed.imag()};
  auto rhs = [eps](const Vec2& v, Vec2& dv, double tau) {
    // eta' = 1 - 2 i eps tau eta
    const double k = 2.0 * eps * tau;
    dv[0] = 1.0 + k * v[1];
    dv[1] = -k * v[0];
  };
  double last_tau = params.tau_min;
  auto observe = [&](const Vec2& v, double tau) {
    last_tau = tau;
    RateSample r;
    r.tau = tau;
    r.eta = {v[0], v[1]};
    out.samples.push_back(r);
  };
  try {
    auto stepper = odeint::make_controlled(params.ode_tol, params.ode_tol,
                                           odeint::runge_kutta_fehlberg78<Vec2>());
    odeint::integrate_times(stepper, rhs, y, grid.begin(), grid.end(), std::min(params.step, 1e-3),
                            observe, odeint::max_step_checker(100000));
  } catch (const odeint::no_progress_error&) {
    throw NumericError("rate-function integrator made no progress", last_tau);
  } catch (const odeint::step_adjustment_error&) {
    throw NumericError("rate-function integrator step-size underflow", last_tau);
  }
  return out;
}

double real_tail(double tau_min, double epsilon, double tol) {
  const double T = std::abs(tau_min);
  const double x_switch = kTailSeriesStart / std::sqrt(epsilon);
  if (T >= x_switch) return real_tail_series(T, epsilon);
  const quad::Result near = quad::gauss_kronrod(
      [&](double s) { return cplx(fresnel::scaled_fresnel(s, epsilon, tol).value.real(), 0.0); },
      T, x_switch, tol);
  return near.value.real() + real_tail_series(x_switch, epsilon);
}

MarkovTrajectory markov_solution(const Params& params) {
  const double eps = params.epsilon;
  const std::vector<double> grid = make_grid(params);
  const std::vector<cplx> eta = kernels::parallel::eta_on_grid(grid, eps, params.quad_tol);

  MarkovTrajectory out{params, {}};
  out.samples.resize(grid.size());
  const double tail = real_tail(params.tau_min, eps, params.quad_tol);
  // endpoint-corrected trapezoid using the analytic eta', fourth order
  cplx integral{0.0, 0.0};
  cplx d_prev = eta_dot(grid[0], eta[0], eps);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (k > 0) {
      const double h = grid[k] - grid[k - 1];
      const cplx d = eta_dot(grid[k], eta[k], eps);
      integral += 0.5 * h * (eta[k - 1] + eta[k]) + h * h / 12.0 * (d_prev - d);
      d_prev = d;
    }
    RateSample& r = out.samples[k];
    r.tau = grid[k];
    r.eta = eta[k];
    r.A_M = std::exp(-(tail + integral.real()));
    r.phi_M = -integral.imag();
  }
  return out;
}

LzIntegral lz_integral(double epsilon, double quad_tol) {
  // int_0^inf e^{i eps s^2} = int_0^X (quadrature) + F(X) on its asymptotic branch
  const double X = 2.0 * fresnel::kAsymptoticCrossover / std::sqrt(epsilon);
  const quad::Result head = quad::gauss_kronrod(
      [epsilon](double s) { return expi(epsilon * s * s); }, 0.0, X, 0.01 * quad_tol);
  const cplx half_plus = head.value + fresnel::fresnel_F(X, epsilon, 0.01 * quad_tol).value;
  const cplx value = fresnel::gauss_integral(1, epsilon) * std::conj(half_plus);
  return {value, std::numbers::pi / (2.0 * epsilon), std::abs(value.imag()) <= quad_tol};
}

double lz_formula(double epsilon) { return std::exp(-std::numbers::pi / (2.0 * epsilon)); }

double imag_tails(double T, double epsilon, double tol) {
  const cplx F = fresnel::fresnel_F(T, epsilon, tol).value;
  return (fresnel::gauss_integral(1, epsilon) * std::conj(F)).imag();
}

double stueckelberg_cancellation(const MarkovTrajectory& traj) {
  const Params& p = traj.params;
  if (std::abs(p.tau_min + p.tau_max) > 1e-12 * p.tau_max)
    throw ConfigError("cancellation check needs a symmetric window");
  // phi_M = -int Im eta from tau_min
  const double window = -traj.samples.back().phi_M;
  return window + imag_tails(p.tau_max, p.epsilon, p.quad_tol);
}

}  // namespace lzlab::markov
