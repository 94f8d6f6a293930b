#include "lzlab/exact_solver.hpp"

#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>

#include "lzlab/fresnel.hpp"

namespace lzlab {

namespace odeint = boost::numeric::odeint;

namespace {

using Vec4 = std::array<double, 4>;  // two complex numbers as (re, im, re, im)

constexpr cplx kI{0.0, 1.0};
constexpr double kLocalTolFactor = 0.1;

cplx expi(double theta) { return {std::cos(theta), std::sin(theta)}; }

struct CoupledRhs {
  double eps;
  void operator()(const Vec4& y, Vec4& dy, double tau) const {
    const double c = std::cos(eps * tau * tau);
    const double s = std::sin(eps * tau * tau);
    // a' = -i e^{-i th} b,  b' = -i e^{i th} a
    const double br = y[2], bi = y[3], ar = y[0], ai = y[1];
    const double pr = c * br + s * bi;  // e^{-i th} b
    const double pi = c * bi - s * br;
    const double qr = c * ar - s * ai;  // e^{i th} a
    const double qi = c * ai + s * ar;
    dy[0] = pi;
    dy[1] = -pr;
    dy[2] = qi;
    dy[3] = -qr;
  }
};

struct SecondOrderRhs {
  double eps;
  void operator()(const Vec4& y, Vec4& dy, double tau) const {
    // y = (a, a'),  a'' = -2 i eps tau a' - a
    const double k = 2.0 * eps * tau;
    dy[0] = y[2];
    dy[1] = y[3];
    dy[2] = k * y[3] - y[0];
    dy[3] = -k * y[2] - y[1];
  }
};

template <class Rhs, class Store>
void run(const Params& params, const SolverOptions& opt, Rhs rhs, Vec4 y0, Store store) {
  const std::vector<double> grid = make_grid(params);
  double last_tau = grid.front();
  auto observer = [&](const Vec4& y, double tau) {
    last_tau = tau;
    store(y, tau);
  };
  try {
    if (opt.method == Method::adaptive) {
      // free step-size selection, grid values from the stepper's own
      // interpolant; local tolerance a decade below ode_tol so that the
      // accumulated error over a window stays within it
      const double tol = kLocalTolFactor * opt.ode_tol;
      auto stepper = odeint::make_dense_output(tol, tol, odeint::runge_kutta_dopri5<Vec4>());
      const double dt0 = std::min(params.step, 1e-3);
      if (opt.dense_output) {
        odeint::integrate_times(stepper, rhs, y0, grid.begin(), grid.end(), dt0, observer,
                                odeint::max_step_checker(100000));
      } else {
        store(y0, grid.front());
        odeint::integrate_adaptive(stepper, rhs, y0, grid.front(), grid.back(), dt0);
        store(y0, grid.back());
      }
    } else {
      odeint::runge_kutta4<Vec4> stepper;
      const double h = opt.fixed_step > 0 ? opt.fixed_step : params.step;
      store(y0, grid.front());
      for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const double span = grid[k + 1] - grid[k];
        const int n = std::max(1, static_cast<int>(std::ceil(span / h * (1.0 - 1e-12))));
        const double dt = span / n;
        for (int j = 0; j < n; ++j) stepper.do_step(rhs, y0, grid[k] + j * dt, dt);
        last_tau = grid[k + 1];
        if (opt.dense_output || k + 2 == grid.size()) store(y0, grid[k + 1]);
      }
    }
  } catch (const odeint::no_progress_error&) {
    throw NumericError("integrator made no progress (step-size underflow)", last_tau);
  } catch (const odeint::step_adjustment_error&) {
    throw NumericError("integrator step-size underflow", last_tau);
  }
  for (double v : y0)
    if (!std::isfinite(v)) throw NumericError("integrator produced non-finite state", last_tau);
}

}  // namespace

SolverOptions default_options(const Params& p) {
  SolverOptions o;
  o.ode_tol = p.ode_tol;
  return o;
}

State initial_state(const Params& params, InitialCondition ic) {
  State s;
  s.tau = params.tau_min;
  if (ic == InitialCondition::asymptotic) {
    // b(tau) = -i int_{-inf}^{tau} e^{i eps s^2} a ds with a ~ 1
    const cplx b = -kI * fresnel::fresnel_F(-params.tau_min, params.epsilon, params.quad_tol).value;
    s.b = b;
    s.a = std::sqrt(std::max(0.0, 1.0 - std::norm(b)));
  }
  return s;
}

cplx a_dot_of(const State& s, double epsilon) {
  return -kI * expi(-epsilon * s.tau * s.tau) * s.b;
}

Derivatives derivatives_from_a_dot(double tau, cplx a, cplx a_dot, double epsilon) {
  const cplx a_ddot = -2.0 * kI * epsilon * tau * a_dot - a;
  const cplx a_dddot = -(1.0 + 2.0 * kI * epsilon) * a_dot - 2.0 * kI * epsilon * tau * a_ddot;
  return {a_dot, a_ddot, a_dddot};
}

Derivatives derivatives(const State& s, double epsilon) {
  return derivatives_from_a_dot(s.tau, s.a, a_dot_of(s, epsilon), epsilon);
}

Trajectory integrate_coupled(const Params& params, const SolverOptions& options) {
  Trajectory traj{params, {}};
  const State s0 = initial_state(params, options.initial);
  Vec4 y0{s0.a.real(), s0.a.imag(), s0.b.real(), s0.b.imag()};
  traj.samples.reserve(options.dense_output ? make_grid(params).size() : 2);
  run(params, options, CoupledRhs{params.epsilon}, y0, [&](const Vec4& y, double tau) {
    traj.samples.push_back({tau, {y[0], y[1]}, {y[2], y[3]}});
  });
  return traj;
}

Trajectory integrate_second_order(const Params& params, const SolverOptions& options) {
  Trajectory traj{params, {}};
  const double eps = params.epsilon;
  const State s0 = initial_state(params, options.initial);
  const cplx ad0 = a_dot_of(s0, eps);
  Vec4 y0{s0.a.real(), s0.a.imag(), ad0.real(), ad0.imag()};
  traj.samples.reserve(options.dense_output ? make_grid(params).size() : 2);
  run(params, options, SecondOrderRhs{eps}, y0, [&](const Vec4& y, double tau) {
    const cplx a_dot{y[2], y[3]};
    traj.samples.push_back({tau, {y[0], y[1]}, kI * expi(eps * tau * tau) * a_dot});
  });
  return traj;
}

}  // namespace lzlab
