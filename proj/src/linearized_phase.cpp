#include "lzlab/linearized_phase.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>

#include "lzlab/markov.hpp"

namespace lzlab::amplitude_phase {

namespace odeint = boost::numeric::odeint;

namespace {

using Vec2 = std::array<double, 2>;

// Bridge half-width before snapping to the grid.
double bridge_target(double eps) { return std::min(0.5, 0.5 / std::sqrt(eps)); }

}  // namespace

OriginSeries::OriginSeries(double epsilon, double a0, double a2, bool forced, double radius) {
  constexpr int kMaxTerms = 400;
  const double e2 = epsilon * epsilon;
  a_.assign(kMaxTerms, 0.0);
  b_.assign(kMaxTerms, 0.0);
  a_[0] = a0;
  a_[2] = a2;
  b_[2] = 2.0 * a0;
  auto at = [](const std::vector<double>& v, int i) { return i >= 0 ? v[i] : 0.0; };
  const double r = std::max(radius, 1e-300);
  int small_run = 0;
  int m = 3;
  for (; m < kMaxTerms; ++m) {
    const double mm = static_cast<double>(m) * (m - 2);
    b_[m] = (4.0 * at(b_, m - 2) - 4.0 * e2 * at(b_, m - 4)) / mm;
    const double rhs = (forced && m == 3) ? 2.0 * epsilon : 0.0;
    a_[m] = (rhs + 4.0 * at(a_, m - 2) - 4.0 * e2 * at(a_, m - 4) - (2.0 * m - 2.0) * b_[m]) / mm;
    const double mag = (std::abs(a_[m]) + std::abs(b_[m])) * std::pow(r, m);
    small_run = mag < 1e-20 ? small_run + 1 : 0;
    if (small_run >= 4) break;
  }
  a_.resize(std::min(m + 1, kMaxTerms));
  b_.resize(a_.size());
}

std::array<double, 2> OriginSeries::eval(double tau) const {
  if (tau == 0.0) return {a_[0], 0.0};
  const double L = std::log(std::abs(tau));
  double u = 0.0, du = 0.0;
  double p = 1.0;  // tau^m
  double pm1 = 0.0;  // tau^{m-1}
  for (std::size_t m = 0; m < a_.size(); ++m) {
    u += (a_[m] + L * b_[m]) * p;
    if (m > 0) du += (m * a_[m] + L * m * b_[m] + b_[m]) * pm1;
    pm1 = p;
    p *= tau;
  }
  return {u, du};
}

double OriginSeries::second_derivative(double tau) const {
  const double L = std::log(std::abs(tau));
  double d2 = 0.0;
  double p = 1.0 / (tau * tau);  // tau^{m-2}
  for (std::size_t m = 0; m < a_.size(); ++m) {
    const double md = static_cast<double>(m);
    d2 += (md * (md - 1) * a_[m] + L * md * (md - 1) * b_[m] + (2 * md - 1) * b_[m]) * p;
    p *= tau;
  }
  return d2;
}

double linearized_series_residual(const OriginSeries& s, double tau, double epsilon) {
  const auto [u, du] = s.eval(tau);
  const double k = 2.0 * epsilon * tau;
  return s.second_derivative(tau) - du / tau + (k * k - 4.0) * u - k;
}

LinearizedSolution solve_linearized_phase(const Params& params) {
  const double eps = params.epsilon;
  const std::vector<double> grid = make_grid(params);
  const std::size_t z = zero_index(params);
  LinearizedSolution out;
  out.params = params;
  out.samples.reserve(grid.size());

  const double h_left = -grid[z - 1];
  const double h_right = grid[z + 1];
  const double target = bridge_target(eps);
  const std::size_t kl = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::lround(target / h_left)), 1, z);
  const std::size_t kr = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::lround(target / h_right)), 1, grid.size() - 1 - z);
  const std::size_t left = z - kl, right = z + kr;
  out.bridge_left = grid[left];
  out.bridge_right = grid[right];

  auto rhs = [eps](const Vec2& y, Vec2& dy, double tau) {
    const double k = 2.0 * eps * tau;
    dy[0] = y[1];
    dy[1] = y[1] / tau - (k * k - 4.0) * y[0] + k;
  };
  double last_tau = grid.front();
  auto record = [&](const Vec2& y, double tau) {
    last_tau = tau;
    out.samples.push_back({tau, y[0], y[1]});
  };
  auto integrate = [&](Vec2& y, std::size_t from, std::size_t to) {
    auto stepper = odeint::make_controlled(params.ode_tol, params.ode_tol,
                                           odeint::runge_kutta_fehlberg78<Vec2>());
    try {
      odeint::integrate_times(stepper, rhs, y, grid.begin() + from, grid.begin() + to + 1,
                              std::min(params.step, 1e-3), record,
                              odeint::max_step_checker(100000));
    } catch (const odeint::no_progress_error&) {
      throw NumericError("linearized phase integrator made no progress", last_tau);
    }
  };

  const cplx eta0 = markov::eta_direct(grid.front(), eps, params.quad_tol);
  Vec2 y{-eta0.imag(), -markov::eta_dot(grid.front(), eta0, eps).imag()};
  if (left > 0) {
    integrate(y, 0, left);
  } else {
    record(y, grid.front());
  }

  // fit (a0, a2) so the series matches (u, u') at the left edge
  const double tl = grid[left];
  const OriginSeries s0(eps, 1.0, 0.0, false, std::abs(tl));
  const OriginSeries s2(eps, 0.0, 1.0, false, std::abs(tl));
  const OriginSeries sp(eps, 0.0, 0.0, true, std::abs(tl));
  const auto e0 = s0.eval(tl), e2 = s2.eval(tl), ep = sp.eval(tl);
  const double r0 = y[0] - ep[0], r1 = y[1] - ep[1];
  const double det = e0[0] * e2[1] - e2[0] * e0[1];
  if (!(std::abs(det) > 0.0)) throw NumericError("series bridge is degenerate", tl);
  out.a0 = (r0 * e2[1] - e2[0] * r1) / det;
  out.a2 = (e0[0] * r1 - r0 * e0[1]) / det;

  const double radius = std::max(std::abs(tl), std::abs(grid[right]));
  const OriginSeries bridge(eps, out.a0, out.a2, true, radius);
  for (std::size_t k = left + 1; k <= right; ++k) {
    const auto v = bridge.eval(grid[k]);
    out.samples.push_back({grid[k], v[0], v[1]});
  }
  if (right + 1 < grid.size()) {
    const auto v = bridge.eval(grid[right]);
    y = {v[0], v[1]};
    out.samples.pop_back();  // integrate_times re-records the starting node
    integrate(y, right, grid.size() - 1);
  }
  return out;
}

}  // namespace lzlab::amplitude_phase
