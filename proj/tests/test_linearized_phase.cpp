#include <doctest.h>

#include <boost/numeric/odeint.hpp>

#include "lzlab/amplitude_phase.hpp"
#include "lzlab/check.hpp"
#include "lzlab/linearized_phase.hpp"
#include "lzlab/markov.hpp"

using namespace lzlab;
using namespace lzlab::amplitude_phase;

TEST_CASE("origin series satisfies the equation") {
  for (double eps : {1.0, 4.0}) {
    const OriginSeries s(eps, -0.7, 0.4, true, 0.5);
    for (double t : {-0.5, -0.2, -0.01, 0.03, 0.25, 0.5}) {
      CAPTURE(eps);
      CAPTURE(t);
      CHECK(std::abs(linearized_series_residual(s, t, eps)) < 1e-10);
    }
    CHECK(s.eval(0.0)[0] == -0.7);
    CHECK(s.eval(0.0)[1] == 0.0);
    CHECK(std::abs(s.eval(1e-8)[1]) < 1e-6);
  }
}

TEST_CASE("origin series against direct integration away from the origin") {
  const double eps = 4.0;
  const OriginSeries s(eps, 0.3, -1.2, true, 0.6);
  using V = std::array<double, 2>;
  V y = s.eval(0.3);
  auto rhs = [eps](const V& y, V& dy, double t) {
    const double k = 2 * eps * t;
    dy[0] = y[1];
    dy[1] = y[1] / t - (k * k - 4) * y[0] + k;
  };
  namespace odeint = boost::numeric::odeint;
  odeint::integrate_adaptive(odeint::make_controlled(1e-13, 1e-13, odeint::runge_kutta_fehlberg78<V>()), rhs, y, 0.3,
                             0.6, 1e-3);
  const V ref = s.eval(0.6);
  CHECK(std::abs(y[0] - ref[0]) < 1e-9);
  CHECK(std::abs(y[1] - ref[1]) < 1e-8);
}

TEST_CASE("second derivative grows like 4 a0 ln|tau|") {
  const OriginSeries s(2.0, 0.5, 0.0, false, 0.1);
  const double t = 1e-6;
  // u = a0 + 2 a0 tau^2 ln|tau| + O(tau^3) with a2 = 0
  CHECK(s.second_derivative(t) == doctest::Approx(2.0 * std::log(t) + 3.0).epsilon(1e-6));
  CHECK(s.second_derivative(-t) == doctest::Approx(s.second_derivative(t)).epsilon(1e-9));
}

TEST_CASE("linearized solution on the grid") {
  const Params p = make_params(4.0, -20.0, 20.0);
  const LinearizedSolution sol = solve_linearized_phase(p);
  const auto grid = make_grid(p);
  REQUIRE(sol.samples.size() == grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) REQUIRE(sol.samples[k].tau == grid[k]);

  const cplx e0 = markov::eta_direct(-20.0, 4.0);
  CHECK(sol.samples.front().phi_dot == doctest::Approx(-e0.imag()).epsilon(1e-14));
  CHECK(sol.samples.front().phi_ddot == doctest::Approx(-markov::eta_dot(-20.0, e0, 4.0).imag()).epsilon(1e-14));

  const std::size_t z = zero_index(p);
  CHECK(sol.samples[z].phi_ddot == 0.0);
  CHECK(sol.samples[z].phi_dot == sol.a0);
  CHECK(sol.bridge_left == doctest::Approx(-0.25));
  CHECK(sol.bridge_right == doctest::Approx(0.25));
  for (const auto& s : sol.samples) REQUIRE(std::isfinite(s.phi_dot));
}

TEST_CASE("numerical branches satisfy the equation next to the bridge") {
  const double eps = 4.0, h = 1e-3;
  const Params p = make_params(eps, -20.0, 20.0, h);
  const LinearizedSolution sol = solve_linearized_phase(p);
  const std::size_t z = zero_index(p);
  for (std::size_t k : {z - 400, z - 260, z + 260, z + 400}) {
    const auto& s = sol.samples;
    const double t = s[k].tau;
    const double d2 =
        (-s[k + 2].phi_ddot + 8 * s[k + 1].phi_ddot - 8 * s[k - 1].phi_ddot + s[k - 2].phi_ddot) / (12 * h);
    const double k2 = 2 * eps * t;
    const double r = d2 - s[k].phi_ddot / t + (k2 * k2 - 4) * s[k].phi_dot - k2;
    CAPTURE(t);
    CHECK(std::abs(r) < 1e-5);
  }
  // the bridge hands over without a jump
  for (std::size_t k : {z - 250, z + 250}) {
    CHECK(std::abs(sol.samples[k + 1].phi_dot - sol.samples[k].phi_dot) < 10 * h);
  }
}

TEST_CASE("distance from the exact phase velocity") {
  // regression values, root-mean-square of phi_l' - phi' over [-20, 20]
  for (auto [eps, expected] : {std::pair{1.0, 2.917}, {4.0, 0.7746}}) {
    const Params p = make_params(eps, -20.0, 20.0);
    const PolarTrajectory exact = polar_decompose(check::long_run(p, eps, 20.0));
    const LinearizedSolution lin = solve_linearized_phase(p);
    double s = 0.0;
    for (std::size_t k = 0; k < exact.samples.size(); ++k) {
      const double d = lin.samples[k].phi_dot - exact.samples[k].phi_dot;
      s += d * d;
    }
    CAPTURE(eps);
    CHECK(std::sqrt(s / exact.samples.size()) == doctest::Approx(expected).epsilon(0.05));
  }
}
