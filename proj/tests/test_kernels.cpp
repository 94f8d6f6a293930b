#include <doctest.h>

#include <cstring>
#include <omp.h>

#include "lzlab/exact_solver.hpp"
#include "lzlab/kernels.hpp"
#include "oracles.hpp"

using namespace lzlab;

namespace {

template <class T>
bool bitwise_equal(const std::vector<T>& x, const std::vector<T>& y) {
  return x.size() == y.size() && std::memcmp(x.data(), y.data(), x.size() * sizeof(T)) == 0;
}

}  // namespace

TEST_CASE("parallel kernels reproduce the serial reference bit for bit") {
  omp_set_num_threads(4);
  const Params p = make_params(4.0, -20.0, 20.0, 1e-3);
  const auto grid = make_grid(p);
  const Trajectory t = integrate_coupled(p, default_options(p));

  const auto eta_s = kernels::serial::eta_on_grid(grid, 4.0, 1e-11);
  const auto eta_p = kernels::parallel::eta_on_grid(grid, 4.0, 1e-11);
  CHECK(bitwise_equal(eta_s, eta_p));

  const auto pol_s = kernels::serial::polar_pointwise(t.samples, 4.0);
  const auto pol_p = kernels::parallel::polar_pointwise(t.samples, 4.0);
  CHECK(bitwise_equal(pol_s, pol_p));

  const auto nl_s = kernels::serial::nonlinear_phase_residuals(pol_s, 4.0);
  const auto nl_p = kernels::parallel::nonlinear_phase_residuals(pol_p, 4.0);
  CHECK(bitwise_equal(nl_s, nl_p));
}

TEST_CASE("eta on a grid against the oracle") {
  const std::vector<double> taus{-15.0, -4.0, -0.3, 0.0, 0.3, 2.0, 9.0};
  const auto eta = kernels::parallel::eta_on_grid(taus, 1.0, 1e-12);
  for (std::size_t k = 0; k < taus.size(); ++k) CHECK(std::abs(eta[k] - oracle::eta(taus[k], 1.0)) < 1e-10);
}

TEST_CASE("polar sample of a known state") {
  // a = 0.6 i, b = 0.8: A = 0.6, phi' = Im(a'/a)
  const State s{0.5, {0.0, 0.6}, {0.8, 0.0}};
  const PolarSample ps = kernels::polar_at(s, 1.0);
  CHECK(ps.A == doctest::Approx(0.6));
  const cplx a_dot = -cplx(0, 1) * std::polar(1.0, -0.25) * 0.8;
  CHECK(ps.phi_dot == doctest::Approx((a_dot / s.a).imag()));
  CHECK(ps.A_dot == doctest::Approx(0.6 * (a_dot / s.a).real()));
  CHECK(ps.phi == 0.0);
}

TEST_CASE("empty inputs") {
  CHECK(kernels::parallel::eta_on_grid(std::vector<double>{}, 1.0, 1e-12).empty());
  CHECK(kernels::parallel::polar_pointwise(std::vector<State>{}, 1.0).empty());
}
