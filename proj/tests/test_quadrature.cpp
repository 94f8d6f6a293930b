#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lzlab/quadrature.hpp"

using lzlab::quad::gauss_kronrod;
using cplx = std::complex<double>;

TEST_CASE("polynomials up to degree 22 are integrated exactly on one panel") {
  const auto r = gauss_kronrod([](double x) { return cplx(std::pow(x, 22), 3 * x * x); }, -1.0, 2.0, 1e-6);
  CHECK(r.converged);
  CHECK(r.value.real() == doctest::Approx((std::pow(2.0, 23) + 1) / 23).epsilon(1e-14));
  CHECK(r.value.imag() == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("oscillatory integrand against its antiderivative") {
  // int_0^L e^{i k x} dx = (e^{i k L} - 1) / (i k)
  const double k = 300.0, L = 7.0;
  const auto r = gauss_kronrod([k](double x) { return std::polar(1.0, k * x); }, 0.0, L, 1e-12);
  const cplx exact = (std::polar(1.0, k * L) - 1.0) / cplx(0.0, k);
  CHECK(r.converged);
  CHECK(std::abs(r.value - exact) < 1e-12);
  CHECK(r.error < 1e-12);
  CHECK(r.intervals > 1);
}

TEST_CASE("reversed limits flip the sign") {
  auto f = [](double x) { return cplx(std::exp(x), std::sin(x)); };
  const auto a = gauss_kronrod(f, 0.0, 1.5, 1e-13);
  const auto b = gauss_kronrod(f, 1.5, 0.0, 1e-13);
  CHECK(std::abs(a.value + b.value) < 1e-14);
}

TEST_CASE("interval budget exhaustion is reported") {
  const auto r = gauss_kronrod([](double x) { return cplx(1.0 / std::sqrt(std::abs(x - 0.3))); }, 0.0, 1.0, 1e-15, 5);
  CHECK_FALSE(r.converged);
  CHECK(r.intervals <= 5);
  CHECK(r.error > 1e-15);
}

TEST_CASE("empty interval") {
  const auto r = gauss_kronrod([](double) { return cplx(1.0); }, 2.0, 2.0, 1e-12);
  CHECK(r.value == cplx(0.0));
}
