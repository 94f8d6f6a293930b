#pragma once

#include <complex>
#include <functional>

namespace lzlab::quad {

struct Result {
  std::complex<double> value;
  double error = 0.0;   // absolute error estimate
  int intervals = 0;    // subintervals in the final partition
  bool converged = true;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of a complex integrand
/// on [lo, hi]; hi < lo integrates in reverse. Bisects the interval with the
/// largest Kronrod-minus-Gauss estimate until the summed estimate is below
/// abs_tol or `max_intervals` is reached, in which case `converged` is false
/// and the best estimate is returned.
Result gauss_kronrod(const std::function<std::complex<double>(double)>& f, double lo, double hi,
                     double abs_tol, int max_intervals = 2000);

}  // namespace lzlab::quad
