#pragma once

#include <string>
#include <vector>

#include "lzlab/types.hpp"

namespace lzlab::check {

struct Item {
  std::string name;
  double measured;
  double threshold;
  bool pass;
  std::string note;  // how `measured` compares to `threshold`
};

struct Report {
  std::vector<Item> items;
  double wall_time = 0.0;

  bool all_pass() const;
  std::string to_json() const;
};

/// Averages of the late-time amplitude over the last full oscillation
/// period in eps*tau^2 before the end of the trajectory, weighted by tau so
/// that the average is uniform in the oscillation phase.
struct LateAverage {
  double abs_a;
  cplx a;
  double tau_lo;
};
LateAverage late_period_average(const Trajectory& traj);

/// Maps an angle to (-pi, pi].
double wrap_angle(double x);

/// eta_M straight from its definition: e^{-i eps tau^2} int_{-L}^{tau} e^{i eps s^2} ds
/// by adaptive quadrature, with the far tail beyond -L added from the
/// half-line Fresnel integral.
cplx brute_force_eta(double tau, double epsilon, double tol);

/// Exact solve with the late-time settings used for endpoint checks: window
/// [-T, T] at the step and tolerances of `base`, first-order Born initial state.
Trajectory long_run(const Params& base, double epsilon, double T);

/// Every invariant of every module. Checks that concern one value of eps use
/// `config`; endpoint checks sweep the fixed eps sets they are defined for.
Report run_suite(const Params& config);

}  // namespace lzlab::check
