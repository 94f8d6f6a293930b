#pragma once

#include <complex>
#include <vector>

#include "lzlab/params.hpp"

namespace lzlab {

using cplx = std::complex<double>;

/// Interaction-picture amplitudes at one instant.
struct State {
  double tau = 0.0;
  cplx a{1.0, 0.0};
  cplx b{0.0, 0.0};
};

/// Ordered samples of the dynamics on the grid of `params`.
struct Trajectory {
  Params params;
  std::vector<State> samples;
};

/// a = A e^{i phi} with analytic derivatives of the phase. A_dot and A_ddot
/// are carried alongside so the coupled polar equations can be checked
/// without differencing.
struct PolarSample {
  double tau = 0.0;
  double A = 1.0;
  double phi = 0.0;
  double phi_dot = 0.0;
  double phi_ddot = 0.0;
  double phi_dddot = 0.0;
  double A_dot = 0.0;
  double A_ddot = 0.0;
};

struct PolarTrajectory {
  Params params;
  std::vector<PolarSample> samples;
};

/// Markov rate function and the Markov amplitude/phase built from it.
struct RateSample {
  double tau = 0.0;
  cplx eta;
  double A_M = 1.0;
  double phi_M = 0.0;
};

struct MarkovTrajectory {
  Params params;
  std::vector<RateSample> samples;
};

}  // namespace lzlab
