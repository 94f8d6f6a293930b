#pragma once

#include "lzlab/types.hpp"

namespace lzlab {

enum class Method { adaptive, fixed_step };

/// How the state at tau_min stands in for the tau -> -inf limit.
enum class InitialCondition {
  plain,       // (a, b) = (1, 0)
  asymptotic,  // b = -i F(|tau_min|), a = sqrt(1 - |b|^2): first-order Born value
};

struct SolverOptions {
  Method method = Method::adaptive;
  // Target for the accumulated error. The adaptive route (Dormand-Prince 5(4)
  // with its dense-output interpolant) runs at a local tolerance of ode_tol/10.
  double ode_tol = 1e-9;
  bool dense_output = true;  // samples on every grid node; otherwise endpoints only
  InitialCondition initial = InitialCondition::plain;
  double fixed_step = 0.0;   // fixed-step size; 0 means the grid spacing
};

SolverOptions default_options(const Params& p);

/// Coupled interaction-picture system
///   i a' = e^{-i eps tau^2} b,   i b' = e^{+i eps tau^2} a
/// sampled on make_grid(params). Throws NumericError on step-size underflow.
Trajectory integrate_coupled(const Params& params, const SolverOptions& options);

/// Second-order form a'' + 2 i eps tau a' + a = 0 with a'(tau_min) taken from
/// the same initial condition as the coupled route. Samples store b recovered
/// from a' through b = i e^{i eps tau^2} a'.
Trajectory integrate_second_order(const Params& params, const SolverOptions& options);

struct Derivatives {
  cplx a_dot;
  cplx a_ddot;
  cplx a_dddot;
};

/// Analytic a', a'', a''' from the coupled form (a' = -i e^{-i eps tau^2} b)
/// and the second-order equation; no differencing.
Derivatives derivatives(const State& s, double epsilon);

/// Same, starting from a and a' directly.
Derivatives derivatives_from_a_dot(double tau, cplx a, cplx a_dot, double epsilon);

/// a' recovered from a state: -i e^{-i eps tau^2} b.
cplx a_dot_of(const State& s, double epsilon);

/// Initial state at tau_min for the chosen policy.
State initial_state(const Params& params, InitialCondition ic);

}  // namespace lzlab
