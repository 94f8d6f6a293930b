#pragma once

#include "lzlab/fresnel.hpp"
#include "lzlab/types.hpp"

namespace lzlab::markov {

/// Markov rate function eta_M(tau) = e^{-i eps tau^2} int_{-inf}^{tau} e^{i eps s^2} ds.
/// tau <= 0 goes through the half-line Fresnel integral, tau > 0 through the
/// reflection eta(t) = -eta(-t) + sqrt(i pi/eps) e^{-i eps t^2}.
cplx eta_direct(double tau, double epsilon, double tol = 1e-12);

/// eta_direct with its propagated absolute error estimate.
fresnel::FresnelValue eta_direct_estimate(double tau, double epsilon, double tol = 1e-12);

/// Large-|tau| form for tau < 0: 1/(4 eps^2 |tau|^3) + i/(2 eps |tau|).
cplx eta_negative_asymptotic(double tau, double epsilon);

/// eta' = 1 - 2 i eps tau eta, and eta'' = -2 i eps eta - 2 i eps tau eta'.
cplx eta_dot(double tau, cplx eta, double epsilon);
cplx eta_ddot(double tau, cplx eta, double epsilon);

/// eta propagated through eta' + 2 i eps tau eta - 1 = 0 on the grid, seeded
/// with eta_direct(tau_min). Only `tau` and `eta` of each sample are set.
MarkovTrajectory eta_ode(const Params& params);

/// a_M = exp(-int_{-inf}^{tau} eta): A_M from the real part, phi_M = -int Im eta
/// with phi_M(tau_min) = 0. The real part of the (-inf, tau_min] tail is
/// added analytically.
MarkovTrajectory markov_solution(const Params& params);

/// int_{-inf}^{tau_min} Re eta_M; asymptotic for large |tau_min|, otherwise
/// quadrature out to where the asymptotic form takes over.
double real_tail(double tau_min, double epsilon, double tol = 1e-12);

struct LzIntegral {
  cplx value;          // numerically evaluated int eta_M over the real line
  double closed_form;  // pi / (2 eps)
  bool imaginary_ok;   // |Im value| <= quad_tol
};

/// int eta_M = sqrt(i pi/eps) int_0^inf e^{-i eps tau^2}, with the half-line
/// integral done by quadrature plus the asymptotic Fresnel tail.
LzIntegral lz_integral(double epsilon, double quad_tol);

/// exp(-pi / (2 eps)).
double lz_formula(double epsilon);

/// Combined contribution of both tails |tau| > T to int Im eta_M. Their
/// antisymmetric parts cancel, leaving Im[sqrt(i pi/eps) conj F(T)].
double imag_tails(double T, double epsilon, double tol = 1e-12);

/// int Im eta_M over the whole line, from the grid quadrature of a Markov
/// trajectory on a symmetric window [-T, T] plus imag_tails(T). Vanishes for
/// the exact rate function. Throws ConfigError on an asymmetric window.
double stueckelberg_cancellation(const MarkovTrajectory& traj);

}  // namespace lzlab::markov
