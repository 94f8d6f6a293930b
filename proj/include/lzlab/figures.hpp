#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lzlab/output.hpp"
#include "lzlab/types.hpp"

namespace lzlab::figures {

enum class Which { fig1, fig2, fig3, fig4 };

/// "fig1".."fig4"; throws ConfigError otherwise.
Which parse_which(const std::string& name);
std::string name_of(Which w);

/// Named tables making up one figure. Exact trajectories start from the
/// first-order Born state at tau_min so that a finite window stands in for
/// tau -> -inf.
///
/// fig1  fig1_exact, fig1_markov: tau, re_a, im_a.
///       fig1_branches: large-|tau| forms of the Markov amplitude on
///       |tau| >= 1/sqrt(eps), with `side` -1 / +1.
/// fig2  tau, phi_dot, minus_eps_tau, phi_ddot, pole_branch, is_tau0; one
///       extra row (is_tau0 = 1) per root of phi_dot + eps tau.
/// fig3  tau, r_piecewise, sine_term, sqrt_model, exact_phi_dot, inverse_tau;
///       the tau = 0 node is left out since the piecewise model jumps there.
/// fig4  tau, exact_phi_dot, linearized_phi_dot, markov_phi_dot.
using Bundle = std::vector<std::pair<std::string, output::Table>>;

Bundle make_figure(Which which, const Params& params);

/// Asymptotic Markov amplitude for tau < 0 (side -1) or tau > 0 (side +1),
/// phase referenced to tau_min on the negative side and to tau_max on the
/// positive side.
cplx markov_branch(double tau, const Params& params);

}  // namespace lzlab::figures
