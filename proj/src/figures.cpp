#include "lzlab/figures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lzlab/amplitude_phase.hpp"
#include "lzlab/exact_solver.hpp"
#include "lzlab/linearized_phase.hpp"
#include "lzlab/markov.hpp"

namespace lzlab::figures {

namespace ap = amplitude_phase;
using std::numbers::pi;

Which parse_which(const std::string& name) {
  if (name == "fig1") return Which::fig1;
  if (name == "fig2") return Which::fig2;
  if (name == "fig3") return Which::fig3;
  if (name == "fig4") return Which::fig4;
  throw ConfigError("unknown figure '" + name + "' (expected fig1, fig2, fig3 or fig4)");
}

std::string name_of(Which w) {
  switch (w) {
    case Which::fig1: return "fig1";
    case Which::fig2: return "fig2";
    case Which::fig3: return "fig3";
    case Which::fig4: return "fig4";
  }
  return "";
}

cplx markov_branch(double tau, const Params& params) {
  const double eps = params.epsilon;
  const cplx i{0.0, 1.0};
  if (tau < 0) {
    // int_{-inf}^{tau} eta ~ 1/(8 eps^2 tau^2) + (i/(2 eps)) ln(|tau_min|/|tau|)
    const double re = 1.0 / (8 * eps * eps * tau * tau);
    const double im = std::log(-params.tau_min / -tau) / (2 * eps);
    return std::exp(-cplx(re, im));
  }
  // int_{-inf}^{tau} eta = pi/(2 eps) - int_tau^inf eta, large-tau form of
  // eta from the reflection identity; the log is cut off at tau_max
  const double T = params.tau_max;
  const cplx tail = -1.0 / (8 * eps * eps * tau * tau) - i * std::log(T / tau) / (2 * eps) +
                    std::sqrt(i * pi / eps) * (-i / (2 * eps * tau)) * std::polar(1.0, -eps * tau * tau);
  return std::exp(-(pi / (2 * eps) - tail));
}

namespace {

Trajectory exact(const Params& p) {
  SolverOptions o = default_options(p);
  o.initial = InitialCondition::asymptotic;
  return integrate_coupled(p, o);
}

Bundle fig1(const Params& p) {
  const Trajectory tr = exact(p);
  const MarkovTrajectory mk = markov::markov_solution(p);
  Bundle out;

  std::vector<double> t, re, im;
  for (const State& s : tr.samples) {
    t.push_back(s.tau);
    re.push_back(s.a.real());
    im.push_back(s.a.imag());
  }
  output::Table ex;
  ex.add_column("tau", t);
  ex.add_column("re_a", re);
  ex.add_column("im_a", im);
  out.emplace_back("fig1_exact", std::move(ex));

  t.clear(), re.clear(), im.clear();
  for (const RateSample& r : mk.samples) {
    const cplx a = std::polar(r.A_M, r.phi_M);
    t.push_back(r.tau);
    re.push_back(a.real());
    im.push_back(a.imag());
  }
  output::Table m;
  m.add_column("tau", t);
  m.add_column("re_a", re);
  m.add_column("im_a", im);
  out.emplace_back("fig1_markov", std::move(m));

  std::vector<double> side;
  t.clear(), re.clear(), im.clear();
  const double cut = 1.0 / std::sqrt(p.epsilon);
  for (double tau : make_grid(p)) {
    if (std::abs(tau) < cut) continue;
    const cplx a = markov_branch(tau, p);
    t.push_back(tau);
    side.push_back(tau < 0 ? -1.0 : 1.0);
    re.push_back(a.real());
    im.push_back(a.imag());
  }
  output::Table b;
  b.add_column("tau", t);
  b.add_column("side", side);
  b.add_column("re_a", re);
  b.add_column("im_a", im);
  out.emplace_back("fig1_branches", std::move(b));
  return out;
}

Bundle fig2(const Params& p) {
  const double eps = p.epsilon;
  const PolarTrajectory pol = ap::polar_decompose(exact(p));
  const auto roots = ap::find_denominator_zeros(pol, eps);

  std::vector<double> t, pd, met, pdd, marker;
  auto row = [&](double tau, double v, double a, bool root) {
    t.push_back(tau);
    pd.push_back(v);
    met.push_back(-eps * tau);
    pdd.push_back(a);
    marker.push_back(root ? 1.0 : 0.0);
  };
  std::size_t r = 0;
  for (const PolarSample& s : pol.samples) {
    while (r < roots.size() && roots[r].tau0 < s.tau) {
      row(roots[r].tau0, -eps * roots[r].tau0, roots[r].phi_ddot, true);
      ++r;
    }
    row(s.tau, s.phi_dot, s.phi_ddot, false);
  }
  for (; r < roots.size(); ++r) row(roots[r].tau0, -eps * roots[r].tau0, roots[r].phi_ddot, true);

  output::Table tab;
  tab.add_column("tau", t);
  tab.add_column("phi_dot", pd);
  tab.add_column("minus_eps_tau", met);
  tab.add_column("phi_ddot", pdd);
  tab.add_column("pole_branch", std::vector<double>(t.size(), -2.0 * eps / 3.0));
  tab.add_column("is_tau0", marker);
  return {{"fig2", std::move(tab)}};
}

Bundle fig3(const Params& p) {
  const double eps = p.epsilon;
  const double S = std::sqrt(pi / eps), beta = pi / 4;
  const PolarTrajectory pol = ap::polar_decompose(exact(p));
  std::vector<double> t, rp, sine, model, phid, inv;
  for (const PolarSample& s : pol.samples) {
    if (s.tau == 0.0) continue;
    const double r = ap::sqrt_branch(s.tau, eps);
    t.push_back(s.tau);
    rp.push_back(s.tau < 0 ? r : -r);
    sine.push_back(s.tau < 0 ? 0.0 : -S * std::sin(beta - eps * s.tau * s.tau));
    model.push_back(ap::sqrt_phase_velocity(s.tau, eps, S, beta));
    phid.push_back(s.phi_dot);
    inv.push_back(1.0 / (2 * eps * s.tau));
  }
  output::Table tab;
  tab.add_column("tau", t);
  tab.add_column("r_piecewise", rp);
  tab.add_column("sine_term", sine);
  tab.add_column("sqrt_model", model);
  tab.add_column("exact_phi_dot", phid);
  tab.add_column("inverse_tau", inv);
  return {{"fig3", std::move(tab)}};
}

Bundle fig4(const Params& p) {
  const PolarTrajectory pol = ap::polar_decompose(exact(p));
  const ap::LinearizedSolution lin = ap::solve_linearized_phase(p);
  const MarkovTrajectory mk = markov::markov_solution(p);
  std::vector<double> t, ex, li, ma;
  for (std::size_t k = 0; k < pol.samples.size(); ++k) {
    t.push_back(pol.samples[k].tau);
    ex.push_back(pol.samples[k].phi_dot);
    li.push_back(lin.samples[k].phi_dot);
    ma.push_back(-mk.samples[k].eta.imag());
  }
  output::Table tab;
  tab.add_column("tau", t);
  tab.add_column("exact_phi_dot", ex);
  tab.add_column("linearized_phi_dot", li);
  tab.add_column("markov_phi_dot", ma);
  return {{"fig4", std::move(tab)}};
}

}  // namespace

Bundle make_figure(Which which, const Params& params) {
  switch (which) {
    case Which::fig1: return fig1(params);
    case Which::fig2: return fig2(params);
    case Which::fig3: return fig3(params);
    case Which::fig4: return fig4(params);
  }
  return {};
}

}  // namespace lzlab::figures
