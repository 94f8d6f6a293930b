#include "lzlab/commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lzlab/check.hpp"
#include "lzlab/exact_solver.hpp"
#include "lzlab/figures.hpp"
#include "lzlab/markov.hpp"

namespace lzlab::cli {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read config file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

output::OutputFile record(const fs::path& p, const std::string& kind) { return {p.string(), kind}; }

}  // namespace

Params resolve_params(const Settings& s) {
  ParamsInput in;
  if (s.config_path) in = params_input_from_json(read_file(*s.config_path));
  if (s.epsilon) {
    in.epsilon = s.epsilon;
    in.alpha.reset();
    in.omega.reset();
  }
  if (s.alpha || s.omega) {
    in.epsilon.reset();
    if (s.alpha) in.alpha = s.alpha;
    if (s.omega) in.omega = s.omega;
  }
  if (!in.epsilon && !in.alpha && !in.omega) in.epsilon = Params{}.epsilon;
  if (!s.window.empty()) {
    if (s.window.size() != 2) throw ConfigError("--window takes two values LO HI");
    in.tau_min = s.window[0];
    in.tau_max = s.window[1];
  }
  if (s.step) in.step = *s.step;
  if (s.ode_tol) in.ode_tol = *s.ode_tol;
  if (s.quad_tol) in.quad_tol = *s.quad_tol;
  return make_params(in);
}

fs::path resolve_out_dir(const Settings& s) {
  if (const char* env = std::getenv("LZLAB_OUT"); env && *env) return env;
  return s.out_dir;
}

int cmd_simulate(const Settings& s, const std::string& initial) {
  const auto t0 = Clock::now();
  const Params p = resolve_params(s);
  SolverOptions o = default_options(p);
  o.initial = initial == "asymptotic" ? InitialCondition::asymptotic : InitialCondition::plain;
  const Trajectory tr = integrate_coupled(p, o);

  const std::size_t n = tr.samples.size();
  std::vector<double> t(n), ra(n), ia(n), rb(n), ib(n), aa(n), ab(n), nd(n);
  for (std::size_t k = 0; k < n; ++k) {
    const State& x = tr.samples[k];
    t[k] = x.tau;
    ra[k] = x.a.real();
    ia[k] = x.a.imag();
    rb[k] = x.b.real();
    ib[k] = x.b.imag();
    aa[k] = std::abs(x.a);
    ab[k] = std::abs(x.b);
    nd[k] = std::norm(x.a) + std::norm(x.b) - 1.0;
  }
  output::Table tab;
  tab.add_column("tau", t);
  tab.add_column("re_a", ra);
  tab.add_column("im_a", ia);
  tab.add_column("re_b", rb);
  tab.add_column("im_b", ib);
  tab.add_column("abs_a", aa);
  tab.add_column("abs_b", ab);
  tab.add_column("norm_defect", nd);

  const fs::path dir = resolve_out_dir(s);
  output::RunManifest m{"simulate", p, {record(output::write_table(dir, "simulate", tab, s.format), "trajectory")}};
  m.wall_time = seconds_since(t0);
  output::write_manifest(dir, "simulate", m);
  return kOk;
}

int cmd_markov(const Settings& s) {
  const auto t0 = Clock::now();
  const Params p = resolve_params(s);
  const MarkovTrajectory mk = markov::markov_solution(p);

  const std::size_t n = mk.samples.size();
  std::vector<double> t(n), re(n), im(n), A(n), ph(n);
  for (std::size_t k = 0; k < n; ++k) {
    const RateSample& r = mk.samples[k];
    t[k] = r.tau;
    re[k] = r.eta.real();
    im[k] = r.eta.imag();
    A[k] = r.A_M;
    ph[k] = r.phi_M;
  }
  output::Table tab;
  tab.add_column("tau", t);
  tab.add_column("re_eta", re);
  tab.add_column("im_eta", im);
  tab.add_column("A_M", A);
  tab.add_column("phi_M", ph);

  const markov::LzIntegral lz = markov::lz_integral(p.epsilon, p.quad_tol);
  nlohmann::ordered_json summary;
  summary["epsilon"] = p.epsilon;
  summary["lz_integral"] = lz.value.real();
  summary["lz_integral_imag"] = lz.value.imag();
  summary["lz_integral_closed_form"] = lz.closed_form;
  summary["lz_formula"] = markov::lz_formula(p.epsilon);
  summary["endpoint_tau"] = mk.samples.back().tau;
  summary["endpoint_A_M"] = mk.samples.back().A_M;

  const fs::path dir = resolve_out_dir(s);
  output::RunManifest m{"markov", p, {}};
  m.outputs.push_back(record(output::write_table(dir, "markov", tab, s.format), "rate_samples"));
  const fs::path sp = dir / "markov_summary.json";
  output::write_atomic(sp, summary.dump(2) + "\n");
  m.outputs.push_back(record(sp, "summary"));
  m.wall_time = seconds_since(t0);
  output::write_manifest(dir, "markov", m);
  return kOk;
}

int cmd_figures(const Settings& s, const std::string& which) {
  const auto t0 = Clock::now();
  const figures::Which w = figures::parse_which(which);
  const Params p = resolve_params(s);
  const fs::path dir = resolve_out_dir(s);
  output::RunManifest m{"figures", p, {}};
  for (const auto& [stem, tab] : figures::make_figure(w, p))
    m.outputs.push_back(record(output::write_table(dir, stem, tab, s.format), figures::name_of(w)));
  m.wall_time = seconds_since(t0);
  output::write_manifest(dir, figures::name_of(w), m);
  return kOk;
}

int cmd_check(const Settings& s) {
  const auto t0 = Clock::now();
  const Params p = resolve_params(s);
  const check::Report rep = check::run_suite(p);
  const std::string text = rep.to_json();
  std::cout << text;

  const fs::path dir = resolve_out_dir(s);
  const fs::path rp = dir / "check.json";
  output::write_atomic(rp, text);
  output::RunManifest m{"check", p, {record(rp, "report")}};
  m.wall_time = seconds_since(t0);
  output::write_manifest(dir, "check", m);

  for (const auto& i : rep.items)
    if (!i.pass) std::cerr << "FAILED " << i.name << ": " << i.measured << " vs " << i.threshold << "\n";
  return rep.all_pass() ? kOk : kCheckFailed;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Landau-Zener numerical laboratory"};
  app.require_subcommand(1);
  Settings s;
  std::string format = "csv";
  std::string initial = "plain";
  std::string which;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", s.config_path, "JSON config file; flags override its values");
    sub->add_option("--epsilon", s.epsilon, "adiabaticity parameter alpha/omega^2");
    sub->add_option("--alpha", s.alpha, "chirp rate (with --omega, instead of --epsilon)");
    sub->add_option("--omega", s.omega, "coupling (with --alpha)");
    sub->add_option("--window", s.window, "time window LO HI")->expected(2)->allow_extra_args(false);
    sub->add_option("--step", s.step, "nominal grid spacing");
    sub->add_option("--ode-tol", s.ode_tol, "integrator tolerance");
    sub->add_option("--quad-tol", s.quad_tol, "quadrature tolerance");
    sub->add_option("--out", s.out_dir, "output directory (LZLAB_OUT overrides)");
    sub->add_option("--format", format, "data file format")->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* sim = app.add_subcommand("simulate", "exact dynamics on the grid");
  add_common(sim);
  sim->add_option("--initial", initial, "state at tau_min: plain (1, 0) or asymptotic")
      ->check(CLI::IsMember({"plain", "asymptotic"}));
  CLI::App* mk = app.add_subcommand("markov", "Markov rate function and amplitude");
  add_common(mk);
  CLI::App* fig = app.add_subcommand("figures", "figure data bundles");
  add_common(fig);
  fig->add_option("which", which, "fig1, fig2, fig3 or fig4")->required();
  CLI::App* chk = app.add_subcommand("check", "run every invariant and report as JSON");
  add_common(chk);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }
  s.format = format == "json" ? output::Format::json : output::Format::csv;

  try {
    if (*sim) return cmd_simulate(s, initial);
    if (*mk) return cmd_markov(s);
    if (*fig) return cmd_figures(s, which);
    return cmd_check(s);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericFailure;
  }
}

}  // namespace lzlab::cli
