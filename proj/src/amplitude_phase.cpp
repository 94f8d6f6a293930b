#include "lzlab/amplitude_phase.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lzlab/kernels.hpp"
#include "lzlab/markov.hpp"

namespace lzlab::amplitude_phase {

namespace {

// Cubic Hermite interpolant on [t0, t1] from values and slopes.
double hermite(double t0, double t1, double y0, double y1, double d0, double d1, double t) {
  const double h = t1 - t0;
  const double s = (t - t0) / h;
  const double s2 = s * s, s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * h * d0 + (-2 * s3 + 3 * s2) * y1 +
         (s3 - s2) * h * d1;
}

double denominator(const PolarSample& s, double eps) { return s.phi_dot + eps * s.tau; }

DenominatorZero refine_root(const PolarSample& p, const PolarSample& q, double eps) {
  auto g = [&](double t) {
    return hermite(p.tau, q.tau, denominator(p, eps), denominator(q, eps), p.phi_ddot + eps,
                   q.phi_ddot + eps, t);
  };
  double lo = p.tau, hi = q.tau;
  double glo = g(lo);
  if (glo == 0.0) hi = lo;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((gm < 0) == (glo < 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  const double tau0 = 0.5 * (lo + hi);
  DenominatorZero z;
  z.tau0 = tau0;
  z.phi_ddot = hermite(p.tau, q.tau, p.phi_ddot, q.phi_ddot, p.phi_dddot, q.phi_dddot, tau0);
  z.g_at_root = std::abs(g(tau0));
  z.realized_branch = std::abs(z.phi_ddot) <= kBranchFraction * (2.0 * eps / 3.0);
  return z;
}

}  // namespace

PolarTrajectory polar_decompose(const Trajectory& traj) {
  const double eps = traj.params.epsilon;
  for (const State& s : traj.samples)
    if (std::abs(s.a) < kMinAmplitude)
      throw NumericError("polar decomposition is singular where |a| vanishes", s.tau);

  PolarTrajectory out{traj.params, kernels::parallel::polar_pointwise(traj.samples, eps)};
  auto& ps = out.samples;
  // phi(tau_min) = 0, sixth-order Hermite rule over phi', phi'', phi'''
  for (std::size_t k = 1; k < ps.size(); ++k) {
    const PolarSample& p = ps[k - 1];
    const PolarSample& q = ps[k];
    const double h = q.tau - p.tau;
    ps[k].phi = p.phi + 0.5 * h * (p.phi_dot + q.phi_dot) +
                h * h / 10.0 * (p.phi_ddot - q.phi_ddot) +
                h * h * h / 120.0 * (p.phi_dddot + q.phi_dddot);
  }
  return out;
}

std::vector<double> unwrapped_phase(const Trajectory& traj) {
  std::vector<double> phi(traj.samples.size(), 0.0);
  for (std::size_t k = 1; k < phi.size(); ++k)
    phi[k] = phi[k - 1] + std::arg(traj.samples[k].a / traj.samples[k - 1].a);
  return phi;
}

std::vector<PolarResidual> polar_residuals(const PolarTrajectory& traj, double epsilon) {
  std::vector<PolarResidual> out;
  out.reserve(traj.samples.size());
  for (const PolarSample& s : traj.samples) {
    const double et = epsilon * s.tau;
    out.push_back({s.tau, s.A_ddot + (-s.phi_dot * s.phi_dot - 2.0 * et * s.phi_dot + 1.0) * s.A,
                   s.A * s.phi_ddot + 2.0 * s.A_dot * (s.phi_dot + et)});
  }
  return out;
}

std::vector<double> nonlinear_phase_residual(const PolarTrajectory& traj, double epsilon) {
  return kernels::parallel::nonlinear_phase_residuals(traj.samples, epsilon);
}

std::vector<DenominatorZero> find_denominator_zeros(const PolarTrajectory& traj, double epsilon) {
  std::vector<DenominatorZero> roots;
  const auto& ps = traj.samples;
  for (std::size_t k = 0; k + 1 < ps.size(); ++k) {
    const double g0 = denominator(ps[k], epsilon);
    const double g1 = denominator(ps[k + 1], epsilon);
    // a root sitting exactly on a node is reported once, from its left interval
    const bool crossing = (g0 < 0.0 && g1 >= 0.0) || (g0 > 0.0 && g1 <= 0.0) || (k == 0 && g0 == 0.0);
    if (crossing) roots.push_back(refine_root(ps[k], ps[k + 1], epsilon));
  }
  return roots;
}

std::optional<DenominatorZero> find_denominator_zero(const PolarTrajectory& traj, double epsilon) {
  auto all = find_denominator_zeros(traj, epsilon);
  if (all.empty()) return std::nullopt;
  return all.front();
}

double markov_phase_velocity(double tau, double epsilon) {
  return -markov::eta_direct(tau, epsilon).imag();
}

double markov_phase_residual(double tau, double epsilon) {
  if (tau == 0.0) throw std::domain_error("residual has a 1/tau coefficient; tau must be nonzero");
  const cplx eta = markov::eta_direct(tau, epsilon);
  const double v = -eta.imag();
  const double v1 = -markov::eta_dot(tau, eta, epsilon).imag();
  const double v2 = -markov::eta_ddot(tau, eta, epsilon).imag();
  const double k = 2.0 * epsilon * tau;
  return v2 - v1 / tau + k * k * v - k;
}

double sqrt_branch(double tau, double epsilon) {
  const double et = epsilon * std::abs(tau);
  return -1.0 / (et + std::sqrt(et * et + 1.0));
}

double sqrt_phase_velocity(double tau, double epsilon, double S, double beta) {
  if (tau == 0.0)
    throw std::domain_error("piecewise phase velocity is undefined at tau = 0 (finite jump)");
  const double r = sqrt_branch(tau, epsilon);
  if (tau < 0) return r;
  return -r - S * std::sin(beta - epsilon * tau * tau);
}

double sqrt_phase_velocity(double tau, double epsilon) {
  return sqrt_phase_velocity(tau, epsilon, std::sqrt(std::numbers::pi / epsilon),
                             std::numbers::pi / 4.0);
}

double default_fit_start(double epsilon) { return 20.0 / std::sqrt(epsilon); }

StueckelbergFit fit_stueckelberg(const PolarTrajectory& traj, double tau_lo, double tau_hi) {
  const double eps = traj.params.epsilon;
  if (!(tau_lo > 0.0) || !(tau_hi > tau_lo))
    throw ConfigError("fit window must satisfy 0 < tau_lo < tau_hi");
  const double periods = eps * (tau_hi * tau_hi - tau_lo * tau_lo) / (2.0 * std::numbers::pi);
  if (periods < 5.0)
    throw ConfigError("fit window spans " + std::to_string(periods) +
                      " oscillation periods; at least 5 are needed");

  // normal equations for y = c1 cos(eps tau^2) + c2 sin(eps tau^2)
  double scc = 0, sss = 0, scs = 0, syc = 0, sys = 0;
  std::size_t n = 0;
  for (const PolarSample& s : traj.samples) {
    if (s.tau < tau_lo || s.tau > tau_hi) continue;
    const double th = eps * s.tau * s.tau;
    const double c = std::cos(th), sn = std::sin(th);
    const double y = s.phi_dot + sqrt_branch(s.tau, eps);
    scc += c * c;
    sss += sn * sn;
    scs += c * sn;
    syc += y * c;
    sys += y * sn;
    ++n;
  }
  const double det = scc * sss - scs * scs;
  if (n < 3 || !(det > 1e-12 * scc * sss))
    throw ConfigError("fit window holds too few samples for a well-conditioned fit");
  const double c1 = (syc * sss - sys * scs) / det;
  const double c2 = (sys * scc - syc * scs) / det;

  double ss = 0;
  for (const PolarSample& s : traj.samples) {
    if (s.tau < tau_lo || s.tau > tau_hi) continue;
    const double th = eps * s.tau * s.tau;
    const double r = s.phi_dot + sqrt_branch(s.tau, eps) - (c1 * std::cos(th) + c2 * std::sin(th));
    ss += r * r;
  }
  // -S sin(beta - th) = -S sin(beta) cos(th) + S cos(beta) sin(th)
  double beta = std::atan2(-c1, c2);
  if (beta <= -std::numbers::pi) beta += 2.0 * std::numbers::pi;
  return {std::hypot(c1, c2), beta, tau_lo, tau_hi, std::sqrt(ss / static_cast<double>(n)), n};
}

double amplitude_integrand(const PolarSample& s, double epsilon) {
  return 0.5 * s.phi_ddot / denominator(s, epsilon);
}

namespace {

double amplitude_integrand_dot(const PolarSample& s, double eps) {
  const double g = denominator(s, eps);
  return 0.5 * (g * s.phi_dddot - (s.phi_ddot + eps) * s.phi_ddot) / (g * g);
}

}  // namespace

AmplitudeReconstruction amplitude_from_phase(const PolarTrajectory& traj, double epsilon) {
  const auto& ps = traj.samples;
  const std::size_t n = ps.size();
  AmplitudeReconstruction out;
  out.A.assign(n, 0.0);
  if (n == 0) return out;

  for (const DenominatorZero& z : find_denominator_zeros(traj, epsilon)) out.roots.push_back(z.tau0);

  std::vector<double> f(n), fd(n);
  std::vector<char> bridged(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    f[k] = amplitude_integrand(ps[k], epsilon);
    fd[k] = amplitude_integrand_dot(ps[k], epsilon);
  }

  double delta = 10.0 * traj.params.step;
  for (double tau0 : out.roots) {
    double band = delta;
    for (int attempt = 0;; ++attempt) {
      std::size_t lo = 0, hi = n - 1;  // last node before / first node after the band
      while (lo + 1 < n && ps[lo + 1].tau <= tau0 - band) ++lo;
      while (hi > 0 && ps[hi - 1].tau >= tau0 + band) --hi;
      const bool edges_ok = std::abs(f[lo]) <= kIntegrandCap && std::abs(f[hi]) <= kIntegrandCap;
      if (!edges_ok && attempt < 8 && lo > 0 && hi + 1 < n) {
        band *= 2.0;
        out.warnings.push_back("integrand exceeds cap at band edge near tau0 = " +
                               std::to_string(tau0) + "; widening band to " +
                               std::to_string(band));
        continue;
      }
      // linear bridge across the band
      const double slope = (f[hi] - f[lo]) / (ps[hi].tau - ps[lo].tau);
      for (std::size_t k = lo + 1; k < hi; ++k) f[k] = f[lo] + slope * (ps[k].tau - ps[lo].tau);
      for (std::size_t k = lo; k <= hi; ++k) bridged[k] = 1;
      delta = std::max(delta, band);
      break;
    }
  }
  out.band_halfwidth = delta;

  double integral = 0.0;
  out.A[0] = ps[0].A;
  for (std::size_t k = 1; k < n; ++k) {
    const double h = ps[k].tau - ps[k - 1].tau;
    integral += 0.5 * h * (f[k - 1] + f[k]);
    // the bridge is linear, so plain trapezoid is exact there
    if (!(bridged[k - 1] && bridged[k])) integral += h * h / 12.0 * (fd[k - 1] - fd[k]);
    out.A[k] = ps[0].A * std::exp(-integral);
  }
  return out;
}

}  // namespace lzlab::amplitude_phase
