#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lzlab {

/// Invalid user configuration (bad numbers, unknown keys, malformed files).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical procedure could not deliver its contract. Carries the
/// dimensionless time at which it gave up.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double tau)
      : std::runtime_error(what + " (tau = " + std::to_string(tau) + ")"), tau_(tau) {}
  double tau() const noexcept { return tau_; }

 private:
  double tau_;
};

/// Chirp and coupling as given by the user. Only their ratio alpha/omega^2
/// enters the dynamics.
struct ChirpCoupling {
  double alpha;
  double omega;
};

/// Physical configuration plus numerical controls. Immutable once built by
/// make_params(); all quantities are dimensionless (tau = omega * t).
struct Params {
  double epsilon = 4.0;
  std::optional<ChirpCoupling> chirp_coupling;  // set when epsilon was derived
  double tau_min = -20.0;
  double tau_max = 20.0;
  double step = 1e-3;
  double quad_tol = 1e-11;
  double ode_tol = 1e-9;
};

/// Unvalidated configuration. Exactly one of `epsilon` or
/// (`alpha`, `omega`) must be present.
struct ParamsInput {
  std::optional<double> epsilon;
  std::optional<double> alpha;
  std::optional<double> omega;
  double tau_min = -20.0;
  double tau_max = 20.0;
  double step = 1e-3;
  double quad_tol = 1e-11;
  double ode_tol = 1e-9;
};

/// Validates and normalizes. Throws ConfigError on nonpositive epsilon,
/// alpha or omega, on a window that does not straddle zero, or on
/// nonpositive step or tolerances.
Params make_params(const ParamsInput& in);

/// Convenience overload for the common dimensionless case.
Params make_params(double epsilon, double tau_min, double tau_max, double step = 1e-3,
                   double quad_tol = 1e-11, double ode_tol = 1e-9);

/// Uniform grid on [tau_min, 0] and on [0, tau_max], each side with the
/// largest spacing <= step that divides it evenly. tau = 0 is always a
/// node and symmetric windows give grids that are exact mirror images.
std::vector<double> make_grid(const Params& p);

/// Index of the tau = 0 node in make_grid(p).
std::size_t zero_index(const Params& p);

// JSON config: {"epsilon": x | {"alpha": x, "omega": y}, "tau_min", "tau_max",
// "step", "quad_tol", "ode_tol"}. Missing numeric keys take their defaults,
// unknown keys are rejected.
ParamsInput params_input_from_json(const std::string& text);
Params params_from_json(const std::string& text);
std::string params_to_json(const Params& p);

}  // namespace lzlab
