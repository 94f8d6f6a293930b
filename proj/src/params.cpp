#include "lzlab/params.hpp"

#include <cmath>
#include <json.hpp>

namespace lzlab {

namespace {

using nlohmann::ordered_json;

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw ConfigError(std::string(name) + " must be finite");
}

// Number of intervals of width <= step covering a side of length `len`.
std::size_t intervals(double len, double step) {
  // slack keeps exact multiples (20 / 1e-3) from rounding up to an extra node
  return static_cast<std::size_t>(std::ceil(len / step * (1.0 - 1e-12)));
}

}  // namespace

Params make_params(const ParamsInput& in) {
  Params p;
  const bool have_pair = in.alpha.has_value() || in.omega.has_value();
  if (in.epsilon && have_pair) throw ConfigError("give either epsilon or alpha/omega, not both");
  if (in.epsilon) {
    require_finite(*in.epsilon, "epsilon");
    if (*in.epsilon <= 0) throw ConfigError("epsilon must be positive");
    p.epsilon = *in.epsilon;
  } else if (have_pair) {
    if (!in.alpha || !in.omega) throw ConfigError("alpha and omega must be given together");
    require_finite(*in.alpha, "alpha");
    require_finite(*in.omega, "omega");
    if (*in.alpha <= 0) throw ConfigError("alpha must be positive");
    if (*in.omega <= 0) throw ConfigError("omega must be positive");
    p.epsilon = *in.alpha / (*in.omega * *in.omega);
    p.chirp_coupling = ChirpCoupling{*in.alpha, *in.omega};
  } else {
    throw ConfigError("epsilon (or alpha and omega) is required");
  }

  for (auto [v, name] : {std::pair{in.tau_min, "tau_min"}, {in.tau_max, "tau_max"},
                         {in.step, "step"}, {in.quad_tol, "quad_tol"}, {in.ode_tol, "ode_tol"}})
    require_finite(v, name);
  if (!(in.tau_min < 0.0)) throw ConfigError("tau_min must be negative");
  if (!(in.tau_max > 0.0)) throw ConfigError("tau_max must be positive");
  if (!(in.step > 0.0)) throw ConfigError("step must be positive");
  if (!(in.quad_tol > 0.0)) throw ConfigError("quad_tol must be positive");
  if (!(in.ode_tol > 0.0)) throw ConfigError("ode_tol must be positive");
  if (in.step > std::min(-in.tau_min, in.tau_max))
    throw ConfigError("step exceeds one side of the window");

  p.tau_min = in.tau_min;
  p.tau_max = in.tau_max;
  p.step = in.step;
  p.quad_tol = in.quad_tol;
  p.ode_tol = in.ode_tol;
  return p;
}

Params make_params(double epsilon, double tau_min, double tau_max, double step, double quad_tol,
                   double ode_tol) {
  ParamsInput in;
  in.epsilon = epsilon;
  in.tau_min = tau_min;
  in.tau_max = tau_max;
  in.step = step;
  in.quad_tol = quad_tol;
  in.ode_tol = ode_tol;
  return make_params(in);
}

std::vector<double> make_grid(const Params& p) {
  const std::size_t n_neg = intervals(-p.tau_min, p.step);
  const std::size_t n_pos = intervals(p.tau_max, p.step);
  std::vector<double> grid(n_neg + n_pos + 1);
  // tau_k = L * (k / n) on each side keeps mirror nodes bit-identical
  for (std::size_t k = 0; k < n_neg; ++k)
    grid[k] = p.tau_min * (static_cast<double>(n_neg - k) / static_cast<double>(n_neg));
  grid[n_neg] = 0.0;
  for (std::size_t k = 1; k <= n_pos; ++k)
    grid[n_neg + k] = p.tau_max * (static_cast<double>(k) / static_cast<double>(n_pos));
  return grid;
}

std::size_t zero_index(const Params& p) { return intervals(-p.tau_min, p.step); }

ParamsInput params_input_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("JSON config must be an object");

  ParamsInput in;
  auto number = [](const ordered_json& v, const std::string& key) {
    if (!v.is_number()) throw ConfigError("config key '" + key + "' must be a number");
    return v.get<double>();
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "epsilon") {
      if (value.is_object()) {
        for (const auto& [k2, v2] : value.items()) {
          if (k2 == "alpha")
            in.alpha = number(v2, "epsilon.alpha");
          else if (k2 == "omega")
            in.omega = number(v2, "epsilon.omega");
          else
            throw ConfigError("unknown config key 'epsilon." + k2 + "'");
        }
      } else {
        in.epsilon = number(value, key);
      }
    } else if (key == "tau_min") {
      in.tau_min = number(value, key);
    } else if (key == "tau_max") {
      in.tau_max = number(value, key);
    } else if (key == "step") {
      in.step = number(value, key);
    } else if (key == "quad_tol") {
      in.quad_tol = number(value, key);
    } else if (key == "ode_tol") {
      in.ode_tol = number(value, key);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  return in;
}

Params params_from_json(const std::string& text) { return make_params(params_input_from_json(text)); }

std::string params_to_json(const Params& p) {
  ordered_json j;
  if (p.chirp_coupling)
    j["epsilon"] = {{"alpha", p.chirp_coupling->alpha}, {"omega", p.chirp_coupling->omega}};
  else
    j["epsilon"] = p.epsilon;
  j["tau_min"] = p.tau_min;
  j["tau_max"] = p.tau_max;
  j["step"] = p.step;
  j["quad_tol"] = p.quad_tol;
  j["ode_tol"] = p.ode_tol;
  return j.dump(2);
}

}  // namespace lzlab
