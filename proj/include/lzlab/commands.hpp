#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lzlab/output.hpp"
#include "lzlab/params.hpp"

namespace lzlab::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kConfigError = 2, kNumericFailure = 3 };

/// Everything a command needs besides its own arguments.
struct Settings {
  std::optional<std::string> config_path;
  std::optional<double> epsilon, alpha, omega;
  std::vector<double> window;  // empty or {lo, hi}
  std::optional<double> step, ode_tol, quad_tol;
  std::string out_dir = ".";
  output::Format format = output::Format::csv;
};

/// Config file first, then any flags on top of it. Throws ConfigError.
Params resolve_params(const Settings& s);

/// Output directory after applying the LZLAB_OUT override.
std::filesystem::path resolve_out_dir(const Settings& s);

// Each returns an ExitCode; errors propagate as exceptions.
int cmd_simulate(const Settings& s, const std::string& initial);
int cmd_markov(const Settings& s);
int cmd_figures(const Settings& s, const std::string& which);
int cmd_check(const Settings& s);

/// Full command line: parses, dispatches and maps exceptions to exit codes,
/// with diagnostics on stderr.
int run(int argc, const char* const* argv);

}  // namespace lzlab::cli
