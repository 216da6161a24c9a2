#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeno/protocols.hpp"
#include "zeno/spectral.hpp"

namespace zeno {

/// Input problems that should surface as exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parsed command-line / config-file state. Optional fields distinguish
/// "user set this" from "use the command's default".
struct RunConfig {
  std::optional<DistKind> dist;
  std::optional<double> omega_m;
  double gamma = 1.0;
  double g = 0.001;
  double cutoff_factor = 100.0;
  std::vector<Method> methods;
  std::optional<double> tau;
  std::optional<long> n_pulses;
  std::optional<double> time;
  Route route = Route::quadrature;
  long ensemble_size = 100000;
  double quad_rtol = 1e-8;
  std::string out_path;  // empty = stdout
  std::string svg_path;  // empty = no chart
  unsigned threads = 0;  // 0 = hardware parallelism
};

struct SweepSpec {
  enum class Axis { tau, n, t };
  Axis axis = Axis::tau;
  double start = 0.0;
  double stop = 0.0;
  long points = 0;
  bool log_spaced = false;
};

/// Parses "axis:start:stop:points[:log]"; throws UsageError on bad input.
SweepSpec parse_sweep_spec(const std::string& text);

/// Subcommand entry points; each returns the process exit code.
int cmd_figure(int fig_id, const RunConfig& cfg);
int cmd_sweep(const RunConfig& cfg, const SweepSpec& spec);
int cmd_check_asymptotics(const RunConfig& cfg);

/// Default grids of the figure commands, shared with the regression suite.
std::vector<long> figure1_n_grid();
std::vector<double> figure2_tau_grid();
std::vector<long> figure3_n_grid();
std::vector<long> figure4_n_grid();

}  // namespace zeno
