#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "idnc/config.hpp"
#include "idnc/sim.hpp"

namespace idnc {

struct ExperimentPoint {
  int receivers = 0;
  int packets = 0;
  std::optional<double> worst_erasure;
};

/// Sweep points in output order: (M, N) pairs outermost, worst erasure inner.
std::vector<ExperimentPoint> expand_points(const ExperimentSpec& spec);

ExperimentParams params_for(const ExperimentSpec& spec, const ExperimentPoint& point);
std::vector<StrategyConfig> strategy_configs(const ExperimentSpec& spec);

/// density_M{M}_N{N}[_ew{x}]_{label}.csv
std::string trajectory_filename(const ExperimentPoint& point, const std::string& label);
/// summary_M{M}_N{N}[_ew{x}].csv
std::string summary_filename(const ExperimentPoint& point);
/// sweep_{mode}.csv
std::string sweep_filename(Mode mode);

/// Runs the spec, writing CSVs under spec.out and progress to `log`.
/// Returns 0 on success and 1 when a verify suite fails; throws on invalid
/// specs (ConfigError) and I/O failures (std::runtime_error).
int run(const ExperimentSpec& spec, std::ostream& log);

}  // namespace idnc
