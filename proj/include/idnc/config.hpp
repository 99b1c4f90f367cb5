#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "idnc/sim.hpp"
#include "idnc/strategies.hpp"

namespace idnc {

enum class Mode { kDensity, kDelay, kGoodput, kVerify };

std::string_view to_string(Mode mode);

/// How the receivers and packets lists combine into experiment points.
enum class SweepShape {
  kGrid,  // every (M, N) combination
  kZip,   // element-wise pairs; lists must have equal length
};

struct ExperimentSpec {
  Mode mode = Mode::kDensity;
  std::vector<int> receivers{50};
  std::vector<int> packets{20};
  SweepShape sweep = SweepShape::kGrid;
  double erasure_lo = 0.01;
  double erasure_hi = 0.3;
  std::vector<double> worst_erasure;    // empty: use erasure_hi
  std::optional<double> erasure_mean;   // recentres the erasure range
  std::vector<StrategyKind> strategies{std::begin(kAllStrategies), std::end(kAllStrategies)};
  Solver solver = Solver::kGreedy;
  double bias = 1.0;
  std::size_t exact_limit = 60;
  int iterations = 100;
  std::uint64_t seed = 1;
  std::string out = ".";
  unsigned threads = 1;
  GoodputAggregation goodput = GoodputAggregation::kPerReceiver;
  bool audit = false;
  double verify_scale = 1.0;
};

/// Invalid or unknown setting; key() names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Sets one key from its textual value. Keys:
///   mode              density | delay | goodput | verify
///   receivers         comma list of M
///   packets           comma list of N
///   sweep             grid | zip
///   erasure_lo        lower end of the per-receiver erasure range
///   erasure_hi        upper end
///   worst_erasure     comma list; each value replaces erasure_hi in turn
///   erasure_mean      recentre the range on this mean
///   strategy          comma list of rnd, mc, mwc-r, mowps, wort, or "all"
///   solver            greedy | exact
///   bias_n            biasing exponent n
///   exact_limit       largest graph the exact solver accepts
///   iterations        frames per experiment point
///   seed              root seed
///   out               output directory
///   threads           worker threads per experiment
///   goodput_aggregation  per-receiver | pooled
///   audit             true | false
///   verify_scale      multiplies the verify-suite sample counts
void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value);

/// `key = value` lines; `#` starts a comment. Later lines override earlier ones.
ExperimentSpec parse_config(std::istream& in, ExperimentSpec spec = {});
ExperimentSpec parse_config_file(const std::string& path, ExperimentSpec spec = {});

/// Throws ConfigError on inconsistent settings.
void validate(const ExperimentSpec& spec);

}  // namespace idnc
