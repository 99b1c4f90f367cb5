#pragma once

#include <cstdint>
#include <vector>

#include "idnc/state.hpp"
#include "idnc/strategies.hpp"

namespace idnc {

/// How per-receiver goodput ratios are combined within a frame.
enum class GoodputAggregation {
  kPerReceiver,  // mean of useful_i / received_i
  kPooled,       // sum useful / sum received
};

struct RunOptions {
  /// Cross-check the closed-form edge evolution after every transmission and
  /// throw std::logic_error on a mismatch.
  bool audit = false;
  std::size_t max_transmissions = 1'000'000;
};

struct FrameTrace {
  double initial_density = 1.0;       // graph right after the uncoded phase
  std::vector<double> density_per_tx; // entry t-1: density after recovery transmission t
  std::vector<std::size_t> targeted_per_tx;
  std::size_t completion_delay = 0;
  std::vector<int> initial_wants;     // psi_i after the uncoded phase
  std::vector<std::uint64_t> useful;  // per receiver, both phases
  std::vector<std::uint64_t> received;

  double goodput(GoodputAggregation mode = GoodputAggregation::kPerReceiver) const;
};

/// One frame: uncoded phase, then coded recovery transmissions until every
/// Wants set is empty. Every receiver hears every transmission independently;
/// only targeted receivers can decode, so other receptions are not useful.
FrameTrace run_frame(const FrameConfig& frame, const StrategyConfig& strategy,
                     const RunOptions& options = {});

struct ExperimentParams {
  ChannelConfig channel;
  int num_receivers = 50;
  int num_packets = 20;
  int iterations = 100;
  std::uint64_t seed = 1;
  GoodputAggregation goodput = GoodputAggregation::kPerReceiver;
  unsigned threads = 1;
  RunOptions run;
};

/// Frame of iteration `t`: erasures and all sub-streams derive from (seed, t)
/// alone, so every strategy sees the same channel for the same iteration.
FrameConfig frame_for_iteration(const ExperimentParams& params, std::size_t iteration);

struct ExperimentResult {
  StrategyConfig strategy;
  ExperimentParams params;
  /// Index 0 is the post-uncoded-phase graph; index t >= 1 averages the
  /// iterations whose recovery phase lasted at least t transmissions.
  std::vector<double> mean_density;
  std::vector<double> density_stderr;
  std::vector<std::size_t> survivors;
  double mean_delay = 0.0;
  double delay_ci95 = 0.0;
  double mean_goodput = 0.0;
  double goodput_ci95 = 0.0;
  std::vector<double> delays;    // per iteration
  std::vector<double> goodputs;  // per iteration
};

ExperimentResult run_experiment(const ExperimentParams& params, const StrategyConfig& strategy);

/// Aggregates already-computed traces in iteration order.
ExperimentResult aggregate(const std::vector<FrameTrace>& traces,
                           const ExperimentParams& params, const StrategyConfig& strategy);

struct PairedDifference {
  double mean = 0.0;  // mean of (a - b) over iterations
  double ci95 = 0.0;  // half-width, normal approximation
  std::size_t n = 0;
};

PairedDifference paired_difference(const std::vector<double>& a, const std::vector<double>& b);

struct Comparison {
  std::vector<ExperimentResult> results;

  const ExperimentResult& at(StrategyKind kind) const;
  PairedDifference delay_difference(StrategyKind a, StrategyKind b) const;
  PairedDifference goodput_difference(StrategyKind a, StrategyKind b) const;
};

/// Runs each strategy over the same iterations (common random numbers).
Comparison compare_strategies(const ExperimentParams& params,
                              const std::vector<StrategyConfig>& strategies);

struct MeanCi {
  double mean = 0.0;
  double ci95 = 0.0;
  double stderr_ = 0.0;
};
MeanCi mean_ci(const std::vector<double>& xs);

}  // namespace idnc
