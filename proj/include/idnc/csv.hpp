#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "idnc/sim.hpp"

namespace idnc {

/// Fixed-point rendering used for every CSV cell, so reruns diff cleanly.
std::string format_number(double value);

/// Columns: tx_index,mean_density,n_survivors. One row per transmission
/// index, starting at 0 (the graph after the uncoded phase).
void write_trajectory_csv(std::ostream& out, const ExperimentResult& result);

enum class SummaryMetric { kDelay, kGoodput };

/// Columns: strategy,mean_delay,mean_goodput,ci95. ci95 is the half-width of
/// the 95% interval of the chosen metric.
void write_summary_csv(std::ostream& out, const std::vector<ExperimentResult>& results,
                       SummaryMetric metric);

/// Columns: receivers,packets,worst_erasure,strategy,mean_delay,mean_goodput,ci95.
void write_sweep_header(std::ostream& out);
void write_sweep_rows(std::ostream& out, const std::vector<ExperimentResult>& results,
                      SummaryMetric metric);

}  // namespace idnc
