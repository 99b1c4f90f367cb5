#include "idnc/csv.hpp"

#include <cstdio>
#include <ostream>

namespace idnc {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.8f", value);
  return buf;
}

void write_trajectory_csv(std::ostream& out, const ExperimentResult& result) {
  out << "tx_index,mean_density,n_survivors\n";
  for (std::size_t t = 0; t < result.mean_density.size(); ++t) {
    out << t << ',' << format_number(result.mean_density[t]) << ',' << result.survivors[t]
        << '\n';
  }
}

namespace {

double ci_of(const ExperimentResult& r, SummaryMetric metric) {
  return metric == SummaryMetric::kDelay ? r.delay_ci95 : r.goodput_ci95;
}

}  // namespace

void write_summary_csv(std::ostream& out, const std::vector<ExperimentResult>& results,
                       SummaryMetric metric) {
  out << "strategy,mean_delay,mean_goodput,ci95\n";
  for (const auto& r : results) {
    out << r.strategy.label() << ',' << format_number(r.mean_delay) << ','
        << format_number(r.mean_goodput) << ',' << format_number(ci_of(r, metric)) << '\n';
  }
}

void write_sweep_header(std::ostream& out) {
  out << "receivers,packets,worst_erasure,strategy,mean_delay,mean_goodput,ci95\n";
}

void write_sweep_rows(std::ostream& out, const std::vector<ExperimentResult>& results,
                      SummaryMetric metric) {
  for (const auto& r : results) {
    const auto& p = r.params;
    out << p.num_receivers << ',' << p.num_packets << ','
        << (p.channel.worst_erasure ? format_number(*p.channel.worst_erasure) : "")
        << ',' << r.strategy.label() << ',' << format_number(r.mean_delay) << ','
        << format_number(r.mean_goodput) << ',' << format_number(ci_of(r, metric)) << '\n';
  }
}

}  // namespace idnc
