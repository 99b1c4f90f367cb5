#include "idnc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

#include "idnc/evolution.hpp"
#include "idnc/graph.hpp"

namespace idnc {

double FrameTrace::goodput(GoodputAggregation mode) const {
  if (useful.empty()) return 1.0;
  if (mode == GoodputAggregation::kPooled) {
    std::uint64_t u = 0, r = 0;
    for (std::size_t i = 0; i < useful.size(); ++i) {
      u += useful[i];
      r += received[i];
    }
    return r == 0 ? 1.0 : static_cast<double>(u) / static_cast<double>(r);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < useful.size(); ++i) {
    sum += received[i] == 0 ? 1.0
                            : static_cast<double>(useful[i]) / static_cast<double>(received[i]);
  }
  return sum / static_cast<double>(useful.size());
}

FrameTrace run_frame(const FrameConfig& frame, const StrategyConfig& strategy,
                     const RunOptions& options) {
  FeedbackState state = init_frame(frame);
  const int m = frame.num_receivers;

  FrameTrace trace;
  trace.useful.resize(m);
  trace.received.resize(m);
  for (ReceiverId i = 1; i <= m; ++i) {
    trace.initial_wants.push_back(state.wants_count(i));
    trace.useful[i - 1] = trace.received[i - 1] = state.has_count(i);
  }

  Rng channel(frame.rng_seed, StreamPurpose::kChannel);
  Rng chooser(frame.rng_seed, StreamPurpose::kStrategy);
  IdncGraph graph(state);
  trace.initial_density = coding_density(graph);

  while (!state.complete()) {
    if (trace.density_per_tx.size() >= options.max_transmissions) {
      throw std::runtime_error("recovery phase exceeded the transmission cap");
    }
    const TransmissionPlan plan = select_plan(strategy, graph, state, chooser);
    if (plan.empty()) throw std::logic_error("no clique selected for a nonempty graph");

    ReceptionOutcome outcome;
    for (ReceiverId i = 1; i <= m; ++i) {
      const bool heard = channel.bernoulli(frame.reception_probs[i - 1]);
      const bool targeted = plan.targets(i);
      if (targeted) outcome.received[i] = heard;
      if (heard) {
        ++trace.received[i - 1];
        if (targeted) ++trace.useful[i - 1];
      }
    }

    FeedbackState next = apply_transmission(state, plan, outcome);
    IdncGraph next_graph(next);
    if (options.audit) {
      const auto predicted = exact_evolution(state, plan, outcome).after;
      if (predicted != static_cast<std::int64_t>(next_graph.edge_count())) {
        throw std::logic_error("edge evolution audit failed: predicted " +
                               std::to_string(predicted) + ", counted " +
                               std::to_string(next_graph.edge_count()));
      }
    }
    trace.density_per_tx.push_back(coding_density(next_graph));
    trace.targeted_per_tx.push_back(plan.size());
    state = std::move(next);
    graph = std::move(next_graph);
  }
  trace.completion_delay = trace.density_per_tx.size();
  return trace;
}

FrameConfig frame_for_iteration(const ExperimentParams& params, std::size_t iteration) {
  FrameConfig frame;
  frame.num_receivers = params.num_receivers;
  frame.num_packets = params.num_packets;
  frame.rng_seed = derive_seed(params.seed, iteration);
  Rng erasures(frame.rng_seed, StreamPurpose::kErasureDraw);
  frame.reception_probs = params.channel.draw_reception_probs(params.num_receivers, erasures);
  return frame;
}

MeanCi mean_ci(const std::vector<double>& xs) {
  MeanCi out;
  if (xs.empty()) return out;
  double sum = 0.0;
  for (double x : xs) sum += x;
  out.mean = sum / static_cast<double>(xs.size());
  if (xs.size() < 2) return out;
  double ss = 0.0;
  for (double x : xs) ss += (x - out.mean) * (x - out.mean);
  const double sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  out.stderr_ = sd / std::sqrt(static_cast<double>(xs.size()));
  out.ci95 = 1.96 * out.stderr_;
  return out;
}

ExperimentResult aggregate(const std::vector<FrameTrace>& traces,
                           const ExperimentParams& params, const StrategyConfig& strategy) {
  ExperimentResult r;
  r.strategy = strategy;
  r.params = params;
  std::size_t longest = 0;
  for (const auto& t : traces) longest = std::max(longest, t.completion_delay);

  std::vector<std::vector<double>> by_index(longest + 1);
  for (const auto& t : traces) {
    by_index[0].push_back(t.initial_density);
    for (std::size_t k = 0; k < t.density_per_tx.size(); ++k) {
      by_index[k + 1].push_back(t.density_per_tx[k]);
    }
    r.delays.push_back(static_cast<double>(t.completion_delay));
    r.goodputs.push_back(t.goodput(params.goodput));
  }
  for (const auto& column : by_index) {
    const auto s = mean_ci(column);
    r.mean_density.push_back(s.mean);
    r.density_stderr.push_back(s.stderr_);
    r.survivors.push_back(column.size());
  }
  const auto d = mean_ci(r.delays);
  const auto g = mean_ci(r.goodputs);
  r.mean_delay = d.mean;
  r.delay_ci95 = d.ci95;
  r.mean_goodput = g.mean;
  r.goodput_ci95 = g.ci95;
  return r;
}

ExperimentResult run_experiment(const ExperimentParams& params, const StrategyConfig& strategy) {
  if (params.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  params.channel.validate();
  const std::size_t n = static_cast<std::size_t>(params.iterations);
  std::vector<FrameTrace> traces(n);

  const unsigned workers = std::max(1U, std::min<unsigned>(params.threads, n));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t t = w; t < n; t += workers) {
        traces[t] = run_frame(frame_for_iteration(params, t), strategy, params.run);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return aggregate(traces, params, strategy);
}

PairedDifference paired_difference(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("paired samples differ in length");
  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  const auto s = mean_ci(diff);
  return {s.mean, s.ci95, diff.size()};
}

const ExperimentResult& Comparison::at(StrategyKind kind) const {
  for (const auto& r : results) {
    if (r.strategy.kind == kind) return r;
  }
  throw std::out_of_range("strategy not part of the comparison");
}

PairedDifference Comparison::delay_difference(StrategyKind a, StrategyKind b) const {
  return paired_difference(at(a).delays, at(b).delays);
}

PairedDifference Comparison::goodput_difference(StrategyKind a, StrategyKind b) const {
  return paired_difference(at(a).goodputs, at(b).goodputs);
}

Comparison compare_strategies(const ExperimentParams& params,
                              const std::vector<StrategyConfig>& strategies) {
  Comparison c;
  for (const auto& s : strategies) c.results.push_back(run_experiment(params, s));
  return c;
}

}  // namespace idnc
