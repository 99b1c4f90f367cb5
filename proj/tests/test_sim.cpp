#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "idnc/csv.hpp"
#include "idnc/sim.hpp"

using namespace idnc;

namespace {

FrameConfig frame(int m, int n, std::vector<double> q, std::uint64_t seed) {
  return FrameConfig{m, n, std::move(q), seed};
}

const StrategyConfig kWort{StrategyKind::kWorstReceiver};

}  // namespace

TEST_CASE("perfect channel needs no recovery") {
  const auto t = run_frame(frame(5, 8, std::vector<double>(5, 1.0), 1), kWort);
  CHECK(t.completion_delay == 0);
  CHECK(t.density_per_tx.empty());
  CHECK(t.goodput() == 1.0);
}

TEST_CASE("single receiver: uncoded retransmissions with geometric delay") {
  const double q = 0.6;
  const int n = 10;
  double delay = 0.0, expected = 0.0;
  const int frames = 20'000;
  for (int s = 0; s < frames; ++s) {
    const auto t = run_frame(frame(1, n, {q}, s), kWort);
    for (auto k : t.targeted_per_tx) CHECK(k == 1);
    CHECK(t.goodput() == 1.0);
    delay += static_cast<double>(t.completion_delay);
    expected += t.initial_wants[0] / q;
  }
  CHECK(delay / frames == doctest::Approx(expected / frames).epsilon(0.02));
  CHECK(delay / frames == doctest::Approx(n * (1 - q) / q).epsilon(0.02));
}

TEST_CASE("frames are deterministic and internally consistent") {
  const auto f = frame(12, 10, std::vector<double>(12, 0.7), 99);
  for (auto kind : kAllStrategies) {
    const StrategyConfig cfg{kind};
    RunOptions audit;
    audit.audit = true;
    const auto a = run_frame(f, cfg, audit);
    const auto b = run_frame(f, cfg);
    CHECK(a.density_per_tx == b.density_per_tx);
    CHECK(a.useful == b.useful);
    CHECK(a.completion_delay == a.density_per_tx.size());
    const int worst = *std::max_element(a.initial_wants.begin(), a.initial_wants.end());
    CHECK(a.completion_delay >= static_cast<std::size_t>(worst));
    for (std::size_t i = 0; i < a.useful.size(); ++i) CHECK(a.useful[i] <= a.received[i]);
    for (double d : a.density_per_tx) {
      CHECK(d >= 0.0);
      CHECK(d <= 1.0);
    }
    for (auto mode : {GoodputAggregation::kPerReceiver, GoodputAggregation::kPooled}) {
      CHECK(a.goodput(mode) > 0.0);
      CHECK(a.goodput(mode) <= 1.0);
    }
  }
}

TEST_CASE("transmission cap guards the loop") {
  RunOptions cap;
  cap.max_transmissions = 1;
  CHECK_THROWS_AS(run_frame(frame(4, 10, std::vector<double>(4, 0.3), 5), kWort, cap),
                  std::runtime_error);
}

TEST_CASE("one iteration reproduces the frame statistics") {
  ExperimentParams p;
  p.num_receivers = 8;
  p.num_packets = 6;
  p.iterations = 1;
  p.seed = 17;
  const auto r = run_experiment(p, kWort);
  const auto t = run_frame(frame_for_iteration(p, 0), kWort);
  CHECK(r.mean_delay == static_cast<double>(t.completion_delay));
  CHECK(r.mean_goodput == t.goodput());
  CHECK(r.delay_ci95 == 0.0);
  REQUIRE(r.mean_density.size() == t.completion_delay + 1);
  CHECK(r.mean_density[0] == t.initial_density);
  for (std::size_t k = 0; k < t.completion_delay; ++k) {
    CHECK(r.mean_density[k + 1] == t.density_per_tx[k]);
    CHECK(r.survivors[k + 1] == 1);
  }
}

TEST_CASE("survivor averaging") {
  FrameTrace a, b;
  a.initial_density = 0.5;
  a.density_per_tx = {0.6, 0.7};
  a.completion_delay = 2;
  b.initial_density = 0.3;
  b.density_per_tx = {0.2};
  b.completion_delay = 1;
  const auto r = aggregate({a, b}, ExperimentParams{}, kWort);
  REQUIRE(r.mean_density.size() == 3);
  CHECK(r.mean_density[0] == doctest::Approx(0.4));
  CHECK(r.mean_density[1] == doctest::Approx(0.4));
  CHECK(r.mean_density[2] == doctest::Approx(0.7));
  CHECK(r.survivors == std::vector<std::size_t>{2, 2, 1});
  CHECK(r.mean_delay == doctest::Approx(1.5));
}

TEST_CASE("goodput aggregation modes") {
  FrameTrace t;
  t.useful = {1, 9};
  t.received = {2, 10};
  CHECK(t.goodput(GoodputAggregation::kPerReceiver) == doctest::Approx(0.7));
  CHECK(t.goodput(GoodputAggregation::kPooled) == doctest::Approx(10.0 / 12.0));
}

TEST_CASE("paired comparison shares the channel") {
  ExperimentParams p;
  p.num_receivers = 10;
  p.num_packets = 8;
  p.iterations = 30;
  p.seed = 5;
  const auto c = compare_strategies(p, {kWort, kWort, StrategyConfig{StrategyKind::kRandom}});
  CHECK(c.results[0].delays == c.results[1].delays);
  CHECK(c.results[0].mean_density == c.results[1].mean_density);
  const auto same = paired_difference(c.results[0].delays, c.results[1].delays);
  CHECK(same.mean == 0.0);
  CHECK(same.ci95 == 0.0);
  CHECK(frame_for_iteration(p, 3).reception_probs == frame_for_iteration(p, 3).reception_probs);
  CHECK(frame_for_iteration(p, 3).rng_seed != frame_for_iteration(p, 4).rng_seed);
  CHECK_THROWS_AS(paired_difference({1.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("threaded runs match sequential runs") {
  ExperimentParams p;
  p.num_receivers = 10;
  p.num_packets = 8;
  p.iterations = 25;
  const auto one = run_experiment(p, kWort);
  p.threads = 3;
  const auto three = run_experiment(p, kWort);
  CHECK(one.delays == three.delays);
  CHECK(one.mean_density == three.mean_density);
  CHECK(one.goodputs == three.goodputs);
}

TEST_CASE("mean and confidence interval") {
  const auto s = mean_ci({1.0, 2.0, 3.0, 4.0});
  CHECK(s.mean == doctest::Approx(2.5));
  CHECK(s.stderr_ == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));
  CHECK(s.ci95 == doctest::Approx(1.96 * s.stderr_));
}

TEST_CASE("csv layout") {
  ExperimentParams p;
  p.num_receivers = 6;
  p.num_packets = 4;
  p.iterations = 5;
  const auto r = run_experiment(p, kWort);
  std::ostringstream traj;
  write_trajectory_csv(traj, r);
  std::istringstream lines(traj.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "tx_index,mean_density,n_survivors");
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == r.mean_density.size());

  std::ostringstream summary;
  write_summary_csv(summary, {r}, SummaryMetric::kDelay);
  CHECK(summary.str().rfind("strategy,mean_delay,mean_goodput,ci95\nwort-greedy,", 0) == 0);

  std::ostringstream sweep;
  write_sweep_header(sweep);
  write_sweep_rows(sweep, {r}, SummaryMetric::kGoodput);
  CHECK(sweep.str().rfind(
            "receivers,packets,worst_erasure,strategy,mean_delay,mean_goodput,ci95\n6,4,,", 0) ==
        0);
  CHECK(format_number(0.5) == "0.50000000");
}
