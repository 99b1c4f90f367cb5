#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "idnc/config.hpp"
#include "idnc/runner.hpp"
#include "idnc/sim.hpp"
#include "idnc/verify.hpp"

using namespace idnc;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::string reports(std::initializer_list<verify::SuiteReport> rs) {
  std::ostringstream out;
  for (const auto& r : rs) verify::print_report(out, r);
  return out.str();
}

bool all_passed(std::initializer_list<verify::SuiteReport> rs) {
  for (const auto& r : rs) {
    if (!r.passed()) return false;
  }
  return true;
}

Outcome suites(std::initializer_list<verify::SuiteReport> rs, std::string summary) {
  return {all_passed(rs), std::move(summary), reports(rs)};
}

Outcome criterion1() {
  return suites({verify::edge_formula_suite(10'000, 8, 8)},
                "edge-count formula equals brute force, >= 1e4 states, M,N <= 8");
}

Outcome criterion2() {
  return suites({verify::evolution_suite(1'000, 6, 6)},
                "edge evolution equals recount for every maximal clique and outcome");
}

Outcome criterion3() {
  return suites({verify::dominance_suite(5)},
                "common-wanted targeting never loses pairwise edges, N <= 5");
}

Outcome criterion4() {
  return suites({verify::expectation_monte_carlo_suite(20, 100'000, 6, 12, 0.01),
                 verify::expectation_exhaustive_suite(3, 8, 1e-9)},
                "expected degree/edges within 1% of Monte Carlo; exhaustive to 1e-9");
}

Outcome criterion5() {
  auto conditioned = verify::evolution_monte_carlo_suite(
      8, 1'000'000, 4, 10, 0.05, 15, verify::TargetSampling::kConditionedClique);
  auto independent = verify::evolution_monte_carlo_suite(
      8, 1'000'000, 4, 10, 0.05, 15, verify::TargetSampling::kIndependent);
  Outcome o{conditioned.passed(),
            "expected evolution within 5% of the clique-conditioned rejection oracle",
            reports({conditioned})};
  o.detail += "  reference, targets drawn independently per receiver (not scored):\n" +
              reports({independent});
  return o;
}

Outcome criterion6() {
  return suites({verify::degree_ordering_suite(10'000, 10, 20),
                 verify::targeting_gain_suite(10'000, 10, 20)},
                "degree ordering and targeting gain, 1e4 instances each");
}

Outcome criterion7() {
  return suites({verify::exact_solver_suite(500, 14)},
                "exact solver equals subset enumeration; greedy never exceeds it");
}

double combined_se(const ExperimentResult& r, std::size_t a, std::size_t b) {
  return std::sqrt(r.density_stderr[a] * r.density_stderr[a] +
                   r.density_stderr[b] * r.density_stderr[b]);
}

std::size_t midpoint(const ExperimentResult& r) {
  return static_cast<std::size_t>(std::lround(r.mean_delay / 2.0));
}

Outcome criterion8() {
  ExperimentParams p;
  p.num_receivers = 50;
  p.num_packets = 20;
  p.iterations = 500;
  p.seed = 1;
  const auto wort = run_experiment(p, StrategyConfig{StrategyKind::kWorstReceiver});
  const auto mc = run_experiment(p, StrategyConfig{StrategyKind::kMaxClique});
  const auto mowps = run_experiment(p, StrategyConfig{StrategyKind::kMostWantedPacket});
  std::ostringstream d;
  bool ok = true;

  // (a)
  double worst_drop = 0.0;
  std::size_t worst_at = 0;
  for (std::size_t t = 0; t + 1 < wort.mean_density.size(); ++t) {
    if (wort.survivors[t] < 2 || wort.survivors[t + 1] < 2) break;
    const double se = combined_se(wort, t, t + 1);
    const double drop = (wort.mean_density[t] - wort.mean_density[t + 1]) / se;
    if (drop > worst_drop) {
      worst_drop = drop;
      worst_at = t;
    }
  }
  const bool a = worst_drop <= 2.0;
  d << fmt("  (a) %s wort largest drop %.2f SE at %zu -> %zu\n", a ? "ok" : "FAIL", worst_drop,
           worst_at, worst_at + 1);
  ok &= a;

  // (b)
  for (std::size_t mid : {midpoint(wort), midpoint(mc)}) {
    const bool in_range = mid < wort.mean_density.size() && mid < mc.mean_density.size();
    const bool b = in_range && mc.mean_density[mid] <= 0.95 * wort.mean_density[mid];
    d << fmt("  (b) %s index %zu: mc %.4f, wort %.4f\n", b ? "ok" : "FAIL", mid,
             in_range ? mc.mean_density[mid] : NAN, in_range ? wort.mean_density[mid] : NAN);
    ok &= b;
  }

  // (c)
  const std::size_t mid = midpoint(mowps);
  bool c = mid >= 2 && mid < mowps.mean_density.size();
  if (c) {
    std::size_t peak = 1;
    for (std::size_t t = 1; t <= mid; ++t) {
      if (mowps.mean_density[t] > mowps.mean_density[peak]) peak = t;
    }
    const bool rises = mowps.mean_density[peak] > mowps.mean_density[0] + 2.0 * combined_se(mowps, 0, peak);
    const bool falls = mowps.mean_density[mid] < mowps.mean_density[peak] - 2.0 * combined_se(mowps, peak, mid);
    c = rises && falls && peak < mid;
    d << fmt("  (c) %s mowps start %.4f, peak %.4f at %zu, %.4f at midpoint %zu\n",
             c ? "ok" : "FAIL", mowps.mean_density[0], mowps.mean_density[peak], peak,
             mowps.mean_density[mid], mid);
  } else {
    d << "  (c) FAIL mowps recovery phase too short\n";
  }
  ok &= c;
  d << fmt("  mean delay: wort %.2f, mc %.2f, mowps %.2f\n", wort.mean_delay, mc.mean_delay,
           mowps.mean_delay);
  return {ok, "density trend: wort flat-or-rising, mc below wort, mowps peaks then falls",
          d.str()};
}

Outcome criterion9() {
  std::vector<StrategyConfig> strategies;
  for (auto kind : kAllStrategies) strategies.push_back(StrategyConfig{kind});
  std::ostringstream d;
  bool ok = true;
  for (int m : {20, 30, 40}) {
    ExperimentParams p;
    p.num_receivers = m;
    p.num_packets = m;
    p.iterations = 500;
    p.channel.mean_override = 0.15;
    const auto cmp = compare_strategies(p, strategies);
    for (auto other : {StrategyKind::kMaxClique, StrategyKind::kRandom}) {
      const auto diff = cmp.delay_difference(StrategyKind::kWorstReceiver, other);
      const bool good = diff.mean + diff.ci95 < 0.0;
      d << fmt("  %s M=N=%d delay wort - %s = %.3f +- %.3f\n", good ? "ok" : "FAIL", m,
               std::string(to_string(other)).c_str(), diff.mean, diff.ci95);
      ok &= good;
    }
    for (auto other :
         {StrategyKind::kRandom, StrategyKind::kMaxClique, StrategyKind::kMostWantedPacket}) {
      const auto diff = cmp.goodput_difference(StrategyKind::kWorstReceiver, other);
      const bool good = diff.mean - diff.ci95 > 0.0;
      d << fmt("  %s M=N=%d goodput wort - %s = %.4f +- %.4f\n", good ? "ok" : "FAIL", m,
               std::string(to_string(other)).c_str(), diff.mean, diff.ci95);
      ok &= good;
    }
  }
  return {ok, "wort beats mc and rnd on delay and all baselines on goodput, paired 95% CI",
          d.str()};
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    files[entry.path().filename().string()] = s.str();
  }
  return files;
}

Outcome criterion10() {
  const auto root = fs::temp_directory_path() / "idnc_acceptance_determinism";
  fs::remove_all(root);
  std::ostringstream d;
  bool ok = true;
  auto check = [&](const std::string& name, ExperimentSpec spec) {
    std::ostringstream log;
    spec.out = (root / (name + "_a")).string();
    spec.threads = 1;
    run(spec, log);
    spec.out = (root / (name + "_b")).string();
    run(spec, log);
    spec.out = (root / (name + "_c")).string();
    spec.threads = 3;
    run(spec, log);
    const auto a = snapshot(root / (name + "_a"));
    const bool same = !a.empty() && a == snapshot(root / (name + "_b")) &&
                      a == snapshot(root / (name + "_c"));
    d << fmt("  %s %s: %zu files\n", same ? "ok" : "FAIL", name.c_str(), a.size());
    ok &= same;
  };
  ExperimentSpec density;
  density.receivers = {20};
  density.packets = {10};
  density.iterations = 30;
  density.seed = 5;
  check("density", density);
  ExperimentSpec delay = density;
  delay.mode = Mode::kDelay;
  delay.receivers = {8, 12};
  delay.packets = {8, 12};
  delay.sweep = SweepShape::kZip;
  delay.worst_erasure = {0.3, 0.5};
  check("delay", delay);
  ExperimentSpec goodput = delay;
  goodput.mode = Mode::kGoodput;
  goodput.goodput = GoodputAggregation::kPooled;
  check("goodput", goodput);
  ExperimentSpec exact = density;
  exact.receivers = {6};
  exact.packets = {6};
  exact.solver = Solver::kExact;
  check("exact", exact);
  fs::remove_all(root);
  return {ok, "identical seeds give byte-identical CSVs, across thread counts", d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> only;
  app.add_option("--only", only, "criterion numbers to run (default: all)")
      ->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  std::set<int> selected(only.begin(), only.end());
  if (selected.empty()) {
    for (int i = 1; i <= 10; ++i) selected.insert(i);
  }

  int failed = 0;
  for (int n : selected) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[n - 1]();
    } catch (const std::exception& e) {
      o = {false, "threw", std::string("  ") + e.what() + "\n"};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << o.summary
              << fmt(" (%.1fs)", secs) << "\n"
              << o.detail << std::flush;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
