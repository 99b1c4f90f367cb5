#include "idnc/runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "idnc/csv.hpp"
#include "idnc/verify.hpp"

namespace idnc {

namespace {

std::string point_tag(const ExperimentPoint& p) {
  std::string tag = "M" + std::to_string(p.receivers) + "_N" + std::to_string(p.packets);
  if (p.worst_erasure) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "_ew%g", *p.worst_erasure);
    tag += buf;
  }
  return tag;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << contents;
  out.close();
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::filesystem::path prepare_output(const std::string& dir) {
  std::filesystem::path path(dir);
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec || !std::filesystem::is_directory(path)) {
    throw std::runtime_error("output directory '" + dir + "' is not usable");
  }
  return path;
}

int run_verify(const ExperimentSpec& spec, std::ostream& log) {
  verify::VerifyOptions options;
  options.scale = spec.verify_scale;
  options.seed = spec.seed;
  int failed = 0;
  for (const auto& report : verify::run_all(options)) {
    verify::print_report(log, report);
    if (!report.passed()) ++failed;
  }
  log << (failed == 0 ? "all suites passed" : std::to_string(failed) + " suite(s) failed")
      << '\n';
  return failed == 0 ? 0 : 1;
}

}  // namespace

std::vector<ExperimentPoint> expand_points(const ExperimentSpec& spec) {
  std::vector<std::pair<int, int>> sizes;
  if (spec.sweep == SweepShape::kZip) {
    for (std::size_t k = 0; k < spec.receivers.size(); ++k) {
      sizes.emplace_back(spec.receivers[k], spec.packets[k]);
    }
  } else {
    for (int m : spec.receivers) {
      for (int n : spec.packets) sizes.emplace_back(m, n);
    }
  }
  std::vector<ExperimentPoint> points;
  for (const auto& [m, n] : sizes) {
    if (spec.worst_erasure.empty()) {
      points.push_back({m, n, std::nullopt});
    } else {
      for (double w : spec.worst_erasure) points.push_back({m, n, w});
    }
  }
  return points;
}

ExperimentParams params_for(const ExperimentSpec& spec, const ExperimentPoint& point) {
  ExperimentParams p;
  p.channel = ChannelConfig{spec.erasure_lo, spec.erasure_hi, point.worst_erasure,
                            spec.erasure_mean};
  p.num_receivers = point.receivers;
  p.num_packets = point.packets;
  p.iterations = spec.iterations;
  p.seed = spec.seed;
  p.goodput = spec.goodput;
  p.threads = spec.threads;
  p.run.audit = spec.audit;
  return p;
}

std::vector<StrategyConfig> strategy_configs(const ExperimentSpec& spec) {
  std::vector<StrategyConfig> out;
  for (auto kind : spec.strategies) {
    out.push_back({kind, spec.solver, spec.bias, spec.exact_limit});
  }
  return out;
}

std::string trajectory_filename(const ExperimentPoint& point, const std::string& label) {
  return "density_" + point_tag(point) + "_" + label + ".csv";
}

std::string summary_filename(const ExperimentPoint& point) {
  return "summary_" + point_tag(point) + ".csv";
}

std::string sweep_filename(Mode mode) { return "sweep_" + std::string(to_string(mode)) + ".csv"; }

int run(const ExperimentSpec& spec, std::ostream& log) {
  validate(spec);
  if (spec.mode == Mode::kVerify) return run_verify(spec, log);

  const auto dir = prepare_output(spec.out);
  const auto strategies = strategy_configs(spec);
  const auto metric = spec.mode == Mode::kGoodput ? SummaryMetric::kGoodput : SummaryMetric::kDelay;
  std::ostringstream sweep;
  write_sweep_header(sweep);

  for (const auto& point : expand_points(spec)) {
    const auto params = params_for(spec, point);
    const auto comparison = compare_strategies(params, strategies);
    for (const auto& r : comparison.results) {
      log << to_string(spec.mode) << ' ' << point_tag(point) << ' ' << r.strategy.label()
          << ": delay " << format_number(r.mean_delay) << ", goodput "
          << format_number(r.mean_goodput) << '\n';
    }
    if (spec.mode == Mode::kDensity) {
      for (const auto& r : comparison.results) {
        std::ostringstream csv;
        write_trajectory_csv(csv, r);
        write_file(dir / trajectory_filename(point, r.strategy.label()), csv.str());
      }
      std::ostringstream summary;
      write_summary_csv(summary, comparison.results, metric);
      write_file(dir / summary_filename(point), summary.str());
    } else {
      write_sweep_rows(sweep, comparison.results, metric);
    }
  }
  if (spec.mode != Mode::kDensity) write_file(dir / sweep_filename(spec.mode), sweep.str());
  return 0;
}

}  // namespace idnc
