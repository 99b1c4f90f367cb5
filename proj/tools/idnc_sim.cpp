// idnc_sim: run IDNC experiments or the formula self-checks.

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "idnc/config.hpp"
#include "idnc/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Instantly decodable network coding simulator"};

  std::string config_path;
  app.add_option("--config", config_path, "key = value settings file (flags override it)");

  struct Flag {
    const char* name;
    const char* key;
    const char* help;
    std::string value;
  };
  std::vector<Flag> flags{
      {"--mode", "mode", "density | delay | goodput | verify", {}},
      {"--receivers", "receivers", "M, or a comma list", {}},
      {"--packets", "packets", "N, or a comma list", {}},
      {"--sweep", "sweep", "grid | zip", {}},
      {"--erasure-lo", "erasure_lo", "lowest per-receiver erasure probability", {}},
      {"--erasure-hi", "erasure_hi", "highest per-receiver erasure probability", {}},
      {"--worst-erasure", "worst_erasure", "worst-receiver erasure, or a comma list", {}},
      {"--erasure-mean", "erasure_mean", "recentre the erasure range on this mean", {}},
      {"--strategy", "strategy", "rnd, mc, mwc-r, mowps, wort (comma list) or all", {}},
      {"--solver", "solver", "greedy | exact", {}},
      {"--bias-n", "bias_n", "biasing exponent n", {}},
      {"--exact-limit", "exact_limit", "largest graph for the exact solver", {}},
      {"--iterations", "iterations", "frames per experiment point", {}},
      {"--seed", "seed", "root seed", {}},
      {"--out", "out", "output directory", {}},
      {"--threads", "threads", "worker threads", {}},
      {"--goodput-aggregation", "goodput_aggregation", "per-receiver | pooled", {}},
      {"--audit", "audit", "check edge evolution after every transmission", {}},
      {"--verify-scale", "verify_scale", "scale verify-suite sample counts", {}},
  };
  std::vector<CLI::Option*> options;
  for (auto& f : flags) options.push_back(app.add_option(f.name, f.value, f.help));

  CLI11_PARSE(app, argc, argv);

  try {
    idnc::ExperimentSpec spec;
    if (!config_path.empty()) spec = idnc::parse_config_file(config_path);
    for (std::size_t k = 0; k < flags.size(); ++k) {
      if (options[k]->count() > 0) idnc::apply_setting(spec, flags[k].key, flags[k].value);
    }
    return idnc::run(spec, std::cout);
  } catch (const idnc::ConfigError& e) {
    std::cerr << "idnc_sim: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "idnc_sim: " << e.what() << '\n';
    return 3;
  }
}
