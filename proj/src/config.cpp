#include "idnc/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>

namespace idnc {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kDensity: return "density";
    case Mode::kDelay: return "delay";
    case Mode::kGoodput: return "goodput";
    case Mode::kVerify: return "verify";
  }
  return "?";
}

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::runtime_error("config key '" + key + "': " + message), key_(std::move(key)) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (text.empty() || res.ec != std::errc() || res.ptr != end) {
    throw ConfigError(std::string(key), "expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

template <class T>
std::vector<T> parse_list(std::string_view key, std::string_view text) {
  std::vector<T> out;
  for (auto item : split_list(text)) out.push_back(parse_number<T>(key, item));
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(std::string(key), "expected true or false, got '" + std::string(v) + "'");
}

}  // namespace

void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view raw) {
  const auto value = trim(raw);
  const std::string k(key);
  if (value.empty()) throw ConfigError(k, "missing value");

  if (key == "mode") {
    if (value == "density") spec.mode = Mode::kDensity;
    else if (value == "delay") spec.mode = Mode::kDelay;
    else if (value == "goodput") spec.mode = Mode::kGoodput;
    else if (value == "verify") spec.mode = Mode::kVerify;
    else throw ConfigError(k, "unknown mode '" + std::string(value) + "'");
  } else if (key == "receivers") {
    spec.receivers = parse_list<int>(key, value);
  } else if (key == "packets") {
    spec.packets = parse_list<int>(key, value);
  } else if (key == "sweep") {
    if (value == "grid") spec.sweep = SweepShape::kGrid;
    else if (value == "zip") spec.sweep = SweepShape::kZip;
    else throw ConfigError(k, "expected grid or zip");
  } else if (key == "erasure_lo") {
    spec.erasure_lo = parse_number<double>(key, value);
  } else if (key == "erasure_hi") {
    spec.erasure_hi = parse_number<double>(key, value);
  } else if (key == "worst_erasure") {
    spec.worst_erasure = parse_list<double>(key, value);
  } else if (key == "erasure_mean") {
    spec.erasure_mean = parse_number<double>(key, value);
  } else if (key == "strategy") {
    spec.strategies.clear();
    for (auto name : split_list(value)) {
      if (name == "all") {
        spec.strategies.assign(std::begin(kAllStrategies), std::end(kAllStrategies));
        continue;
      }
      const auto kind = parse_strategy(name);
      if (!kind) throw ConfigError(k, "unknown strategy '" + std::string(name) + "'");
      spec.strategies.push_back(*kind);
    }
  } else if (key == "solver") {
    const auto solver = parse_solver(value);
    if (!solver) throw ConfigError(k, "unknown solver '" + std::string(value) + "'");
    spec.solver = *solver;
  } else if (key == "bias_n") {
    spec.bias = parse_number<double>(key, value);
  } else if (key == "exact_limit") {
    spec.exact_limit = parse_number<std::size_t>(key, value);
  } else if (key == "iterations") {
    spec.iterations = parse_number<int>(key, value);
  } else if (key == "seed") {
    spec.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "out") {
    spec.out = std::string(value);
  } else if (key == "threads") {
    spec.threads = parse_number<unsigned>(key, value);
  } else if (key == "goodput_aggregation") {
    if (value == "per-receiver") spec.goodput = GoodputAggregation::kPerReceiver;
    else if (value == "pooled") spec.goodput = GoodputAggregation::kPooled;
    else throw ConfigError(k, "expected per-receiver or pooled");
  } else if (key == "audit") {
    spec.audit = parse_bool(key, value);
  } else if (key == "verify_scale") {
    spec.verify_scale = parse_number<double>(key, value);
  } else {
    throw ConfigError(k, "unknown key");
  }
}

ExperimentSpec parse_config(std::istream& in, ExperimentSpec spec) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(std::string(view), "line " + std::to_string(number) +
                                               " is not of the form key = value");
    }
    const auto key = trim(view.substr(0, eq));
    if (key.empty()) {
      throw ConfigError("", "line " + std::to_string(number) + " has an empty key");
    }
    apply_setting(spec, key, view.substr(eq + 1));
  }
  return spec;
}

ExperimentSpec parse_config_file(const std::string& path, ExperimentSpec spec) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  return parse_config(in, std::move(spec));
}

void validate(const ExperimentSpec& spec) {
  if (spec.receivers.empty()) throw ConfigError("receivers", "list is empty");
  if (spec.packets.empty()) throw ConfigError("packets", "list is empty");
  for (int m : spec.receivers) {
    if (m < 1) throw ConfigError("receivers", "values must be >= 1");
  }
  for (int n : spec.packets) {
    if (n < 1) throw ConfigError("packets", "values must be >= 1");
  }
  if (spec.sweep == SweepShape::kZip && spec.receivers.size() != spec.packets.size()) {
    throw ConfigError("sweep", "zip needs receivers and packets lists of equal length");
  }
  if (spec.strategies.empty()) throw ConfigError("strategy", "list is empty");
  if (spec.iterations < 1) throw ConfigError("iterations", "must be >= 1");
  if (spec.threads < 1) throw ConfigError("threads", "must be >= 1");
  if (!(spec.bias > 0.0)) throw ConfigError("bias_n", "must be positive");
  if (!(spec.verify_scale > 0.0)) throw ConfigError("verify_scale", "must be positive");
  if (spec.out.empty()) throw ConfigError("out", "empty output path");

  ChannelConfig channel{spec.erasure_lo, spec.erasure_hi, std::nullopt, spec.erasure_mean};
  auto check_channel = [&](const char* key) {
    try {
      channel.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(key, e.what());
    }
  };
  check_channel("erasure_hi");
  for (double w : spec.worst_erasure) {
    channel.worst_erasure = w;
    check_channel("worst_erasure");
  }
}

}  // namespace idnc
