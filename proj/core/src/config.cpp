#include "doe/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace doe {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const auto res =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
    throw ConfigError("key '" + key + "': expected a non-negative integer, "
                      "got '" + value + "'");
  }
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  double out = 0.0;
  const auto res =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc() || res.ptr != value.data() + value.size()) {
    throw ConfigError("key '" + key + "': expected a number, got '" + value +
                      "'");
  }
  return out;
}

}  // namespace

ExperimentConfig parse_experiment_config(std::istream& in) {
  ExperimentConfig config;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": empty key or value");
    }
    if (!seen.insert(key).second) {
      throw ConfigError("key '" + key + "' appears more than once");
    }

    if (key == "function") {
      config.function = value;
    } else if (key == "dim") {
      config.dim = static_cast<std::size_t>(parse_u64(key, value));
    } else if (key == "method") {
      const AlphaMode keep = config.sampler.alpha;  // alpha may precede method
      config.sampler = SamplerChoice::parse(value);
      config.sampler.alpha = keep;
    } else if (key == "metamodel") {
      config.metamodel = parse_metamodel(value);
    } else if (key == "initial_size") {
      config.initial_size = static_cast<std::size_t>(parse_u64(key, value));
    } else if (key == "max_samples") {
      config.max_samples = static_cast<std::size_t>(parse_u64(key, value));
    } else if (key == "repetitions") {
      config.repetitions = static_cast<std::size_t>(parse_u64(key, value));
    } else if (key == "test_points") {
      config.test_points = static_cast<std::size_t>(parse_u64(key, value));
    } else if (key == "stride") {
      config.stride = static_cast<std::size_t>(parse_u64(key, value));
    } else if (key == "seed") {
      config.seed = parse_u64(key, value);
    } else if (key == "sf_pool") {
      config.sf_pool = static_cast<std::size_t>(parse_u64(key, value));
    } else if (key == "alpha") {
      config.sampler.alpha = value == "auto"
                                 ? AlphaMode::autotuned()
                                 : AlphaMode::fixed(parse_real(key, value));
    } else if (key == "svr_c") {
      config.svr.c = parse_real(key, value);
    } else if (key == "svr_epsilon") {
      config.svr.epsilon = parse_real(key, value);
    } else if (key == "svr_gamma") {
      config.svr.gamma = parse_real(key, value);
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path.string());
  return parse_experiment_config(in);
}

}  // namespace doe
