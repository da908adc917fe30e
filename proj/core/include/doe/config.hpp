#pragma once

#include <filesystem>
#include <iosfwd>

#include "doe/evaluation.hpp"

namespace doe {

/// Parses an experiment config from `key = value` lines. Blank lines and
/// lines starting with '#' are skipped. Unknown or repeated keys raise
/// ConfigError naming the key.
ExperimentConfig parse_experiment_config(std::istream& in);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

}  // namespace doe
