#pragma once

#include <string>

#include "minewatch/detector.hpp"

namespace minewatch {

enum class OutputMode { Human, Json };

/// Runtime configuration; every key is optional in the config file and
/// defaults to the values below. Flags override file values.
struct Config {
    Thresholds thresholds;
    double period_s = 1.0;
    std::size_t window_capacity = 60;
    std::string pmon_command = "nvidia-smi pmon -c 1 -s um";
    std::string query_gpu_command =
        "nvidia-smi --query-gpu=index,memory.total --format=csv";
    OutputMode output = OutputMode::Human;
};

/// Loads JSON config from path and merges it over the defaults.
/// Throws ConfigError on unreadable files, unknown keys or bad values.
Config load_config(const std::string& path);

/// Validates invariants (positive thresholds, window_capacity >= 2, ...).
void validate_config(const Config& cfg);

}  // namespace minewatch
