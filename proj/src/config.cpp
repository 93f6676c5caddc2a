#include "minewatch/config.hpp"

#include <fstream>

#include "json.hpp"

namespace minewatch {

namespace {

using nlohmann::json;

double get_positive(const json& j, const char* key, double fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number()) throw ConfigError(std::string(key) + " must be a number");
    const double v = it->get<double>();
    if (v <= 0.0) throw ConfigError(std::string(key) + " must be positive");
    return v;
}

Thresholds parse_thresholds(const json& j, Thresholds th) {
    th.util_min = get_positive(j, "util_min", th.util_min);
    th.mem_min = get_positive(j, "mem_min", th.mem_min);
    th.util_std_max = get_positive(j, "util_std_max", th.util_std_max);
    th.ram_cv_max = get_positive(j, "ram_cv_max", th.ram_cv_max);
    th.min_presence = get_positive(j, "min_presence", th.min_presence);
    th.consecutive_windows =
        static_cast<int>(get_positive(j, "consecutive_windows", th.consecutive_windows));
    th.alert_cooldown_s = get_positive(j, "alert_cooldown_s", th.alert_cooldown_s);
    if (auto it = j.find("strict_ram"); it != j.end()) {
        if (!it->is_boolean()) throw ConfigError("strict_ram must be a boolean");
        th.strict_ram = it->get<bool>();
    }
    th.ram_min = get_positive(j, "ram_min", th.ram_min);
    th.ram_max = get_positive(j, "ram_max", th.ram_max);
    return th;
}

}  // namespace

void validate_config(const Config& cfg) {
    const Thresholds& th = cfg.thresholds;
    if (th.util_min > 100.0 || th.mem_min > 100.0)
        throw ConfigError("util_min and mem_min must be <= 100");
    if (th.min_presence > 1.0) throw ConfigError("min_presence must be <= 1");
    if (th.consecutive_windows < 1) throw ConfigError("consecutive_windows must be >= 1");
    if (cfg.period_s <= 0.0) throw ConfigError("period_s must be positive");
    if (cfg.window_capacity < 2) throw ConfigError("window_capacity must be >= 2");
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open config");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ConfigError(path + ": config must be a JSON object");

    Config cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "thresholds") {
            if (!value.is_object()) throw ConfigError("thresholds must be an object");
            cfg.thresholds = parse_thresholds(value, cfg.thresholds);
        } else if (key == "period_s") {
            cfg.period_s = get_positive(j, "period_s", cfg.period_s);
        } else if (key == "window_capacity") {
            const double v = get_positive(j, "window_capacity", 60.0);
            cfg.window_capacity = static_cast<std::size_t>(v);
        } else if (key == "pmon_command") {
            cfg.pmon_command = value.get<std::string>();
        } else if (key == "query_gpu_command") {
            cfg.query_gpu_command = value.get<std::string>();
        } else if (key == "output") {
            const auto mode = value.get<std::string>();
            if (mode == "human") cfg.output = OutputMode::Human;
            else if (mode == "json") cfg.output = OutputMode::Json;
            else throw ConfigError("output must be \"human\" or \"json\"");
        } else {
            throw ConfigError(path + ": unknown config key \"" + key + "\"");
        }
    }
    validate_config(cfg);
    return cfg;
}

}  // namespace minewatch
