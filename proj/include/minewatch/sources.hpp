#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "minewatch/sample.hpp"

namespace minewatch {

struct GpuInfo {
    int index = 0;
    std::int64_t total_mem_mib = 0;

    bool operator==(const GpuInfo&) const = default;
};

/// One data line of a process-monitor snapshot. `-` fields map to absent.
struct PmonRow {
    int gpu_index = 0;
    int pid = 0;
    std::optional<double> sm_pct;
    std::optional<double> fb_mib;
    std::string name;

    bool operator==(const PmonRow&) const = default;
};

struct SourceSnapshot {
    double t = 0.0;
    std::vector<PmonRow> rows;
    std::unordered_map<int, std::int64_t> ram_by_pid;
};

/// Parses `index, memory.total [MiB]` CSV from the device query command.
/// Memory values may be bare numbers or suffixed with "MiB".
std::vector<GpuInfo> parse_query_gpu_csv(std::string_view text);

/// Parses one process-monitor snapshot with columns
/// `gpu pid type sm mem enc dec fb command`. Comment lines start with `#`.
std::vector<PmonRow> parse_pmon_block(std::string_view text);

/// Converts a snapshot into samples: util from sm_pct, mem_pct from
/// 100*fb/total of the row's GPU (clamped to 100, counting clamps in
/// *clamped when given), ram from ram_by_pid (0 when missing). Rows with
/// absent sm_pct are dropped. Throws UnknownGpuIndex.
std::vector<MetricSample> snapshot_to_samples(const SourceSnapshot& snap,
                                              const std::vector<GpuInfo>& gpus,
                                              std::size_t* clamped = nullptr);

}  // namespace minewatch
