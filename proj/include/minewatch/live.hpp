#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minewatch/sources.hpp"

namespace minewatch {

/// Resident host RAM of a process in bytes, from the OS process table.
/// Returns 0 when the process is gone or the platform is unsupported.
std::int64_t ram_of(int pid);

/// Runs a shell command and captures its stdout.
/// Throws IoError when the command cannot be started.
std::string run_command(const std::string& cmd);

/// Polls the configured external commands for telemetry snapshots.
/// Single sequential poller; delivers snapshots in non-decreasing t.
class CommandSource {
public:
    CommandSource(std::string query_gpu_command, std::string pmon_command)
        : query_cmd_(std::move(query_gpu_command)), pmon_cmd_(std::move(pmon_command)) {}

    /// One device query, typically run once at startup.
    std::vector<GpuInfo> query_gpus() const;

    /// One process-monitor poll; RAM is sampled for every pid seen.
    SourceSnapshot poll(double t) const;

private:
    std::string query_cmd_;
    std::string pmon_cmd_;
};

}  // namespace minewatch
