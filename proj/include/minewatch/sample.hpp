#pragma once

#include <cstdint>
#include <deque>
#include <string>

#include "minewatch/errors.hpp"

namespace minewatch {

/// One timestamped per-process telemetry reading.
struct MetricSample {
    double t = 0.0;            // seconds since monitoring start
    int pid = 0;               // positive
    std::string name;          // process name, may be empty
    double util = 0.0;         // GPU utilization share, percent [0,100]
    double mem_pct = 0.0;      // GPU memory share, percent [0,100]
    std::int64_t ram_bytes = 0;  // host resident RAM

    bool operator==(const MetricSample&) const = default;
};

/// Bounded, time-ordered buffer of samples for one process.
///
/// Single-writer: one logical thread mutates a given window at a time.
class SlidingWindow {
public:
    explicit SlidingWindow(int pid, std::size_t capacity = 60, double expected_period = 1.0)
        : pid_(pid), capacity_(capacity), expected_period_(expected_period) {}

    /// Appends a sample, evicting the oldest if the window is full.
    /// Throws PidMismatch or NonMonotonicTime on precondition violation.
    void push(const MetricSample& s);

    /// Drops samples with t < cutoff. Used by live monitoring to age out
    /// samples of processes that stopped appearing in snapshots.
    void drop_before(double cutoff);

    int pid() const { return pid_; }
    std::size_t capacity() const { return capacity_; }
    double expected_period() const { return expected_period_; }
    std::size_t size() const { return samples_.size(); }
    bool empty() const { return samples_.empty(); }
    const std::deque<MetricSample>& samples() const { return samples_; }

private:
    int pid_;
    std::size_t capacity_;
    double expected_period_;
    std::deque<MetricSample> samples_;
};

/// Derived statistics of one window.
struct WindowStats {
    int pid = 0;
    std::size_t n = 0;
    double util_mean = 0.0;
    double util_std = 0.0;      // population standard deviation, percent points
    double mem_pct_mean = 0.0;
    double ram_mean = 0.0;      // bytes
    double ram_std = 0.0;       // bytes
    double ram_cv = 0.0;        // ram_std / ram_mean; 0 when ram_mean == 0
    double presence = 0.0;      // n / capacity

    bool operator==(const WindowStats&) const = default;
};

}  // namespace minewatch
