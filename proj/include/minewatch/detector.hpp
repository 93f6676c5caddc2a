#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "minewatch/sample.hpp"

namespace minewatch {

/// Decision boundaries plus alert tuning knobs.
struct Thresholds {
    double util_min = 85.0;        // minimum mean GPU utilization, percent
    double mem_min = 96.0;         // minimum mean GPU-memory share, percent
    double util_std_max = 3.9;     // maximum utilization deviation, percent points
    double ram_cv_max = 0.02;      // maximum RAM coefficient of variation
    double min_presence = 0.9;     // minimum window fill to classify
    int consecutive_windows = 3;   // suspicious windows required before alerting
    double alert_cooldown_s = 300.0;  // per-pid re-alert suppression

    // Optional strict mode: additionally require ram_mean within [ram_min, ram_max].
    bool strict_ram = false;
    double ram_min = 3.1e9;
    double ram_max = 4.2e9;
};

enum class Outcome { Suspicious, Benign, Indeterminate };

enum class Reason {
    LowPresence,
    LowGpuUtil,
    LowGpuMem,
    VolatileUtil,
    VolatileRam,
    RamOutOfBand,      // strict mode only
    AllIndicatorsMet,
};

std::string_view reason_code(Reason r);
std::string_view outcome_name(Outcome o);

struct Verdict {
    int pid = 0;
    Outcome outcome = Outcome::Indeterminate;
    std::vector<Reason> reasons;  // Benign: exactly the first failed check
    WindowStats stats;
};

/// The decision tree. Checks run in order: presence, GPU utilization,
/// GPU memory share, utilization deviation, RAM constancy. Boundary values
/// equal to a threshold fall on the miner side of every check.
Verdict classify_window(const WindowStats& stats, const Thresholds& th);

struct Alert {
    int pid = 0;
    std::string name;
    double first_t = 0.0;  // start of the triggering suspicious span
    double last_t = 0.0;
    std::vector<Reason> reasons;
    WindowStats stats;
};

/// Per-pid alert hysteresis. Suspicious verdicts increment a streak,
/// Benign resets it, Indeterminate leaves it unchanged. An Alert fires when
/// the streak reaches consecutive_windows and the pid is out of cooldown.
///
/// Verdicts for one pid must arrive in time order.
class AlertTracker {
public:
    std::optional<Alert> step(const Verdict& v, double now, std::string_view name,
                              const Thresholds& th);

private:
    struct PidState {
        int streak = 0;
        double span_start = 0.0;
        bool alerted_before = false;
        double last_alert_t = 0.0;
    };
    std::unordered_map<int, PidState> state_;
};

/// One pid's window plus shared alert state; feeds samples through the
/// window -> classify -> hysteresis pipeline.
class DetectionEngine {
public:
    DetectionEngine(Thresholds th, std::size_t window_capacity = 60,
                    double expected_period = 1.0)
        : th_(th), capacity_(window_capacity), period_(expected_period) {}

    /// Push one sample, classify the resulting window, advance alert state.
    std::optional<Alert> observe(const MetricSample& s);

    /// Age out stale samples of processes absent from recent snapshots and
    /// reclassify their windows (live monitoring).
    std::vector<Alert> tick(double now);

    const Thresholds& thresholds() const { return th_; }

private:
    struct Lane {
        SlidingWindow window;
        std::string last_name;
    };

    std::optional<Alert> classify_and_step(Lane& lane, double now);

    Thresholds th_;
    std::size_t capacity_;
    double period_;
    std::unordered_map<int, Lane> lanes_;
    AlertTracker tracker_;
};

}  // namespace minewatch
