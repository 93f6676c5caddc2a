#include "minewatch/detector.hpp"

#include "minewatch/stats.hpp"

namespace minewatch {

std::string_view reason_code(Reason r) {
    switch (r) {
        case Reason::LowPresence: return "LOW_PRESENCE";
        case Reason::LowGpuUtil: return "LOW_GPU_UTIL";
        case Reason::LowGpuMem: return "LOW_GPU_MEM";
        case Reason::VolatileUtil: return "VOLATILE_UTIL";
        case Reason::VolatileRam: return "VOLATILE_RAM";
        case Reason::RamOutOfBand: return "RAM_OUT_OF_BAND";
        case Reason::AllIndicatorsMet: return "ALL_INDICATORS_MET";
    }
    return "?";
}

std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Suspicious: return "suspicious";
        case Outcome::Benign: return "benign";
        case Outcome::Indeterminate: return "indeterminate";
    }
    return "?";
}

Verdict classify_window(const WindowStats& stats, const Thresholds& th) {
    Verdict v;
    v.pid = stats.pid;
    v.stats = stats;

    const auto verdict = [&](Outcome o, Reason r) {
        v.outcome = o;
        v.reasons = {r};
        return v;
    };

    if (stats.presence < th.min_presence)
        return verdict(Outcome::Indeterminate, Reason::LowPresence);
    // Miner-side bounds are inclusive ("no less than"); deviation bounds
    // exclude only strict exceedance.
    if (stats.util_mean < th.util_min)
        return verdict(Outcome::Benign, Reason::LowGpuUtil);
    if (stats.mem_pct_mean < th.mem_min)
        return verdict(Outcome::Benign, Reason::LowGpuMem);
    if (stats.util_std > th.util_std_max)
        return verdict(Outcome::Benign, Reason::VolatileUtil);
    if (stats.ram_cv > th.ram_cv_max)
        return verdict(Outcome::Benign, Reason::VolatileRam);
    if (th.strict_ram && (stats.ram_mean < th.ram_min || stats.ram_mean > th.ram_max))
        return verdict(Outcome::Benign, Reason::RamOutOfBand);
    return verdict(Outcome::Suspicious, Reason::AllIndicatorsMet);
}

std::optional<Alert> AlertTracker::step(const Verdict& v, double now, std::string_view name,
                                        const Thresholds& th) {
    auto& st = state_[v.pid];
    switch (v.outcome) {
        case Outcome::Benign:
            st.streak = 0;
            return std::nullopt;
        case Outcome::Indeterminate:
            return std::nullopt;
        case Outcome::Suspicious:
            break;
    }

    if (st.streak == 0) st.span_start = now;
    ++st.streak;
    if (st.streak < th.consecutive_windows) return std::nullopt;
    if (st.alerted_before && now - st.last_alert_t < th.alert_cooldown_s) return std::nullopt;

    st.alerted_before = true;
    st.last_alert_t = now;

    Alert a;
    a.pid = v.pid;
    a.name = std::string(name);
    a.first_t = st.span_start;
    a.last_t = now;
    a.reasons = v.reasons;
    a.stats = v.stats;
    return a;
}

std::optional<Alert> DetectionEngine::observe(const MetricSample& s) {
    auto [it, inserted] = lanes_.try_emplace(s.pid, Lane{SlidingWindow(s.pid, capacity_, period_), s.name});
    Lane& lane = it->second;
    if (!s.name.empty()) lane.last_name = s.name;
    lane.window.push(s);
    return classify_and_step(lane, s.t);
}

std::vector<Alert> DetectionEngine::tick(double now) {
    std::vector<Alert> alerts;
    const double horizon = static_cast<double>(capacity_) * period_;
    for (auto& [pid, lane] : lanes_) {
        lane.window.drop_before(now - horizon);
        if (lane.window.empty()) continue;
        // Only reclassify lanes that did not just receive a sample at `now`.
        if (lane.window.samples().back().t >= now) continue;
        if (auto a = classify_and_step(lane, now)) alerts.push_back(std::move(*a));
    }
    return alerts;
}

std::optional<Alert> DetectionEngine::classify_and_step(Lane& lane, double now) {
    const Verdict v = classify_window(compute_stats(lane.window), th_);
    return tracker_.step(v, now, lane.last_name, th_);
}

}  // namespace minewatch
