#include "minewatch/stats.hpp"

#include <cmath>
#include <vector>

namespace minewatch {

namespace {

double mean_of(std::span<const double> values) {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

// Two-pass: mean, then mean squared deviation. Windows are small, so the
// second pass is cheaper than eviction-safe incremental variance.
double population_std_unchecked(std::span<const double> values) {
    // A constant series must give exactly 0, which summation rounding in
    // the mean would otherwise break.
    bool constant = true;
    for (double v : values)
        if (v != values.front()) {
            constant = false;
            break;
        }
    if (constant) return 0.0;

    const double m = mean_of(values);
    double sq = 0.0;
    for (double v : values) {
        const double d = v - m;
        sq += d * d;
    }
    return std::sqrt(sq / static_cast<double>(values.size()));
}

}  // namespace

double population_std(std::span<const double> values) {
    if (values.empty()) throw EmptySeries();
    return population_std_unchecked(values);
}

WindowStats compute_stats(const SlidingWindow& window) {
    if (window.empty()) throw EmptyWindow(window.pid());

    const auto& samples = window.samples();
    std::vector<double> util, mem, ram;
    util.reserve(samples.size());
    mem.reserve(samples.size());
    ram.reserve(samples.size());
    for (const auto& s : samples) {
        util.push_back(s.util);
        mem.push_back(s.mem_pct);
        ram.push_back(static_cast<double>(s.ram_bytes));
    }

    WindowStats st;
    st.pid = window.pid();
    st.n = samples.size();
    st.util_mean = mean_of(util);
    st.util_std = population_std_unchecked(util);
    st.mem_pct_mean = mean_of(mem);
    st.ram_mean = mean_of(ram);
    st.ram_std = population_std_unchecked(ram);
    st.ram_cv = st.ram_mean == 0.0 ? 0.0 : st.ram_std / st.ram_mean;
    st.presence = static_cast<double>(st.n) / static_cast<double>(window.capacity());
    return st;
}

}  // namespace minewatch
