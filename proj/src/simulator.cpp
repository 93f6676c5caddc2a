#include "minewatch/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace minewatch {

namespace {

// splitmix64 finalizer; mixes the corpus seed with pid and profile kind so
// every trace gets an independent stream.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trace_seed(std::uint64_t seed, int pid, ProfileKind kind) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ static_cast<std::uint64_t>(pid));
    h = mix64(h ^ static_cast<std::uint64_t>(kind));
    return h;
}

// Box-Muller on top of mt19937_64: unlike std::normal_distribution, the
// draw sequence is identical on every standard library.
class Gaussian {
public:
    explicit Gaussian(std::uint64_t seed) : rng_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

private:
    double uniform01() {  // [0, 1)
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 rng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

double clamp_pct(double v) { return std::clamp(v, 0.0, 100.0); }

// One jitter draw: Gaussian winsorized at +-2.5 sd, so a profile's samples
// stay within [base - 2.5*sd, base + 2.5*sd].
double jitter(Gaussian& g, double sd) { return std::clamp(g.next(), -2.5, 2.5) * sd; }

double util_base_at(const TraceProfile& p, double t) {
    if (!p.util_swing) return p.util_base;
    const auto& sw = *p.util_swing;
    const double phase = std::fmod(t, sw.period_s);
    return phase < sw.period_s / 2.0 ? sw.high : sw.low;
}

}  // namespace

std::string_view profile_kind_name(ProfileKind k) {
    switch (k) {
        case ProfileKind::Miner: return "miner";
        case ProfileKind::StealthMiner: return "stealth_miner";
        case ProfileKind::FurmarkLike: return "furmark_like";
        case ProfileKind::PassmarkLike: return "passmark_like";
        case ProfileKind::GameLike: return "game_like";
        case ProfileKind::ModelingLike: return "modeling_like";
        case ProfileKind::BrowserLike: return "browser_like";
    }
    return "?";
}

std::optional<ProfileKind> parse_profile_kind(std::string_view name) {
    for (ProfileKind k : all_profile_kinds())
        if (profile_kind_name(k) == name) return k;
    return std::nullopt;
}

std::vector<ProfileKind> all_profile_kinds() {
    return {ProfileKind::Miner,        ProfileKind::StealthMiner, ProfileKind::FurmarkLike,
            ProfileKind::PassmarkLike, ProfileKind::GameLike,     ProfileKind::ModelingLike,
            ProfileKind::BrowserLike};
}

TraceProfile default_profile(ProfileKind kind) {
    TraceProfile p;
    p.kind = kind;
    switch (kind) {
        case ProfileKind::Miner:
            // Steady hashing load: high utilization with small jitter,
            // near-full GPU memory, near-constant RAM.
            p.util_base = 92.0;
            p.util_jitter_sd = 2.0;
            p.mem_pct_base = 98.0;
            p.mem_pct_jitter_sd = 0.5;
            p.ram_base = 3.7e9;
            p.ram_jitter_sd = 2e7;
            break;
        case ProfileKind::StealthMiner:
            // Evasive load oscillating between 60 and 90 percent.
            p.util_swing = UtilSwing{60.0, 90.0, 30.0};
            p.util_jitter_sd = 2.0;
            p.mem_pct_base = 98.0;
            p.mem_pct_jitter_sd = 0.5;
            p.ram_base = 3.7e9;
            p.ram_jitter_sd = 2e7;
            break;
        case ProfileKind::FurmarkLike:
            // Stress benchmark: miner-like utilization profile but far
            // lower GPU memory footprint.
            p.util_base = 93.0;
            p.util_jitter_sd = 2.5;
            p.mem_pct_base = 70.0;
            p.mem_pct_jitter_sd = 3.0;
            p.ram_base = 2.5e9;
            p.ram_jitter_sd = 8e7;
            break;
        case ProfileKind::PassmarkLike:
            // Indistinguishable from a miner on every indicator; the known
            // false positive stays in the corpus.
            p.util_base = 92.0;
            p.util_jitter_sd = 2.0;
            p.mem_pct_base = 98.0;
            p.mem_pct_jitter_sd = 0.5;
            p.ram_base = 3.7e9;
            p.ram_jitter_sd = 2e7;
            break;
        case ProfileKind::GameLike:
            // Scene-dependent load swings keep the deviation high.
            p.util_swing = UtilSwing{40.0, 95.0, 20.0};
            p.util_jitter_sd = 4.0;
            p.mem_pct_base = 85.0;
            p.mem_pct_jitter_sd = 3.0;
            p.ram_base = 6.0e9;
            p.ram_jitter_sd = 4e8;
            break;
        case ProfileKind::ModelingLike:
            // Bursty render/edit cycles, moderate GPU memory.
            p.util_swing = UtilSwing{15.0, 95.0, 45.0};
            p.util_jitter_sd = 5.0;
            p.mem_pct_base = 50.0;
            p.mem_pct_jitter_sd = 4.0;
            p.ram_base = 5.0e9;
            p.ram_jitter_sd = 5e8;
            break;
        case ProfileKind::BrowserLike:
            // Video playback tab: light decode load.
            p.util_base = 15.0;
            p.util_jitter_sd = 5.0;
            p.mem_pct_base = 8.0;
            p.mem_pct_jitter_sd = 1.5;
            p.ram_base = 9.0e8;
            p.ram_jitter_sd = 6e7;
            break;
    }
    return p;
}

std::vector<MetricSample> gen_trace(const TraceProfile& profile, int pid, std::uint64_t seed) {
    if (profile.duration_s <= 0.0 || profile.period_s <= 0.0)
        throw Error("trace profile requires positive duration and period");
    if (profile.util_swing && profile.util_swing->period_s <= 0.0)
        throw Error("utilization swing requires a positive period");

    Gaussian g(trace_seed(seed, pid, profile.kind));
    const auto n = static_cast<std::size_t>(profile.duration_s / profile.period_s);
    const std::string name(profile_kind_name(profile.kind));

    std::vector<MetricSample> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        MetricSample s;
        s.t = static_cast<double>(k) * profile.period_s;
        s.pid = pid;
        s.name = name;
        s.util = clamp_pct(util_base_at(profile, s.t) + jitter(g, profile.util_jitter_sd));
        s.mem_pct = clamp_pct(profile.mem_pct_base + jitter(g, profile.mem_pct_jitter_sd));
        const double ram = profile.ram_base + jitter(g, profile.ram_jitter_sd);
        s.ram_bytes = ram <= 0.0 ? 0 : static_cast<std::int64_t>(std::llround(ram));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<CorpusEntrySpec> builtin_corpus(std::uint64_t seed) {
    std::vector<CorpusEntrySpec> entries;
    int next_pid = 1001;
    int test_idx = 0, val_idx = 0, legit_idx = 0;

    const auto add = [&](std::string set, std::string label, TraceProfile p) {
        CorpusEntrySpec e;
        e.set_name = std::move(set);
        e.label = std::move(label);
        e.profile = std::move(p);
        e.pid = next_pid++;
        e.seed = seed;
        int idx = 0;
        if (e.set_name == "test") idx = ++test_idx;
        else if (e.set_name == "validation") idx = ++val_idx;
        else idx = ++legit_idx;
        e.id = e.set_name + "-" + std::to_string(idx) + "-" +
               std::string(profile_kind_name(e.profile.kind));
        return entries.push_back(std::move(e));
    };

    // Test set: the three base configurations, spanning the observed
    // 3.1-4.2 GB RAM band.
    for (double ram : {3.1e9, 3.7e9, 4.2e9}) {
        TraceProfile p = default_profile(ProfileKind::Miner);
        p.ram_base = ram;
        add("test", "miner", p);
    }

    // Validation set: eight plain miner variants plus two stealth miners.
    const double util_bases[8] = {88, 89, 90, 91, 92, 93, 94, 95};
    const double mem_bases[8] = {96.5, 97, 97.5, 98, 98.5, 99, 99.5, 100};
    const double ram_bases[8] = {3.1e9, 3.3e9, 3.5e9, 3.6e9, 3.7e9, 3.9e9, 4.0e9, 4.2e9};
    for (int i = 0; i < 8; ++i) {
        TraceProfile p = default_profile(ProfileKind::Miner);
        p.util_base = util_bases[i];
        p.util_jitter_sd = 1.5 + 0.125 * i;  // 1.5 .. 2.375
        p.mem_pct_base = mem_bases[i];
        p.ram_base = ram_bases[i];
        add("validation", "miner", p);
    }
    for (double swing_period : {30.0, 45.0}) {
        TraceProfile p = default_profile(ProfileKind::StealthMiner);
        p.util_swing->period_s = swing_period;
        add("validation", "miner", p);
    }

    // Legitimate applications.
    for (ProfileKind k : {ProfileKind::FurmarkLike, ProfileKind::PassmarkLike,
                          ProfileKind::GameLike, ProfileKind::ModelingLike,
                          ProfileKind::BrowserLike})
        add("legitimate", "legitimate", default_profile(k));

    return entries;
}

}  // namespace minewatch
