#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minewatch/sample.hpp"

namespace minewatch {

enum class ProfileKind {
    Miner,
    StealthMiner,
    FurmarkLike,
    PassmarkLike,
    GameLike,
    ModelingLike,
    BrowserLike,
};

std::string_view profile_kind_name(ProfileKind k);
std::optional<ProfileKind> parse_profile_kind(std::string_view name);
std::vector<ProfileKind> all_profile_kinds();

/// Deterministic square-wave oscillation of the utilization base value:
/// the first half of each period sits at `high`, the second at `low`.
struct UtilSwing {
    double low = 0.0;      // percent
    double high = 0.0;     // percent
    double period_s = 0.0;
};

/// Synthetic workload description. Per-sample Gaussian jitter (winsorized
/// at +-2.5 sd) is added to each base value; percents clamp to [0,100]
/// after jitter.
struct TraceProfile {
    ProfileKind kind = ProfileKind::Miner;
    double util_base = 0.0;
    double util_jitter_sd = 0.0;
    std::optional<UtilSwing> util_swing;
    double mem_pct_base = 0.0;
    double mem_pct_jitter_sd = 0.0;
    double ram_base = 0.0;       // bytes
    double ram_jitter_sd = 0.0;  // bytes
    double duration_s = 300.0;
    double period_s = 1.0;
};

/// Calibrated defaults for each workload kind.
TraceProfile default_profile(ProfileKind kind);

/// Generates floor(duration_s / period_s) samples at t = k * period_s.
///
/// Randomness is fully pinned: an std::mt19937_64 seeded with
/// mix(seed, pid, kind) drives a Box-Muller Gaussian; each sample draws
/// util, mem_pct, ram jitter in that order. Identical (profile, pid, seed)
/// always reproduces the identical trace.
std::vector<MetricSample> gen_trace(const TraceProfile& profile, int pid, std::uint64_t seed);

struct CorpusEntrySpec {
    std::string set_name;  // test | validation | legitimate
    std::string label;     // miner | legitimate
    std::string id;        // stable trace identifier, usable as a file stem
    TraceProfile profile;
    int pid = 0;
    std::uint64_t seed = 0;
};

/// The builtin labeled corpus: 3 test miners (RAM bases 3.1/3.7/4.2 GB),
/// 10 validation entries (8 plain miner variants + 2 stealth miners) and
/// 5 legitimate workloads (furmark/passmark/game/modeling/browser).
std::vector<CorpusEntrySpec> builtin_corpus(std::uint64_t seed);

}  // namespace minewatch
