#include <map>

#include "doctest.h"
#include "minewatch/simulator.hpp"
#include "minewatch/stats.hpp"

using namespace minewatch;

namespace {

// Full-trace statistics: one window sized to the whole trace.
WindowStats full_trace_stats(const std::vector<MetricSample>& samples) {
    REQUIRE(!samples.empty());
    SlidingWindow w(samples[0].pid, samples.size());
    for (const auto& s : samples) w.push(s);
    return compute_stats(w);
}

}  // namespace

TEST_CASE("gen_trace is deterministic and well-formed") {
    const TraceProfile p = default_profile(ProfileKind::Miner);
    const auto a = gen_trace(p, 4242, 7);
    const auto b = gen_trace(p, 4242, 7);
    CHECK(a == b);
    CHECK(a.size() == 300);

    const auto other_seed = gen_trace(p, 4242, 8);
    CHECK(a != other_seed);
    const auto other_pid = gen_trace(p, 4243, 7);
    CHECK(a != other_pid);

    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].t == doctest::Approx(static_cast<double>(k)));
        CHECK(a[k].pid == 4242);
    }
}

TEST_CASE("generated percents stay within [0,100]") {
    for (ProfileKind kind : all_profile_kinds()) {
        for (std::uint64_t seed : {0ULL, 7ULL, 12345ULL}) {
            for (const auto& s : gen_trace(default_profile(kind), 100, seed)) {
                CHECK(s.util >= 0.0);
                CHECK(s.util <= 100.0);
                CHECK(s.mem_pct >= 0.0);
                CHECK(s.mem_pct <= 100.0);
                CHECK(s.ram_bytes >= 0);
            }
        }
    }
}

TEST_CASE("miner profile hits the calibration targets") {
    const TraceProfile p = default_profile(ProfileKind::Miner);
    for (std::uint64_t seed : {1ULL, 7ULL, 42ULL, 2024ULL}) {
        const WindowStats st = full_trace_stats(gen_trace(p, 4242, seed));
        CHECK(st.util_mean >= 90.0);
        CHECK(st.util_mean <= 94.0);
        CHECK(st.util_std < 3.1);
        CHECK(st.mem_pct_mean >= 96.0);
        CHECK(st.ram_cv < 0.02);
    }
}

TEST_CASE("stealth profile oscillates between 60 and 90") {
    const TraceProfile p = default_profile(ProfileKind::StealthMiner);
    for (std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
        const auto samples = gen_trace(p, 555, seed);
        for (const auto& s : samples) {
            CHECK(s.util >= 55.0);  // low - 2.5 * jitter sd
            CHECK(s.util <= 95.0);  // high + 2.5 * jitter sd
        }
        CHECK(full_trace_stats(samples).util_mean < 85.0);
    }
}

TEST_CASE("sub-period duration yields an empty trace") {
    TraceProfile p = default_profile(ProfileKind::Miner);
    p.duration_s = 0.5;
    p.period_s = 1.0;
    CHECK(gen_trace(p, 1, 0).empty());
}

TEST_CASE("invalid profile bounds are rejected") {
    TraceProfile p = default_profile(ProfileKind::Miner);
    p.duration_s = -1.0;
    CHECK_THROWS_AS(gen_trace(p, 1, 0), Error);
    p = default_profile(ProfileKind::Miner);
    p.period_s = 0.0;
    CHECK_THROWS_AS(gen_trace(p, 1, 0), Error);
}

TEST_CASE("builtin corpus composition matches the evaluation layout") {
    const auto entries = builtin_corpus(7);
    std::map<std::string, int> sizes;
    for (const auto& e : entries) ++sizes[e.set_name];
    CHECK(sizes["test"] == 3);
    CHECK(sizes["validation"] == 10);
    CHECK(sizes["legitimate"] == 5);
    CHECK(entries.size() == 18);

    int stealth = 0, miners = 0;
    for (const auto& e : entries) {
        if (e.profile.kind == ProfileKind::StealthMiner) ++stealth;
        if (e.label == "miner") ++miners;
        CHECK((e.label == "miner" || e.label == "legitimate"));
    }
    CHECK(stealth == 2);
    CHECK(miners == 13);

    // Test-set RAM bases span the observed band.
    CHECK(entries[0].profile.ram_base == doctest::Approx(3.1e9));
    CHECK(entries[1].profile.ram_base == doctest::Approx(3.7e9));
    CHECK(entries[2].profile.ram_base == doctest::Approx(4.2e9));

    // Distinct pids so traces are independent.
    std::map<int, int> pid_count;
    for (const auto& e : entries) ++pid_count[e.pid];
    for (const auto& [pid, count] : pid_count) CHECK(count == 1);
}

TEST_CASE("every plain miner entry meets the indicator bounds; game-like stays volatile") {
    for (std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
        for (const auto& e : builtin_corpus(seed)) {
            const WindowStats st = full_trace_stats(gen_trace(e.profile, e.pid, e.seed));
            if (e.profile.kind == ProfileKind::Miner) {
                CHECK(st.util_mean >= 85.0);
                CHECK(st.mem_pct_mean >= 96.0);
                CHECK(st.util_std <= 3.1);
                CHECK(st.ram_cv <= 0.02);
            } else if (e.profile.kind == ProfileKind::GameLike) {
                CHECK(st.util_std >= 4.7);
            }
        }
    }
}

TEST_CASE("profile kind names round-trip") {
    for (ProfileKind k : all_profile_kinds())
        CHECK(parse_profile_kind(profile_kind_name(k)) == k);
    CHECK(!parse_profile_kind("bogus"));
}
