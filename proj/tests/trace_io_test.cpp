#include <filesystem>
#include <random>
#include <sstream>

#include "doctest.h"
#include "minewatch/simulator.hpp"
#include "minewatch/trace_io.hpp"

using namespace minewatch;
namespace fs = std::filesystem;

namespace {

std::vector<MetricSample> random_trace(std::mt19937& rng) {
    std::uniform_real_distribution<double> pct(0.0, 100.0);
    std::uniform_int_distribution<int> pid_count(1, 3);
    std::uniform_int_distribution<int> length(0, 80);
    std::uniform_int_distribution<std::int64_t> ram(0, 8'000'000'000);

    std::vector<MetricSample> samples;
    const int pids = pid_count(rng);
    const int n = length(rng);
    std::vector<double> last_t(pids, 0.0);
    for (int i = 0; i < n; ++i) {
        const int p = static_cast<int>(rng() % pids);
        MetricSample s;
        s.t = last_t[p] + 0.25 + pct(rng) / 10.0;
        last_t[p] = s.t;
        s.pid = p + 100;
        s.name = "proc" + std::to_string(p);
        s.util = pct(rng);
        s.mem_pct = pct(rng);
        s.ram_bytes = ram(rng);
        samples.push_back(std::move(s));
    }
    return samples;
}

std::vector<MetricSample> roundtrip(const std::vector<MetricSample>& samples) {
    std::stringstream buf;
    write_trace(samples, buf);
    return read_trace(buf, "<buf>");
}

}  // namespace

TEST_CASE("write_trace then read_trace is the identity") {
    std::mt19937 rng(404);
    for (int round = 0; round < 100; ++round) {
        const auto samples = random_trace(rng);
        CHECK(roundtrip(samples) == samples);
    }
}

TEST_CASE("simulator traces round-trip through files with full precision") {
    const auto samples = gen_trace(default_profile(ProfileKind::Miner), 4242, 7);
    const auto path = (fs::temp_directory_path() / "minewatch_roundtrip.jsonl").string();
    write_trace(samples, path);
    CHECK(read_trace(path) == samples);
    fs::remove(path);
}

TEST_CASE("empty trace round-trips to an empty file") {
    std::stringstream buf;
    write_trace({}, buf);
    CHECK(buf.str().empty());
    CHECK(read_trace(buf, "<buf>").empty());
}

TEST_CASE("read_trace validates lines") {
    SUBCASE("two valid lines") {
        std::stringstream in(
            R"({"t":0,"pid":1,"name":"a","util":5,"mem_pct":1,"ram_bytes":10}
{"t":1,"pid":1,"name":"a","util":6,"mem_pct":1,"ram_bytes":10}
)");
        CHECK(read_trace(in, "<buf>").size() == 2);
    }
    SUBCASE("non-JSON line") {
        std::stringstream in("not json\n");
        CHECK_THROWS_AS(read_trace(in, "<buf>"), MalformedLine);
    }
    SUBCASE("missing key") {
        std::stringstream in(R"({"t":0,"pid":1,"name":"a","util":5,"mem_pct":1})" "\n");
        CHECK_THROWS_AS(read_trace(in, "<buf>"), MalformedLine);
    }
    SUBCASE("out-of-range util") {
        std::stringstream in(
            R"({"t":0,"pid":1,"name":"a","util":150,"mem_pct":1,"ram_bytes":0})" "\n");
        try {
            read_trace(in, "<buf>");
            FAIL("expected InvariantViolation");
        } catch (const InvariantViolation& e) {
            CHECK(e.field == "util");
            CHECK(e.line_no == 1);
        }
    }
    SUBCASE("negative ram") {
        std::stringstream in(
            R"({"t":0,"pid":1,"name":"a","util":5,"mem_pct":1,"ram_bytes":-1})" "\n");
        CHECK_THROWS_AS(read_trace(in, "<buf>"), InvariantViolation);
    }
    SUBCASE("non-monotonic t for one pid") {
        std::stringstream in(
            R"({"t":5,"pid":1,"name":"a","util":5,"mem_pct":1,"ram_bytes":0}
{"t":4,"pid":1,"name":"a","util":5,"mem_pct":1,"ram_bytes":0}
)");
        try {
            read_trace(in, "<buf>");
            FAIL("expected NonMonotonicTime");
        } catch (const NonMonotonicTime& e) {
            CHECK(e.pid == 1);
            CHECK(e.line_no == 2);
        }
    }
    SUBCASE("interleaved pids may share timestamps") {
        std::stringstream in(
            R"({"t":5,"pid":1,"name":"a","util":5,"mem_pct":1,"ram_bytes":0}
{"t":5,"pid":2,"name":"b","util":5,"mem_pct":1,"ram_bytes":0}
)");
        CHECK(read_trace(in, "<buf>").size() == 2);
    }
}

TEST_CASE("file errors carry path context") {
    CHECK_THROWS_AS(read_trace("/nonexistent/dir/trace.jsonl"), IoError);
    CHECK_THROWS_AS(write_trace({}, "/nonexistent/dir/trace.jsonl"), IoError);
}
