#include <filesystem>

#include "doctest.h"
#include "minewatch/evaluate.hpp"
#include "minewatch/serialize.hpp"
#include "minewatch/simulator.hpp"

using namespace minewatch;
namespace fs = std::filesystem;

namespace {

const SetCount& set_of(const EvalReport& r, const std::string& name) {
    for (const auto& s : r.sets)
        if (s.set_name == name) return s;
    REQUIRE(false);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("builtin corpus reproduces the evaluation table") {
    for (std::uint64_t seed : {1ULL, 7ULL, 42ULL}) {
        const auto report = evaluate_corpus(generate_builtin_corpus(seed), Thresholds{});

        CHECK(set_of(report, "test").total == 3);
        CHECK(set_of(report, "test").detected == 3);
        CHECK(set_of(report, "validation").total == 10);
        CHECK(set_of(report, "validation").detected == 8);
        CHECK(set_of(report, "legitimate").total == 5);
        CHECK(set_of(report, "legitimate").detected == 1);
        CHECK(report.false_positives == 1);

        for (const auto& t : report.traces) {
            if (t.id.find("stealth") != std::string::npos)
                CHECK(!t.detected);  // the paper-style evasion stays undetected
            if (t.id.find("passmark") != std::string::npos)
                CHECK(t.detected);  // the known false positive
            if (t.set_name == "legitimate" && t.id.find("passmark") == std::string::npos)
                CHECK(!t.detected);
        }
    }
}

TEST_CASE("empty corpus yields an all-zero report") {
    const auto report = evaluate_corpus({}, Thresholds{});
    CHECK(report.sets.empty());
    CHECK(report.false_positives == 0);
    CHECK(report.traces.empty());
}

TEST_CASE("a single seeded miner trace is detected") {
    CorpusTrace t;
    t.set_name = "test";
    t.label = "miner";
    t.id = "solo";
    t.samples = gen_trace(default_profile(ProfileKind::Miner), 321, 99);
    const auto report = evaluate_corpus({t}, Thresholds{});
    CHECK(set_of(report, "test").detected == 1);
    REQUIRE(report.traces.size() == 1);
    CHECK(report.traces[0].alert_count >= 1);
}

TEST_CASE("evaluation is deterministic") {
    const auto a = evaluate_corpus(generate_builtin_corpus(7), Thresholds{});
    const auto b = evaluate_corpus(generate_builtin_corpus(7), Thresholds{});
    CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("written corpus evaluates identically through the manifest") {
    const auto dir = (fs::temp_directory_path() / "minewatch_corpus_test").string();
    fs::remove_all(dir);
    const std::string manifest = write_builtin_corpus(7, dir);

    const auto from_files = evaluate_corpus(load_corpus_manifest(manifest), Thresholds{});
    CHECK(set_of(from_files, "test").detected == 3);
    CHECK(set_of(from_files, "validation").detected == 8);
    CHECK(set_of(from_files, "legitimate").detected == 1);
    CHECK(from_files.false_positives == 1);
    fs::remove_all(dir);
}

TEST_CASE("corpus errors carry trace identity") {
    CHECK_THROWS_AS(load_corpus_manifest("/nonexistent/manifest.json"), IoError);
}
