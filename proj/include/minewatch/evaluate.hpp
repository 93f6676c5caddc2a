#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minewatch/detector.hpp"
#include "minewatch/sample.hpp"

namespace minewatch {

/// One labeled trace of a single process.
struct CorpusTrace {
    std::string set_name;  // test | validation | legitimate
    std::string label;     // miner | legitimate
    std::string id;
    std::vector<MetricSample> samples;
};

struct SetCount {
    std::string set_name;
    int total = 0;
    int detected = 0;
};

struct TraceResult {
    std::string id;
    std::string set_name;
    std::string label;
    bool detected = false;
    int alert_count = 0;
};

struct EvalReport {
    std::vector<SetCount> sets;  // in first-seen order
    int false_positives = 0;     // alerts on legitimate-labeled traces
    std::vector<TraceResult> traces;
};

/// Replays each trace through windows -> classify_window -> alert hysteresis.
/// A trace counts as detected iff at least one Alert fires.
EvalReport evaluate_corpus(const std::vector<CorpusTrace>& corpus, const Thresholds& th,
                           std::size_t window_capacity = 60, double expected_period = 1.0);

/// Materializes the builtin corpus in memory (no files written).
std::vector<CorpusTrace> generate_builtin_corpus(std::uint64_t seed);

/// Writes the builtin corpus as one trace file per entry plus manifest.json
/// (`{"entries":[{"set","label","trace","seed"}]}`) into dir.
/// Returns the manifest path.
std::string write_builtin_corpus(std::uint64_t seed, const std::string& dir);

/// Loads a corpus from a manifest file; trace paths resolve relative to the
/// manifest's directory.
std::vector<CorpusTrace> load_corpus_manifest(const std::string& manifest_path);

}  // namespace minewatch
