#include "minewatch/evaluate.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "minewatch/simulator.hpp"
#include "minewatch/trace_io.hpp"

namespace minewatch {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

EvalReport evaluate_corpus(const std::vector<CorpusTrace>& corpus, const Thresholds& th,
                           std::size_t window_capacity, double expected_period) {
    EvalReport report;

    const auto set_slot = [&](const std::string& set_name) -> SetCount& {
        for (auto& s : report.sets)
            if (s.set_name == set_name) return s;
        report.sets.push_back({set_name, 0, 0});
        return report.sets.back();
    };

    for (const auto& trace : corpus) {
        DetectionEngine engine(th, window_capacity, expected_period);
        int alerts = 0;
        for (const auto& s : trace.samples) {
            try {
                if (engine.observe(s)) ++alerts;
            } catch (const Error& e) {
                throw Error("trace " + trace.id + ": " + e.what());
            }
        }

        TraceResult result{trace.id, trace.set_name, trace.label, alerts > 0, alerts};
        auto& slot = set_slot(trace.set_name);
        ++slot.total;
        if (result.detected) {
            ++slot.detected;
            if (trace.label == "legitimate") ++report.false_positives;
        }
        report.traces.push_back(std::move(result));
    }
    return report;
}

std::vector<CorpusTrace> generate_builtin_corpus(std::uint64_t seed) {
    std::vector<CorpusTrace> corpus;
    for (const auto& spec : builtin_corpus(seed)) {
        CorpusTrace t;
        t.set_name = spec.set_name;
        t.label = spec.label;
        t.id = spec.id;
        t.samples = gen_trace(spec.profile, spec.pid, spec.seed);
        corpus.push_back(std::move(t));
    }
    return corpus;
}

std::string write_builtin_corpus(std::uint64_t seed, const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError(dir, ec.message());

    ordered_json manifest;
    manifest["entries"] = ordered_json::array();
    for (const auto& spec : builtin_corpus(seed)) {
        const std::string file = spec.id + ".jsonl";
        write_trace(gen_trace(spec.profile, spec.pid, spec.seed), (fs::path(dir) / file).string());
        manifest["entries"].push_back({{"set", spec.set_name},
                                       {"label", spec.label},
                                       {"trace", file},
                                       {"seed", spec.seed}});
    }

    const std::string manifest_path = (fs::path(dir) / "manifest.json").string();
    std::ofstream out(manifest_path, std::ios::trunc);
    if (!out) throw IoError(manifest_path, "cannot open for writing");
    out << manifest.dump(2) << '\n';
    return manifest_path;
}

std::vector<CorpusTrace> load_corpus_manifest(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw IoError(manifest_path, "cannot open for reading");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw Error(manifest_path + ": manifest must be {\"entries\": [...]}");

    const fs::path base = fs::path(manifest_path).parent_path();
    std::vector<CorpusTrace> corpus;
    for (const auto& e : j["entries"]) {
        if (!e.is_object() || !e.contains("set") || !e.contains("label") || !e.contains("trace"))
            throw Error(manifest_path + ": manifest entry missing set/label/trace");
        CorpusTrace t;
        t.set_name = e["set"].get<std::string>();
        t.label = e["label"].get<std::string>();
        if (t.label != "miner" && t.label != "legitimate")
            throw Error(manifest_path + ": label must be miner or legitimate");
        const std::string file = e["trace"].get<std::string>();
        t.id = fs::path(file).stem().string();
        t.samples = read_trace((base / file).string());
        corpus.push_back(std::move(t));
    }
    return corpus;
}

}  // namespace minewatch
