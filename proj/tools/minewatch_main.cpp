// minewatch: behavioral GPU cryptojacking detector.
//
// Subcommands: watch (live monitoring), replay (detect over a recorded
// trace), simulate (write synthetic traces), evaluate (corpus-level
// detection rates). Exit codes: 0 clean, 1 error, 2 detection occurred.

#include <atomic>
#include <chrono>
#include <csignal>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "minewatch/config.hpp"
#include "minewatch/detector.hpp"
#include "minewatch/evaluate.hpp"
#include "minewatch/live.hpp"
#include "minewatch/serialize.hpp"
#include "minewatch/simulator.hpp"
#include "minewatch/trace_io.hpp"

namespace mw = minewatch;

namespace {

std::atomic<bool> g_interrupted{false};

void on_sigint(int) { g_interrupted = true; }

void print_alert(const mw::Alert& a, mw::OutputMode mode) {
    if (mode == mw::OutputMode::Json) {
        std::cout << mw::alert_to_json(a).dump() << '\n';
    } else {
        std::cout << "ALERT pid=" << a.pid << " name=" << (a.name.empty() ? "?" : a.name)
                  << " span=[" << a.first_t << "," << a.last_t << "]s"
                  << " util_mean=" << a.stats.util_mean << " util_std=" << a.stats.util_std
                  << " mem_pct_mean=" << a.stats.mem_pct_mean << " ram_cv=" << a.stats.ram_cv
                  << '\n';
    }
    std::cout.flush();
}

void print_report(const mw::EvalReport& report, mw::OutputMode mode) {
    if (mode == mw::OutputMode::Json) {
        std::cout << mw::report_to_json(report).dump() << '\n';
        return;
    }
    for (const auto& s : report.sets) {
        const char* verb = s.set_name == "legitimate" ? "flagged" : "detected";
        std::cout << s.set_name << ": " << s.detected << "/" << s.total << " " << verb << '\n';
    }
    std::cout << "false positives: " << report.false_positives << '\n';
    for (const auto& t : report.traces)
        std::cout << "  " << t.id << ": " << (t.detected ? "detected" : "clean")
                  << " (" << t.alert_count << " alerts)" << '\n';
}

struct CommonOpts {
    std::string config_path;
    bool json = false;

    mw::Config load() const {
        mw::Config cfg = config_path.empty() ? mw::Config{} : mw::load_config(config_path);
        if (json) cfg.output = mw::OutputMode::Json;
        return cfg;
    }
};

int run_replay(const CommonOpts& opts, const std::string& trace_path) {
    const mw::Config cfg = opts.load();
    const auto samples = mw::read_trace(trace_path);

    mw::DetectionEngine engine(cfg.thresholds, cfg.window_capacity, cfg.period_s);
    int alerts = 0;
    for (const auto& s : samples) {
        if (auto a = engine.observe(s)) {
            print_alert(*a, cfg.output);
            ++alerts;
        }
    }
    if (cfg.output == mw::OutputMode::Human)
        std::cout << (alerts ? "detection: " + std::to_string(alerts) + " alert(s)"
                             : "no detection")
                  << '\n';
    return alerts ? 2 : 0;
}

int run_watch(const CommonOpts& opts, double interval_override, int window_override) {
    mw::Config cfg = opts.load();
    if (interval_override > 0.0) cfg.period_s = interval_override;
    if (window_override > 0) cfg.window_capacity = static_cast<std::size_t>(window_override);
    mw::validate_config(cfg);

    mw::CommandSource source(cfg.query_gpu_command, cfg.pmon_command);
    const auto gpus = source.query_gpus();
    if (gpus.empty()) {
        std::cerr << "no GPUs reported by: " << cfg.query_gpu_command << '\n';
        return 1;
    }

    std::signal(SIGINT, on_sigint);
    std::signal(SIGTERM, on_sigint);

    mw::DetectionEngine engine(cfg.thresholds, cfg.window_capacity, cfg.period_s);
    const auto start = std::chrono::steady_clock::now();
    int alerts = 0;
    while (!g_interrupted) {
        const double now = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start).count();
        try {
            const auto snap = source.poll(now);
            for (const auto& s : mw::snapshot_to_samples(snap, gpus))
                if (auto a = engine.observe(s)) {
                    print_alert(*a, cfg.output);
                    ++alerts;
                }
            for (const auto& a : engine.tick(now)) {
                print_alert(a, cfg.output);
                ++alerts;
            }
        } catch (const mw::Error& e) {
            std::cerr << "poll failed: " << e.what() << '\n';
        }
        std::this_thread::sleep_for(std::chrono::duration<double>(cfg.period_s));
    }
    return alerts ? 2 : 0;
}

int run_simulate(const std::string& profile_name, bool builtin, double duration,
                 std::uint64_t seed, int pid, const std::string& out_path) {
    if (builtin) {
        const std::string manifest = mw::write_builtin_corpus(seed, out_path);
        std::cout << "wrote corpus manifest " << manifest << '\n';
        return 0;
    }
    const auto kind = mw::parse_profile_kind(profile_name);
    if (!kind) {
        std::cerr << "unknown profile kind: " << profile_name << '\n';
        return 1;
    }
    mw::TraceProfile profile = mw::default_profile(*kind);
    if (duration > 0.0) profile.duration_s = duration;
    mw::write_trace(mw::gen_trace(profile, pid, seed), out_path);
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

int run_evaluate(const CommonOpts& opts, const std::string& corpus, std::uint64_t seed) {
    const mw::Config cfg = opts.load();
    const auto traces = corpus == "builtin" ? mw::generate_builtin_corpus(seed)
                                            : mw::load_corpus_manifest(corpus);
    const auto report =
        mw::evaluate_corpus(traces, cfg.thresholds, cfg.window_capacity, cfg.period_s);
    print_report(report, cfg.output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"behavioral GPU cryptojacking detector"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* watch = app.add_subcommand("watch", "monitor live GPU telemetry");
    double interval = 0.0;
    int window = 0;
    watch->add_option("--config", opts.config_path, "JSON config file");
    watch->add_option("--interval", interval, "poll interval, seconds");
    watch->add_option("--window", window, "window capacity, samples");
    watch->add_flag("--json", opts.json, "JSON-lines output");

    auto* replay = app.add_subcommand("replay", "run the detector over a trace file");
    std::string trace_path;
    replay->add_option("trace", trace_path, "JSON-lines trace file")->required();
    replay->add_option("--config", opts.config_path, "JSON config file");
    replay->add_flag("--json", opts.json, "JSON-lines output");

    auto* simulate = app.add_subcommand("simulate", "write synthetic trace files");
    std::string profile_name, out_path;
    bool builtin_flag = false;
    double duration = 0.0;
    std::uint64_t sim_seed = 0;
    int pid = 4242;
    simulate->add_option("--profile", profile_name, "workload kind");
    simulate->add_flag("--builtin-corpus", builtin_flag, "write the 18-trace labeled corpus");
    simulate->add_option("--duration", duration, "trace duration, seconds");
    simulate->add_option("--seed", sim_seed, "generator seed");
    simulate->add_option("--pid", pid, "pid recorded in the trace");
    simulate->add_option("-o,--output", out_path, "output file (or directory for corpus)")
        ->required();

    auto* evaluate = app.add_subcommand("evaluate", "detection rates over a labeled corpus");
    std::string corpus = "builtin";
    std::uint64_t eval_seed = 7;
    evaluate->add_option("--corpus", corpus, "manifest path or \"builtin\"");
    evaluate->add_option("--seed", eval_seed, "builtin corpus seed");
    evaluate->add_option("--config", opts.config_path, "JSON config file");
    evaluate->add_flag("--json", opts.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (watch->parsed()) return run_watch(opts, interval, window);
        if (replay->parsed()) return run_replay(opts, trace_path);
        if (simulate->parsed()) {
            if (!builtin_flag && profile_name.empty()) {
                std::cerr << "simulate needs --profile <kind> or --builtin-corpus\n";
                return 1;
            }
            return run_simulate(profile_name, builtin_flag, duration, sim_seed, pid, out_path);
        }
        if (evaluate->parsed()) return run_evaluate(opts, corpus, eval_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
