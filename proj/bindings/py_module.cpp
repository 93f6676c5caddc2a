#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minewatch/config.hpp"
#include "minewatch/detector.hpp"
#include "minewatch/evaluate.hpp"
#include "minewatch/simulator.hpp"
#include "minewatch/stats.hpp"
#include "minewatch/trace_io.hpp"

namespace py = pybind11;
using namespace minewatch;

PYBIND11_MODULE(_minewatch, m) {
    m.doc() = "Behavioral GPU cryptojacking detector";

    py::register_exception<Error>(m, "MinewatchError", PyExc_RuntimeError);

    py::class_<MetricSample>(m, "MetricSample")
        .def(py::init([](double t, int pid, std::string name, double util, double mem_pct,
                         std::int64_t ram_bytes) {
                 return MetricSample{t, pid, std::move(name), util, mem_pct, ram_bytes};
             }),
             py::arg("t"), py::arg("pid"), py::arg("name") = "", py::arg("util") = 0.0,
             py::arg("mem_pct") = 0.0, py::arg("ram_bytes") = 0)
        .def_readwrite("t", &MetricSample::t)
        .def_readwrite("pid", &MetricSample::pid)
        .def_readwrite("name", &MetricSample::name)
        .def_readwrite("util", &MetricSample::util)
        .def_readwrite("mem_pct", &MetricSample::mem_pct)
        .def_readwrite("ram_bytes", &MetricSample::ram_bytes)
        .def("__eq__", [](const MetricSample& a, const MetricSample& b) { return a == b; })
        .def("__repr__", [](const MetricSample& s) {
            return "MetricSample(t=" + std::to_string(s.t) + ", pid=" + std::to_string(s.pid) +
                   ", util=" + std::to_string(s.util) + ")";
        });

    py::class_<SlidingWindow>(m, "SlidingWindow")
        .def(py::init<int, std::size_t, double>(), py::arg("pid"), py::arg("capacity") = 60,
             py::arg("expected_period") = 1.0)
        .def("push", &SlidingWindow::push)
        .def("drop_before", &SlidingWindow::drop_before)
        .def_property_readonly("pid", &SlidingWindow::pid)
        .def_property_readonly("capacity", &SlidingWindow::capacity)
        .def("__len__", &SlidingWindow::size)
        .def("samples", [](const SlidingWindow& w) {
            return std::vector<MetricSample>(w.samples().begin(), w.samples().end());
        });

    py::class_<WindowStats>(m, "WindowStats")
        .def(py::init<>())
        .def_readwrite("pid", &WindowStats::pid)
        .def_readwrite("n", &WindowStats::n)
        .def_readwrite("util_mean", &WindowStats::util_mean)
        .def_readwrite("util_std", &WindowStats::util_std)
        .def_readwrite("mem_pct_mean", &WindowStats::mem_pct_mean)
        .def_readwrite("ram_mean", &WindowStats::ram_mean)
        .def_readwrite("ram_std", &WindowStats::ram_std)
        .def_readwrite("ram_cv", &WindowStats::ram_cv)
        .def_readwrite("presence", &WindowStats::presence);

    m.def("population_std", [](const std::vector<double>& v) {
        return population_std(std::span<const double>(v));
    });
    m.def("compute_stats", &compute_stats);

    py::class_<Thresholds>(m, "Thresholds")
        .def(py::init<>())
        .def_readwrite("util_min", &Thresholds::util_min)
        .def_readwrite("mem_min", &Thresholds::mem_min)
        .def_readwrite("util_std_max", &Thresholds::util_std_max)
        .def_readwrite("ram_cv_max", &Thresholds::ram_cv_max)
        .def_readwrite("min_presence", &Thresholds::min_presence)
        .def_readwrite("consecutive_windows", &Thresholds::consecutive_windows)
        .def_readwrite("alert_cooldown_s", &Thresholds::alert_cooldown_s)
        .def_readwrite("strict_ram", &Thresholds::strict_ram)
        .def_readwrite("ram_min", &Thresholds::ram_min)
        .def_readwrite("ram_max", &Thresholds::ram_max);

    py::enum_<Outcome>(m, "Outcome")
        .value("Suspicious", Outcome::Suspicious)
        .value("Benign", Outcome::Benign)
        .value("Indeterminate", Outcome::Indeterminate);

    py::class_<Verdict>(m, "Verdict")
        .def_readonly("pid", &Verdict::pid)
        .def_readonly("outcome", &Verdict::outcome)
        .def_readonly("stats", &Verdict::stats)
        .def_property_readonly("reasons", [](const Verdict& v) {
            std::vector<std::string> out;
            for (Reason r : v.reasons) out.emplace_back(reason_code(r));
            return out;
        });

    py::class_<Alert>(m, "Alert")
        .def_readonly("pid", &Alert::pid)
        .def_readonly("name", &Alert::name)
        .def_readonly("first_t", &Alert::first_t)
        .def_readonly("last_t", &Alert::last_t)
        .def_readonly("stats", &Alert::stats)
        .def_property_readonly("reasons", [](const Alert& a) {
            std::vector<std::string> out;
            for (Reason r : a.reasons) out.emplace_back(reason_code(r));
            return out;
        });

    m.def("classify_window", &classify_window, py::arg("stats"), py::arg("thresholds"));

    py::class_<DetectionEngine>(m, "DetectionEngine")
        .def(py::init<Thresholds, std::size_t, double>(), py::arg("thresholds"),
             py::arg("window_capacity") = 60, py::arg("expected_period") = 1.0)
        .def("observe", &DetectionEngine::observe)
        .def("tick", &DetectionEngine::tick);

    py::class_<TraceProfile>(m, "TraceProfile")
        .def_readwrite("util_base", &TraceProfile::util_base)
        .def_readwrite("util_jitter_sd", &TraceProfile::util_jitter_sd)
        .def_readwrite("mem_pct_base", &TraceProfile::mem_pct_base)
        .def_readwrite("mem_pct_jitter_sd", &TraceProfile::mem_pct_jitter_sd)
        .def_readwrite("ram_base", &TraceProfile::ram_base)
        .def_readwrite("ram_jitter_sd", &TraceProfile::ram_jitter_sd)
        .def_readwrite("duration_s", &TraceProfile::duration_s)
        .def_readwrite("period_s", &TraceProfile::period_s)
        .def_property_readonly("kind", [](const TraceProfile& p) {
            return std::string(profile_kind_name(p.kind));
        });

    m.def("default_profile", [](const std::string& kind) {
        auto k = parse_profile_kind(kind);
        if (!k) throw Error("unknown profile kind: " + kind);
        return default_profile(*k);
    });
    m.def("profile_kinds", [] {
        std::vector<std::string> out;
        for (ProfileKind k : all_profile_kinds()) out.emplace_back(profile_kind_name(k));
        return out;
    });
    m.def("gen_trace", &gen_trace, py::arg("profile"), py::arg("pid"), py::arg("seed"));

    py::class_<SetCount>(m, "SetCount")
        .def_readonly("set_name", &SetCount::set_name)
        .def_readonly("total", &SetCount::total)
        .def_readonly("detected", &SetCount::detected);

    py::class_<TraceResult>(m, "TraceResult")
        .def_readonly("id", &TraceResult::id)
        .def_readonly("set_name", &TraceResult::set_name)
        .def_readonly("label", &TraceResult::label)
        .def_readonly("detected", &TraceResult::detected)
        .def_readonly("alert_count", &TraceResult::alert_count);

    py::class_<EvalReport>(m, "EvalReport")
        .def_readonly("sets", &EvalReport::sets)
        .def_readonly("false_positives", &EvalReport::false_positives)
        .def_readonly("traces", &EvalReport::traces);

    m.def(
        "evaluate_builtin",
        [](std::uint64_t seed, const Thresholds& th, std::size_t window_capacity) {
            return evaluate_corpus(generate_builtin_corpus(seed), th, window_capacity);
        },
        py::arg("seed") = 7, py::arg("thresholds") = Thresholds{},
        py::arg("window_capacity") = 60);
    m.def(
        "evaluate_manifest",
        [](const std::string& path, const Thresholds& th, std::size_t window_capacity) {
            return evaluate_corpus(load_corpus_manifest(path), th, window_capacity);
        },
        py::arg("path"), py::arg("thresholds") = Thresholds{}, py::arg("window_capacity") = 60);
    m.def("write_builtin_corpus", &write_builtin_corpus, py::arg("seed"), py::arg("dir"));

    m.def("read_trace", [](const std::string& path) { return read_trace(path); });
    m.def("write_trace", [](const std::vector<MetricSample>& samples, const std::string& path) {
        write_trace(samples, path);
    });
}
