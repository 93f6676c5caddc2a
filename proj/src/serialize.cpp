#include "minewatch/serialize.hpp"

namespace minewatch {

using nlohmann::ordered_json;

ordered_json stats_to_json(const WindowStats& st) {
    ordered_json j;
    j["n"] = st.n;
    j["util_mean"] = st.util_mean;
    j["util_std"] = st.util_std;
    j["mem_pct_mean"] = st.mem_pct_mean;
    j["ram_mean"] = st.ram_mean;
    j["ram_std"] = st.ram_std;
    j["ram_cv"] = st.ram_cv;
    j["presence"] = st.presence;
    return j;
}

ordered_json alert_to_json(const Alert& a) {
    ordered_json j;
    j["event"] = "alert";
    j["pid"] = a.pid;
    j["name"] = a.name;
    j["first_t"] = a.first_t;
    j["last_t"] = a.last_t;
    auto reasons = ordered_json::array();
    for (Reason r : a.reasons) reasons.push_back(std::string(reason_code(r)));
    j["reasons"] = std::move(reasons);
    j["stats"] = stats_to_json(a.stats);
    return j;
}

ordered_json report_to_json(const EvalReport& r) {
    ordered_json j;
    j["event"] = "report";
    auto sets = ordered_json::array();
    for (const auto& s : r.sets)
        sets.push_back({{"set", s.set_name}, {"total", s.total}, {"detected", s.detected}});
    j["sets"] = std::move(sets);
    j["false_positives"] = r.false_positives;
    auto traces = ordered_json::array();
    for (const auto& t : r.traces)
        traces.push_back({{"id", t.id},
                          {"set", t.set_name},
                          {"label", t.label},
                          {"detected", t.detected},
                          {"alerts", t.alert_count}});
    j["traces"] = std::move(traces);
    return j;
}

}  // namespace minewatch
