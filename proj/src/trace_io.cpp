#include "minewatch/trace_io.hpp"

#include <fstream>
#include <unordered_map>

#include "json.hpp"

namespace minewatch {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

MetricSample sample_from_json(const json& j, std::size_t line_no) {
    const auto need = [&](const char* key) -> const json& {
        auto it = j.find(key);
        if (it == j.end()) throw MalformedLine(line_no, std::string("missing key ") + key);
        return *it;
    };

    MetricSample s;
    const json& t = need("t");
    const json& pid = need("pid");
    const json& name = need("name");
    const json& util = need("util");
    const json& mem = need("mem_pct");
    const json& ram = need("ram_bytes");
    if (!t.is_number() || !pid.is_number_integer() || !name.is_string() || !util.is_number() ||
        !mem.is_number() || !ram.is_number_integer())
        throw MalformedLine(line_no, "wrong value type");

    s.t = t.get<double>();
    s.pid = pid.get<int>();
    s.name = name.get<std::string>();
    s.util = util.get<double>();
    s.mem_pct = mem.get<double>();
    s.ram_bytes = ram.get<std::int64_t>();

    if (s.t < 0.0) throw InvariantViolation(line_no, "t");
    if (s.pid <= 0) throw InvariantViolation(line_no, "pid");
    if (s.util < 0.0 || s.util > 100.0) throw InvariantViolation(line_no, "util");
    if (s.mem_pct < 0.0 || s.mem_pct > 100.0) throw InvariantViolation(line_no, "mem_pct");
    if (s.ram_bytes < 0) throw InvariantViolation(line_no, "ram_bytes");
    return s;
}

}  // namespace

std::vector<MetricSample> read_trace(std::istream& in, const std::string& origin) {
    std::vector<MetricSample> samples;
    std::unordered_map<int, double> last_t;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) throw MalformedLine(line_no, "not a JSON object");

        MetricSample s = sample_from_json(j, line_no);
        if (auto it = last_t.find(s.pid); it != last_t.end() && s.t <= it->second)
            throw NonMonotonicTime(s.pid, line_no);
        last_t[s.pid] = s.t;
        samples.push_back(std::move(s));
    }
    if (in.bad()) throw IoError(origin, "read failure");
    return samples;
}

std::vector<MetricSample> read_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path, "cannot open for reading");
    return read_trace(in, path);
}

void write_trace(std::span<const MetricSample> samples, std::ostream& out) {
    for (const auto& s : samples) {
        ordered_json j;
        j["t"] = s.t;
        j["pid"] = s.pid;
        j["name"] = s.name;
        j["util"] = s.util;
        j["mem_pct"] = s.mem_pct;
        j["ram_bytes"] = s.ram_bytes;
        out << j.dump() << '\n';
    }
}

void write_trace(std::span<const MetricSample> samples, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError(path, "cannot open for writing");
    write_trace(samples, out);
    out.flush();
    if (!out) throw IoError(path, "write failure");
}

}  // namespace minewatch
