#include "minewatch/sources.hpp"

#include <algorithm>
#include <charconv>

namespace minewatch {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

template <typename T>
bool parse_num(std::string_view tok, T& out) {
    const auto* end = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(tok.data(), end, out);
    return ec == std::errc{} && p == end;
}

}  // namespace

std::vector<GpuInfo> parse_query_gpu_csv(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw MalformedHeader("");

    // Header: `index, memory.total [MiB]`
    std::string_view header = trim(lines[0]);
    const auto comma = header.find(',');
    if (comma == std::string_view::npos || trim(header.substr(0, comma)) != "index" ||
        trim(header.substr(comma + 1)) != "memory.total [MiB]")
        throw MalformedHeader(std::string(header));

    std::vector<GpuInfo> gpus;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string_view line = trim(lines[i]);
        if (line.empty()) continue;
        const auto c = line.find(',');
        if (c == std::string_view::npos) throw UnparsableField(i, "memory.total", std::string(line));

        GpuInfo g;
        const std::string_view idx_tok = trim(line.substr(0, c));
        if (!parse_num(idx_tok, g.index) || g.index < 0)
            throw UnparsableField(i, "index", std::string(idx_tok));

        // `12288 MiB` or bare `12288`
        std::string_view mem_tok = trim(line.substr(c + 1));
        if (mem_tok.ends_with("MiB")) mem_tok = trim(mem_tok.substr(0, mem_tok.size() - 3));
        if (!parse_num(mem_tok, g.total_mem_mib) || g.total_mem_mib <= 0)
            throw UnparsableField(i, "memory.total", std::string(mem_tok));
        gpus.push_back(g);
    }
    return gpus;
}

std::vector<PmonRow> parse_pmon_block(std::string_view text) {
    // Columns: gpu pid type sm mem enc dec fb command; `-` means absent.
    std::vector<PmonRow> rows;
    std::size_t line_no = 0;
    for (std::string_view raw : split_lines(text)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        const auto toks = split_ws(line);
        if (toks.size() < 9) throw UnparsableField(line_no, "command", std::string(line));

        PmonRow row;
        if (!parse_num(toks[0], row.gpu_index) || row.gpu_index < 0)
            throw UnparsableField(line_no, "gpu", std::string(toks[0]));
        if (!parse_num(toks[1], row.pid) || row.pid <= 0)
            throw UnparsableField(line_no, "pid", std::string(toks[1]));

        const auto optional_pct = [&](std::string_view tok, const char* col) -> std::optional<double> {
            if (tok == "-") return std::nullopt;
            double v;
            if (!parse_num(tok, v) || v < 0.0) throw UnparsableField(line_no, col, std::string(tok));
            return v;
        };
        row.sm_pct = optional_pct(toks[3], "sm");
        if (row.sm_pct && *row.sm_pct > 100.0)
            throw UnparsableField(line_no, "sm", std::string(toks[3]));
        row.fb_mib = optional_pct(toks[7], "fb");

        // command may contain spaces
        std::string name(toks[8]);
        for (std::size_t i = 9; i < toks.size(); ++i) {
            name += ' ';
            name += toks[i];
        }
        if (name == "-") name.clear();
        row.name = std::move(name);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<MetricSample> snapshot_to_samples(const SourceSnapshot& snap,
                                              const std::vector<GpuInfo>& gpus,
                                              std::size_t* clamped) {
    std::vector<MetricSample> out;
    for (const auto& row : snap.rows) {
        if (!row.sm_pct) continue;  // no fabricated zero samples

        const auto gpu = std::find_if(gpus.begin(), gpus.end(),
                                      [&](const GpuInfo& g) { return g.index == row.gpu_index; });
        if (gpu == gpus.end()) throw UnknownGpuIndex(row.gpu_index);

        MetricSample s;
        s.t = snap.t;
        s.pid = row.pid;
        s.name = row.name;
        s.util = *row.sm_pct;
        if (row.fb_mib) {
            double pct = 100.0 * *row.fb_mib / static_cast<double>(gpu->total_mem_mib);
            if (pct > 100.0) {  // driver reporting races can momentarily overshoot
                pct = 100.0;
                if (clamped) ++*clamped;
            }
            s.mem_pct = pct;
        }
        if (auto it = snap.ram_by_pid.find(row.pid); it != snap.ram_by_pid.end())
            s.ram_bytes = it->second;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace minewatch
