#include "minewatch/live.hpp"

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "minewatch/errors.hpp"

namespace minewatch {

std::int64_t ram_of(int pid) {
#ifdef __linux__
    // VmRSS from /proc/<pid>/status, in kB.
    std::ifstream in("/proc/" + std::to_string(pid) + "/status");
    if (!in) return 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("VmRSS:", 0) != 0) continue;
        std::istringstream fields(line.substr(6));
        std::int64_t kb = 0;
        fields >> kb;
        return kb > 0 ? kb * 1024 : 0;
    }
#else
    (void)pid;
#endif
    return 0;
}

std::string run_command(const std::string& cmd) {
    struct PipeCloser {
        void operator()(FILE* f) const { pclose(f); }
    };
    std::unique_ptr<FILE, PipeCloser> pipe(popen(cmd.c_str(), "r"));
    if (!pipe) throw IoError(cmd, "cannot start command");

    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, n);
    return out;
}

std::vector<GpuInfo> CommandSource::query_gpus() const {
    return parse_query_gpu_csv(run_command(query_cmd_));
}

SourceSnapshot CommandSource::poll(double t) const {
    SourceSnapshot snap;
    snap.t = t;
    snap.rows = parse_pmon_block(run_command(pmon_cmd_));
    for (const auto& row : snap.rows)
        if (!snap.ram_by_pid.contains(row.pid)) snap.ram_by_pid[row.pid] = ram_of(row.pid);
    return snap;
}

}  // namespace minewatch
