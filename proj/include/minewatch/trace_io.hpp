#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "minewatch/sample.hpp"

namespace minewatch {

/// Reads a JSON-Lines trace file (one object per sample, keys
/// t/pid/name/util/mem_pct/ram_bytes). Validates sample invariants and
/// per-pid monotone timestamps. Throws MalformedLine, InvariantViolation,
/// NonMonotonicTime, IoError.
std::vector<MetricSample> read_trace(const std::string& path);
std::vector<MetricSample> read_trace(std::istream& in, const std::string& origin = "<stream>");

/// Writes samples as JSON-Lines; read_trace(write_trace(x)) == x,
/// numeric fields preserved exactly.
void write_trace(std::span<const MetricSample> samples, const std::string& path);
void write_trace(std::span<const MetricSample> samples, std::ostream& out);

}  // namespace minewatch
