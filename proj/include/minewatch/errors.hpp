#pragma once

#include <stdexcept>
#include <string>

namespace minewatch {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// metrics-core
class NonMonotonicTime : public Error {
public:
    NonMonotonicTime(int pid, double t_prev, double t_new)
        : Error("non-monotonic timestamp for pid " + std::to_string(pid) + ": " +
                std::to_string(t_new) + " after " + std::to_string(t_prev)),
          pid(pid) {}
    NonMonotonicTime(int pid, std::size_t line_no)
        : Error("non-monotonic timestamp for pid " + std::to_string(pid) +
                " at line " + std::to_string(line_no)),
          pid(pid), line_no(line_no) {}
    int pid = 0;
    std::size_t line_no = 0;
};

class PidMismatch : public Error {
public:
    PidMismatch(int window_pid, int sample_pid)
        : Error("sample pid " + std::to_string(sample_pid) +
                " pushed into window for pid " + std::to_string(window_pid)) {}
};

class EmptySeries : public Error {
public:
    EmptySeries() : Error("statistic requested over an empty series") {}
};

class EmptyWindow : public Error {
public:
    explicit EmptyWindow(int pid)
        : Error("stats requested over an empty window for pid " + std::to_string(pid)) {}
};

// metric-sources
class MalformedHeader : public Error {
public:
    explicit MalformedHeader(const std::string& got)
        : Error("malformed header: \"" + got + "\"") {}
};

class UnparsableField : public Error {
public:
    UnparsableField(std::size_t row, const std::string& column, const std::string& token)
        : Error("unparsable field at row " + std::to_string(row) + ", column " + column +
                ": \"" + token + "\""),
          row(row), column(column) {}
    std::size_t row;
    std::string column;
};

class MalformedLine : public Error {
public:
    explicit MalformedLine(std::size_t line_no, const std::string& why = "")
        : Error("malformed line " + std::to_string(line_no) + (why.empty() ? "" : ": " + why)),
          line_no(line_no) {}
    std::size_t line_no;
};

class InvariantViolation : public Error {
public:
    InvariantViolation(std::size_t line_no, const std::string& field)
        : Error("invariant violation at line " + std::to_string(line_no) +
                ", field " + field),
          line_no(line_no), field(field) {}
    std::size_t line_no;
    std::string field;
};

class UnknownGpuIndex : public Error {
public:
    explicit UnknownGpuIndex(int index)
        : Error("row references unknown GPU index " + std::to_string(index)), index(index) {}
    int index;
};

class IoError : public Error {
public:
    IoError(const std::string& path, const std::string& what)
        : Error(path + ": " + what) {}
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace minewatch
