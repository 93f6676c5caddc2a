#include "minewatch/sample.hpp"

namespace minewatch {

void SlidingWindow::push(const MetricSample& s) {
    if (s.pid != pid_) throw PidMismatch(pid_, s.pid);
    if (!samples_.empty() && s.t <= samples_.back().t)
        throw NonMonotonicTime(pid_, samples_.back().t, s.t);
    samples_.push_back(s);
    if (samples_.size() > capacity_) samples_.pop_front();
}

void SlidingWindow::drop_before(double cutoff) {
    while (!samples_.empty() && samples_.front().t < cutoff) samples_.pop_front();
}

}  // namespace minewatch
