#pragma once

#include <span>

#include "minewatch/sample.hpp"

namespace minewatch {

/// Population standard deviation: sqrt(mean((x - mean(x))^2)).
/// Two-pass; throws EmptySeries when values is empty.
double population_std(std::span<const double> values);

/// Means, population deviations, RAM coefficient of variation and window
/// presence over the buffered samples. Throws EmptyWindow.
WindowStats compute_stats(const SlidingWindow& window);

}  // namespace minewatch
