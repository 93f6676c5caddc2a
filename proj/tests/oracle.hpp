// Independent brute-force statistics used to check the production path.
#pragma once

#include <cmath>
#include <vector>

namespace oracle {

inline double mean(const std::vector<double>& v) {
    long double acc = 0.0L;
    for (double x : v) acc += x;
    return static_cast<double>(acc / static_cast<long double>(v.size()));
}

inline double population_std(const std::vector<double>& v) {
    const long double m = mean(v);
    long double acc = 0.0L;
    for (double x : v) {
        const long double d = static_cast<long double>(x) - m;
        acc += d * d;
    }
    return static_cast<double>(std::sqrt(acc / static_cast<long double>(v.size())));
}

}  // namespace oracle
