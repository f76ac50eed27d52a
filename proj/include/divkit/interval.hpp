#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace divkit {

/// Open real interval (lower, upper); bounds may be infinite.
struct Interval {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();

    /// Strict membership: x finite and lower < x < upper.
    bool contains(double x) const { return std::isfinite(x) && x > lower && x < upper; }

    bool bounded_below() const { return std::isfinite(lower); }
    bool bounded_above() const { return std::isfinite(upper); }

    /// An interior point used to seed bracket expansion.
    double interior_seed() const;

    std::string str() const;

    static Interval real_line() { return {}; }
    static Interval positive() { return {0.0, std::numeric_limits<double>::infinity()}; }
    static Interval negative() { return {-std::numeric_limits<double>::infinity(), 0.0}; }
};

} // namespace divkit
