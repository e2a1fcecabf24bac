#pragma once

#include <limits>

namespace q1d {

/// Closed interval [lo, hi]; endpoints may be +-infinity.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool is_point(double tol = 0.0) const { return hi - lo <= tol; }
    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }
};

inline constexpr double inf = std::numeric_limits<double>::infinity();

} // namespace q1d
