#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

namespace q1d::detail {

// 15-point Gauss-Legendre nodes/weights on [-1,1] (positive half; symmetric).
inline constexpr double gl15_x[8] = {
    0.0,
    0.2011940939974345223006283,
    0.3941513470775633698972074,
    0.5709721726085388475372267,
    0.7244177313601700474161861,
    0.8482065834104272162006483,
    0.9372733924007059043077589,
    0.9879925180204854284895657,
};
inline constexpr double gl15_w[8] = {
    0.2025782419255612728806202,
    0.1984314853271115764561183,
    0.1861610000155622110268006,
    0.1662692058169939335532009,
    0.1395706779261543144478048,
    0.1071592204671719350118695,
    0.0703660474881081247092674,
    0.0307532419961172683546284,
};

template <class F>
double gl15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = gl15_w[0] * f(c);
    for (int i = 1; i < 8; ++i) {
        double dx = h * gl15_x[i];
        s += gl15_w[i] * (f(c + dx) + f(c - dx));
    }
    return s * h;
}

/// Adaptive bisection on top of GL15: refine until the two-half estimate is
/// within tol of the whole-panel estimate. Panels are processed worst-first
/// (priority by the split defect), so the depth cap and the global split
/// budget degrade gracefully on integrands with dense jumps; deferred defects
/// are folded into the error estimate.
template <class F>
double adaptive_gl(const F& f, double a, double b, double rel_tol, double abs_floor,
                   int max_depth, double* err_out = nullptr, long max_splits = 20000) {
    struct Rec {
        double a, b, whole;
        int depth;
        double pri; // |parent split defect|
    };
    auto cmp = [](const Rec& x, const Rec& y) { return x.pri < y.pri; };
    std::priority_queue<Rec, std::vector<Rec>, decltype(cmp)> queue(cmp);
    double whole0 = gl15(f, a, b);
    queue.push({a, b, whole0, 0, std::numeric_limits<double>::infinity()});
    // defects below the round-off of the whole integral are noise; chasing
    // them explodes near integrand zero crossings
    double floor_eff = abs_floor + 1e-15 * std::abs(whole0);
    double total = 0.0, err = 0.0;
    long splits = 0;
    while (!queue.empty()) {
        Rec r = queue.top();
        queue.pop();
        double m = 0.5 * (r.a + r.b);
        double left = gl15(f, r.a, m), right = gl15(f, m, r.b);
        double delta = left + right - r.whole;
        if (std::abs(delta) <= rel_tol * std::abs(left + right) + floor_eff ||
            r.depth >= max_depth || splits >= max_splits) {
            total += left + right;
            err += std::abs(delta);
        } else {
            ++splits;
            queue.push({r.a, m, left, r.depth + 1, std::abs(delta)});
            queue.push({m, r.b, right, r.depth + 1, std::abs(delta)});
        }
    }
    if (err_out) *err_out = err;
    return total;
}

/// Sum of unit-width u-panels of h over [0, inf), for integrands reached via
/// the substitution distance-to-endpoint = w e^{-u}. Panels are accepted with
/// a noise floor tied to `scale0` (arguments like 1-(1-s) carry ~1e-8 relative
/// noise near the endpoint, which must not drive refinement). Stops once the
/// direct or geometrically extrapolated tail is below tolerance; +inf when the
/// contributions fail to decay.
template <class F>
double sum_exp_panels(const F& h, double rel_tol, double scale0, double* err_acc = nullptr,
                      int max_panels = 900) {
    double prev = 0.0, sum = 0.0;
    for (int k = 0; k < max_panels; ++k) {
        double scale = scale0 + std::abs(sum) + 1e-300;
        double perr = 0.0;
        double p = adaptive_gl(h, double(k), double(k + 1), rel_tol, 1e-15 * scale, 10, &perr);
        if (err_acc) *err_acc += perr;
        sum += p;
        scale = scale0 + std::abs(sum) + 1e-300;
        if (std::abs(p) <= rel_tol * scale && k >= 2) return sum;
        if (k >= 6 && std::abs(prev) > 0.0) {
            double rho = std::abs(p) / std::abs(prev);
            if (rho < 0.999) {
                double tail = std::abs(p) * rho / (1.0 - rho);
                if (tail <= rel_tol * scale) return sum + (p > 0 ? tail : -tail);
            } else if (k >= 60) {
                return std::numeric_limits<double>::infinity(); // no decay
            }
        }
        prev = p;
    }
    return std::numeric_limits<double>::infinity();
}

/// Integral over (0,1) of an integrand with possible integrable singularities
/// at the endpoints. gmid(t) evaluates on the bulk [1/4, 3/4]; glo(s) and
/// ghi(s) evaluate at distance s from 0 and from 1 respectively, so callers
/// can avoid the 1-(1-s) cancellation. Returns +inf when divergent.
template <class FMid, class FLo, class FHi>
double integrate_unit_sing(const FMid& gmid, const FLo& glo, const FHi& ghi,
                           double rel_tol = 1e-12) {
    double total = adaptive_gl(gmid, 0.25, 0.75, rel_tol, 0.0, 48);
    auto hlo = [&](double u) {
        double s = 0.25 * std::exp(-u);
        return s > 0.0 ? glo(s) * s : 0.0;
    };
    double part = sum_exp_panels(hlo, rel_tol, std::abs(total));
    if (!std::isfinite(part)) return std::numeric_limits<double>::infinity();
    total += part;
    auto hhi = [&](double u) {
        double s = 0.25 * std::exp(-u);
        return s > 0.0 ? ghi(s) * s : 0.0;
    };
    part = sum_exp_panels(hhi, rel_tol, std::abs(total));
    if (!std::isfinite(part)) return std::numeric_limits<double>::infinity();
    total += part;
    return total;
}

template <class F>
double integrate_unit_with_endpoints(const F& g, double rel_tol = 1e-12) {
    return integrate_unit_sing(
        g, [&](double s) { return g(s); }, [&](double s) { return g(1.0 - s); }, rel_tol);
}

} // namespace q1d::detail
