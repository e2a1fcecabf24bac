#include "quantize1d/step_fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "detail/quadrature.hpp"

namespace q1d {

namespace {
constexpr double kLogClamp = 1e-300;
constexpr int kBisectIters = 200;
constexpr double kBisectTol = 1e-12;
} // namespace

MonotoneSegment::MonotoneSegment(const PiecewiseFunction& f) {
    if (!f.monotone()) throw std::domain_error("MonotoneSegment: function must be nondecreasing");
    own_ = f;
    lo_ = f.domain_min();
    hi_ = f.domain_max();
}

MonotoneSegment::MonotoneSegment(const Measure& mu, double a, double b) {
    if (!(a >= 0.0 && b <= 1.0 && a < b))
        throw std::invalid_argument("MonotoneSegment: need 0 <= a < b <= 1");
    mu_store_ = mu;
    lo_ = a;
    hi_ = b;
}

double MonotoneSegment::value_right_of_lo() const {
    if (pf()) return pf()->value_right_of_min();
    if (lo_ == 0.0) return mu()->support_bounds().first;
    return mu()->quantile(lo_);
}

double MonotoneSegment::value_left_of_hi() const {
    if (pf()) return pf()->value_left_of_max();
    if (hi_ == 1.0) return mu()->support_bounds().second;
    return mu()->quantile_left_limit(hi_);
}

double MonotoneSegment::split_below(double t) const {
    // sup{u in [lo,hi] : F^{-1}(u) <= t}
    return std::clamp(mu()->cdf(t), lo_, hi_);
}

double MonotoneSegment::split_above(double t) const {
    // inf{u in [lo,hi] : F^{-1}(u) >= t}
    return std::clamp(mu()->cdf_left_limit(t), lo_, hi_);
}

double MonotoneSegment::qval(double u) const {
    if (u <= 0.0) return mu()->support_bounds().first;
    if (u >= 1.0) return mu()->support_bounds().second;
    return mu()->quantile(u);
}

double MonotoneSegment::integral_pow_below(double t, double p) const {
    if (pf()) return pf()->integral_pow_below(t, p);
    double u1 = split_above(t); // f < t on [lo, u1)
    if (u1 <= lo_) return 0.0;
    auto g = [&](double u) {
        double d = t - qval(u);
        return d > 0.0 ? std::pow(d, p) : 0.0;
    };
    if (lo_ == 0.0 && !std::isfinite(mu()->support_bounds().first)) {
        // unbounded quantile at 0: substitute u = u1 * e^{-v}
        double bulk = detail::adaptive_gl(g, 0.5 * u1, u1, 1e-11, 0.0, 48);
        auto h = [&](double v) {
            double u = 0.5 * u1 * std::exp(-v);
            return u > 0.0 ? g(u) * u : 0.0;
        };
        double tail = detail::sum_exp_panels(h, 1e-12, std::abs(bulk));
        return bulk + tail;
    }
    return detail::adaptive_gl(g, lo_, u1, 1e-11, 1e-300, 52);
}

double MonotoneSegment::integral_pow_above(double t, double p) const {
    if (pf()) return pf()->integral_pow_above(t, p);
    double u2 = split_below(t); // f > t on (u2, hi]
    if (u2 >= hi_) return 0.0;
    auto g = [&](double u) {
        double d = qval(u) - t;
        return d > 0.0 ? std::pow(d, p) : 0.0;
    };
    if (hi_ == 1.0 && !std::isfinite(mu()->support_bounds().second)) {
        double w = 1.0 - u2;
        double bulk = detail::adaptive_gl(g, u2, 1.0 - 0.5 * w, 1e-11, 0.0, 48);
        auto h = [&](double v) {
            double s = 0.5 * w * std::exp(-v);
            double d = mu()->quantile_complement(s) - t;
            return d > 0.0 ? std::pow(d, p) * s : 0.0;
        };
        double tail = detail::sum_exp_panels(h, 1e-12, std::abs(bulk));
        return bulk + tail;
    }
    return detail::adaptive_gl(g, u2, hi_, 1e-11, 1e-300, 52);
}

double MonotoneSegment::integral_log_leq(double c, double t) const {
    if (pf()) return pf()->integral_log_leq(c, t);
    double u1 = split_below(c);
    if (u1 <= lo_) return 0.0;
    auto g = [&](double u) {
        return std::log(std::max(t - qval(u), kLogClamp));
    };
    return detail::adaptive_gl(g, lo_, u1, 1e-11, 1e-300, 52);
}

double MonotoneSegment::integral_log_geq(double c, double t) const {
    if (pf()) return pf()->integral_log_geq(c, t);
    double u2 = split_above(c);
    if (u2 >= hi_) return 0.0;
    auto g = [&](double u) {
        return std::log(std::max(qval(u) - t, kLogClamp));
    };
    return detail::adaptive_gl(g, u2, hi_, 1e-11, 1e-300, 52);
}

double MonotoneSegment::mean() const {
    if (pf()) {
        double s = 0.0;
        for (auto& p : pf()->pieces())
            s += 0.5 * (p.value(p.a) + p.value(p.b)) * (p.b - p.a);
        return s / pf()->domain_length();
    }
    return mu()->quantile_partial_integral(lo_, hi_) / (hi_ - lo_);
}

double MonotoneSegment::abs_power_norm(double t, double r) const {
    if (pf()) return pf()->abs_power_norm(t, r);
    if (r == 1.0) {
        double m = split_below(t);
        double left = t * (m - lo_) - mu()->quantile_partial_integral(lo_, m);
        double right = mu()->quantile_partial_integral(m, hi_) - t * (hi_ - m);
        return left + right;
    }
    if (r == 2.0) {
        double s1 = mu()->quantile_partial_integral(lo_, hi_);
        double s2 = mu()->quantile_partial_square_integral(lo_, hi_);
        return s2 - 2.0 * t * s1 + t * t * (hi_ - lo_);
    }
    return integral_pow_below(t, r) + integral_pow_above(t, r);
}

Interval MonotoneSegment::balanced_set() const {
    if (pf()) return pf()->balanced_set();
    // B^{f} = Q^{F_mu}_{(lo+hi)/2} for the quantile restriction (clamp inert).
    return mu()->quantile_set_cdf(0.5 * (lo_ + hi_));
}

Interval MonotoneSegment::quantile_set(double c) const {
    if (pf()) return pf()->quantile_set(c);
    Interval q = mu()->quantile_set_quantile(c);
    return {std::clamp(q.lo, lo_, hi_), std::clamp(q.hi, lo_, hi_)};
}

double phi_r_derivative(const MonotoneSegment& f, double t, double r) {
    if (r <= 1.0) throw std::domain_error("phi_r_derivative: r must be > 1");
    return f.integral_pow_below(t, r - 1.0) - f.integral_pow_above(t, r - 1.0);
}

double phi_r_derivative(const PiecewiseFunction& f, double t, double r) {
    if (r <= 1.0) throw std::domain_error("phi_r_derivative: r must be > 1");
    return f.integral_pow_below(t, r - 1.0) - f.integral_pow_above(t, r - 1.0);
}

namespace {

// Shared bracketed bisection on the increasing map t -> D(t).
template <class D>
double bisect_root(const D& deriv, double lo, double hi) {
    double flo = deriv(lo);
    if (flo >= 0.0) return lo;
    double fhi = deriv(hi);
    if (fhi <= 0.0) return hi;
    for (int it = 0; it < kBisectIters && hi - lo > kBisectTol * (1.0 + std::abs(lo) + std::abs(hi));
         ++it) {
        double mid = 0.5 * (lo + hi);
        if (deriv(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Bracket for tau_r when an endpoint value is infinite: expand around a
// finite center until the derivative changes sign.
template <class D>
std::pair<double, double> expand_bracket(const D& deriv, double center, double width) {
    double lo = center - width, hi = center + width;
    for (int it = 0; it < 200 && deriv(lo) > 0.0; ++it) lo -= (center - lo);
    for (int it = 0; it < 200 && deriv(hi) < 0.0; ++it) hi += (hi - center);
    return {lo, hi};
}

template <class Seg>
TauResult tau_r_impl(const Seg& f, double r, Interval b_set, double v_lo, double v_hi,
                     double mean) {
    if (r < 1.0) throw std::domain_error("tau_r: r must be >= 1");
    TauResult out;
    out.r = r;
    if (r == 1.0) {
        out.minimizers = b_set;
        out.value = b_set.midpoint();
        out.residual_norm = f.abs_power_norm(out.value, 1.0);
        return out;
    }
    double t;
    if (r == 2.0) {
        t = mean;
    } else {
        auto deriv = [&](double u) { return phi_r_derivative(f, u, r); };
        double lo = v_lo, hi = v_hi;
        if (!std::isfinite(lo) || !std::isfinite(hi)) {
            auto [l, h] = expand_bracket(deriv, mean, 1.0 + std::abs(mean));
            lo = l;
            hi = h;
        }
        t = bisect_root(deriv, lo, hi);
    }
    out.value = t;
    out.minimizers = {t, t};
    out.residual_norm = std::pow(f.abs_power_norm(t, r), 1.0 / r);
    return out;
}

template <class Seg>
double tau_one_plus_impl(const Seg& f, Interval b) {
    double scale = 1.0 + std::abs(b.lo) + std::abs(b.hi);
    if (b.width() <= 1e-14 * scale) return b.midpoint();
    double eps = std::max(b.width() * 1e-9, 1e-14 * scale);
    auto psi = [&](double t) {
        return f.integral_log_leq(b.lo, t) - f.integral_log_geq(b.hi, t);
    };
    double t1 = b.lo + eps, t2 = b.hi - eps;
    double p1 = psi(t1), p2 = psi(t2);
    if (p1 > 0.0) return b.lo;  // Psi positive throughout the interior
    if (p2 < 0.0) return b.hi;  // Psi negative throughout
    double lo = t1, hi = t2;
    for (int it = 0; it < kBisectIters && hi - lo > kBisectTol * scale; ++it) {
        double mid = 0.5 * (lo + hi);
        if (psi(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TauResult tau_r(const MonotoneSegment& f, double r) {
    return tau_r_impl(f, r, f.balanced_set(), f.value_right_of_lo(), f.value_left_of_hi(),
                      f.mean());
}

TauResult tau_r(const PiecewiseFunction& f, double r) {
    double s = 0.0;
    for (auto& p : f.pieces())
        s += 0.5 * (p.value(p.a) + p.value(p.b)) * (p.b - p.a);
    double mean = s / f.domain_length();
    return tau_r_impl(f, r, f.balanced_set(), f.min_value(), f.max_value(), mean);
}

double tau_one_plus(const MonotoneSegment& f) { return tau_one_plus_impl(f, f.balanced_set()); }
double tau_one_plus(const PiecewiseFunction& f) { return tau_one_plus_impl(f, f.balanced_set()); }

double tau_infinity(const MonotoneSegment& f) {
    double a = f.value_right_of_lo(), b = f.value_left_of_hi();
    if (!std::isfinite(a) && !std::isfinite(b))
        throw std::domain_error("tau_infinity: f unbounded on both sides");
    return 0.5 * (a + b);
}

double tau_infinity(const PiecewiseFunction& f) {
    return 0.5 * (f.min_value() + f.max_value());
}

Interval best_single_jump(const MonotoneSegment& f, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("best_single_jump: need a < b");
    return f.quantile_set(0.5 * (a + b));
}

} // namespace q1d
