#pragma once

#include <optional>

#include "quantize1d/interval.hpp"
#include "quantize1d/measure.hpp"
#include "quantize1d/piecewise.hpp"

namespace q1d {

/// Nondecreasing function on a bounded interval: either a monotone
/// PiecewiseFunction, or a measure quantile restricted to [a,b] in [0,1].
class MonotoneSegment {
public:
    MonotoneSegment(const PiecewiseFunction& f);                         // monotone required
    MonotoneSegment(const Measure& mu, double a, double b);              // F^{-1}|_[a,b]

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double length() const { return hi_ - lo_; }
    double value_right_of_lo() const; // f(lo+)
    double value_left_of_hi() const;  // f(hi-)

    /// int over {f < t} of (t - f)^p dx
    double integral_pow_below(double t, double p) const;
    /// int over {f > t} of (f - t)^p dx
    double integral_pow_above(double t, double p) const;
    /// int over {f <= c} of log(t - f) dx
    double integral_log_leq(double c, double t) const;
    /// int over {f >= c} of log(f - t) dx
    double integral_log_geq(double c, double t) const;
    /// ||f - t||_r^r (exact for piecewise; exact for r in {1,2} on quantile
    /// segments, quadrature otherwise)
    double abs_power_norm(double t, double r) const;
    /// Mean of f over the segment.
    double mean() const;

    /// Minimizer set of t -> ||f - t||_1 (the balanced set).
    Interval balanced_set() const;
    /// Q_c^f restricted to the segment domain.
    Interval quantile_set(double c) const;

    bool is_quantile_backed() const { return mu_store_.has_value(); }

private:
    std::optional<PiecewiseFunction> own_;
    std::optional<Measure> mu_store_;
    double lo_ = 0.0, hi_ = 1.0;

    const PiecewiseFunction* pf() const { return own_ ? &*own_ : nullptr; }
    const Measure* mu() const { return &*mu_store_; }
    double qval(double u) const; // quantile with boundary-safe limits

    // positions where the quantile passes level t within [lo_, hi_]
    double split_below(double t) const; // sup{u in [lo,hi]: f(u) <= t}... see impl
    double split_above(double t) const;
};

/// Best constant approximation of f in L^r.
struct TauResult {
    double r = 2.0;
    double value = 0.0;        // unique minimizer (r>1); midpoint of the set (r=1)
    Interval minimizers;       // full minimizer set (non-degenerate only for r=1)
    double residual_norm = 0.0; // ||f - value||_r
};

/// Derivative (up to the positive factor lambda(I)/r) of t -> ||f-t||_r^r:
/// int_{f<t}(t-f)^{r-1} - int_{f>t}(f-t)^{r-1}; strictly increasing in t.
double phi_r_derivative(const MonotoneSegment& f, double t, double r);
double phi_r_derivative(const PiecewiseFunction& f, double t, double r);

TauResult tau_r(const MonotoneSegment& f, double r);
TauResult tau_r(const PiecewiseFunction& f, double r); // monotonicity not required

double tau_one_plus(const MonotoneSegment& f);
double tau_one_plus(const PiecewiseFunction& f);

double tau_infinity(const MonotoneSegment& f);
double tau_infinity(const PiecewiseFunction& f);

/// Minimizer set of xi -> ||f - (a 1_[min I, xi) + b 1_[xi, max I])||_r for
/// nondecreasing f: the quantile set Q^f_{(a+b)/2}. Throws for non-monotone f.
Interval best_single_jump(const MonotoneSegment& f, double a, double b);

} // namespace q1d
