#pragma once

#include <vector>

#include "quantize1d/interval.hpp"

namespace q1d {

/// Finitely described real function on a bounded interval: affine pieces on a
/// partition, each half-open [a, b) except the last, which is closed.
class PiecewiseFunction {
public:
    struct Piece {
        double a, b;          // sub-interval
        double slope, icept;  // value = slope * x + icept
        double value(double x) const { return slope * x + icept; }
    };

    /// Pieces must partition [pieces.front().a, pieces.back().b] exactly.
    explicit PiecewiseFunction(std::vector<Piece> pieces);

    /// Convenience: step function with given breakpoints and level values.
    /// breaks has size levels.size()+1.
    static PiecewiseFunction step(const std::vector<double>& breaks,
                                  const std::vector<double>& levels);

    double domain_min() const { return pieces_.front().a; }
    double domain_max() const { return pieces_.back().b; }
    double domain_length() const { return domain_max() - domain_min(); }
    bool monotone() const { return monotone_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    double operator()(double x) const;
    double value_right_of_min() const; // f(min I +)
    double value_left_of_max() const;  // f(max I -)
    double min_value() const { return vmin_; }
    double max_value() const { return vmax_; }

    // Exact Lebesgue measures of level sets.
    double lambda_below(double t) const; // lambda{f < t}
    double lambda_above(double t) const; // lambda{f > t}
    double lambda_equal(double t) const; // lambda{f = t}

    /// ell_f(t) = (min I + max I + lambda{f<t} - lambda{f>t}) / 2.
    double ell(double t) const;
    /// Upper inverse of ell_f at interior x; exact via breakpoint scan.
    double ell_inverse(double x) const;
    /// B^f: the closed interval of balanced values (exact endpoints).
    Interval balanced_set() const;
    /// Maximal disjoint closed intervals of growth points; monotone f only.
    std::vector<Interval> growth_points() const;

    // Exact integrals used by the constant-fit machinery:
    // int over {f < t} of (t - f)^p, and over {f > t} of (f - t)^p.
    double integral_pow_below(double t, double p) const;
    double integral_pow_above(double t, double p) const;
    // int over {f <= c} of log(t - f), and over {f >= c} of log(f - t).
    double integral_log_leq(double c, double t) const;
    double integral_log_geq(double c, double t) const;
    /// int over I of |f - t|^r (exact).
    double abs_power_norm(double t, double r) const;

    /// Q_c^f = [inf{f >= c}, sup{f <= c}] for monotone f.
    Interval quantile_set(double c) const;

private:
    std::vector<Piece> pieces_;
    bool monotone_ = false;
    double vmin_ = 0.0, vmax_ = 0.0;
    std::vector<double> value_breaks_; // sorted distinct piece endpoint values

    // sup / inf inverse of the nondecreasing ell at level x
    double ell_upper_inverse(double x) const;
    double ell_lower_inverse(double x) const;
};

} // namespace q1d
