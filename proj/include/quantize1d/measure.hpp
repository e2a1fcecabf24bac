#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quantize1d/interval.hpp"

namespace q1d {

/// One-dimensional probability measure exposed through its distribution
/// function F and upper quantile function F^{-1}(t) = sup{x : F(x) <= t}.
///
/// All kinds are immutable after construction and cheap to copy; every
/// operation is pure, so a Measure may be shared freely across threads.
class Measure {
public:
    enum class Kind {
        point_mass,
        uniform,
        exponential,      // rate 1
        standard_normal,
        beta_2_1,         // F(x) = x^2 on [0,1]
        discrete,
        lebesgue_plus_atoms,
        piecewise_linear_quantile,
        cantor,
        inverse_cantor,
        slow_decay,       // discrete measure from the slow-decay construction
    };

    static Measure point_mass(double a);
    static Measure uniform(double a, double b);
    static Measure exponential();
    static Measure standard_normal();
    static Measure beta_2_1();
    /// Atoms strictly increasing, weights nonnegative summing to 1 (1e-12).
    static Measure discrete(std::vector<double> atoms, std::vector<double> weights);
    /// intervals: (a, b, mass) uniform pieces; atoms: (x, mass) point masses.
    /// Total mass must be 1 within 1e-12.
    static Measure lebesgue_plus_atoms(std::vector<std::array<double, 3>> intervals,
                                       std::vector<std::pair<double, double>> atoms);
    /// Quantile interpolates the knots (t, value); t strictly increasing in
    /// [0,1], values nondecreasing; constant extension outside the knot range.
    static Measure piecewise_linear_quantile(std::vector<std::pair<double, double>> knots);
    static Measure cantor(int digit_depth = 48);
    static Measure inverse_cantor(int digit_depth = 48);
    /// Discrete measure with the given atoms/weights, tagged as slow_decay;
    /// K records the truncation length used to build it.
    static Measure slow_decay(std::vector<double> atoms, std::vector<double> weights, int K);

    Kind kind() const { return kind_; }
    int digit_depth() const { return digit_depth_; }
    int truncation() const { return truncation_; }

    /// F(x) = mu([-inf, x]); nondecreasing, right-continuous.
    double cdf(double x) const;
    /// F(x-) = mu([-inf, x)).
    double cdf_left_limit(double x) const;
    /// Upper quantile, sup{F <= t}; t in (0,1).
    double quantile(double t) const;
    /// Left limit F^{-1}(t-) for t in (0,1).
    double quantile_left_limit(double t) const;
    /// F^{-1}(1-s) evaluated stably from the upper-tail distance s in (0,1).
    double quantile_complement(double s) const;
    /// Interior t at which the quantile jumps or kinks, when finitely many.
    std::vector<double> quantile_breakpoints() const;
    /// Q_t^F = [inf{F >= t}, sup{F <= t}] for t in [0,1].
    Interval quantile_set_cdf(double t) const;
    /// Q_c^{F^{-1}} = [inf{F^{-1} >= c}, sup{F^{-1} <= c}], a subset of [0,1].
    Interval quantile_set_quantile(double c) const;
    /// (min supp, max supp); infinite for unbounded kinds.
    std::pair<double, double> support_bounds() const;
    /// Number of support points, or -1 when infinite.
    long support_size() const;
    /// int |x|^r dmu; +inf if the tail integral diverges.
    double moment(double r) const;

    /// True when the inverse measure mu^{-1} is absolutely continuous and the
    /// kind provides d mu^{-1}/d lambda = (F^{-1})'.
    bool has_inverse_density() const;
    double inverse_measure_density(double t) const;

    /// Exact S1(a,b) = int_a^b F^{-1}(t) dt.
    double quantile_partial_integral(double a, double b) const;
    /// Exact S2(a,b) = int_a^b F^{-1}(t)^2 dt.
    double quantile_partial_square_integral(double a, double b) const;

    /// Density of the absolutely continuous part at x, when representable.
    bool has_density() const;
    double density(double x) const;

    // Accessors for discrete-like kinds (discrete, slow_decay).
    bool is_discrete() const { return kind_ == Kind::discrete || kind_ == Kind::slow_decay; }
    const std::vector<double>& atoms() const { return atoms_; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<double>& cumulative() const { return cum_; }

    const std::vector<std::array<double, 3>>& intervals() const { return intervals_; }
    const std::vector<std::pair<double, double>>& point_atoms() const { return point_atoms_; }
    const std::vector<std::pair<double, double>>& knots() const { return knots_; }
    double param_a() const { return a_; }
    double param_b() const { return b_; }

private:
    Measure() = default;
    void build_node_table();

    Kind kind_ = Kind::point_mass;
    double a_ = 0.0, b_ = 0.0;
    int digit_depth_ = 48;
    int truncation_ = 0;
    std::vector<double> atoms_, weights_, cum_;
    std::vector<std::array<double, 3>> intervals_;
    std::vector<std::pair<double, double>> point_atoms_;
    std::vector<std::pair<double, double>> knots_;

    // Canonical node table for lebesgue_plus_atoms: nodes_[j] sorted; between
    // nodes the density is dens_[j]; an atom of mass jump_[j] sits at node j.
    // cum_before_[j] = F(nodes_[j]-), cum_after_[j] = F(nodes_[j]).
    std::vector<double> nodes_, dens_, jump_, cum_before_, cum_after_;
};

} // namespace q1d
