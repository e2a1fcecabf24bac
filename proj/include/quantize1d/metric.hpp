#pragma once

#include <optional>
#include <vector>

#include "quantize1d/measure.hpp"

namespace q1d {

/// Finitely supported measure sum_i p_i delta_{x_i} with x nondecreasing.
struct StepApprox {
    std::vector<double> x; // locations, nondecreasing
    std::vector<double> p; // weights, nonnegative, sum 1
    std::optional<double> achieved_distance;
    std::optional<double> r;

    StepApprox() = default;
    StepApprox(std::vector<double> locations, std::vector<double> weights);

    size_t size() const { return x.size(); }
    /// Cumulative weights P_0 = 0 <= ... <= P_n = 1.
    std::vector<double> cumulative() const;
    Measure to_measure() const; // collapses duplicates / zero weights

    static StepApprox uniform_weights(std::vector<double> locations);
};

/// d_r(mu, nu) from the quantile-difference integral. Exact closed forms for
/// r in {1,2} and for kinds with piecewise-affine quantiles; adaptive
/// quadrature otherwise.
double distance_r(const Measure& mu, const StepApprox& nu, double r);

/// Reference implementation: panel-split adaptive quadrature only.
/// err_out, when given, receives the accumulated quadrature error estimate.
double distance_r_quadrature(const Measure& mu, const StepApprox& nu, double r,
                             double* err_out = nullptr);

/// Exact d_r between two finitely supported measures (merged partition sum).
double distance_r_discrete(const StepApprox& mu, const StepApprox& nu, double r);

} // namespace q1d
