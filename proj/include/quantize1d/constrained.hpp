#pragma once

#include <vector>

#include "quantize1d/measure.hpp"
#include "quantize1d/metric.hpp"

namespace q1d {

/// Which point of a non-degenerate optimal quantile set to report.
enum class Selector { min_point, max_point, midpoint };

/// Best r-approximation of mu with prescribed atom locations x: cumulative
/// weights P_i taken from Q^{F^{-1}}_{(x_i + x_{i+1})/2}. Duplicate locations
/// are collapsed before solving and re-expanded after.
StepApprox best_given_locations(const Measure& mu, std::vector<double> x, double r,
                                Selector sel = Selector::max_point);

/// Best r-approximation with prescribed weights p: atoms from
/// Q^{F}_{(P_{i-1}+P_i)/2} for r = 1 (default selector min_point keeps them in
/// supp mu), conditional quantile means for r = 2, tau_r per segment otherwise.
StepApprox best_given_weights(const Measure& mu, std::vector<double> p, double r,
                              Selector sel = Selector::min_point);

/// Equal weights 1/n.
StepApprox best_uniform(const Measure& mu, int n, double r,
                        Selector sel = Selector::min_point);

enum class OrderingMode { all_permutations, sorted_only };

/// Minimize over atom orderings: solve best_given_weights for permutations of
/// p and keep the best. all_permutations is guarded to n <= 9.
StepApprox best_weights_over_orderings(const Measure& mu, std::vector<double> p, double r,
                                       OrderingMode mode = OrderingMode::all_permutations,
                                       Selector sel = Selector::min_point);

} // namespace q1d
