#pragma once

#include <cstdint>
#include <vector>

#include "quantize1d/constrained.hpp"
#include "quantize1d/measure.hpp"
#include "quantize1d/metric.hpp"

namespace q1d {

struct SolverConfig {
    int starts = 16;
    std::uint64_t seed = 0;
    int max_iterations = 10000;
    double convergence_tol = 1e-12; // relative change of d_r^r
    Selector selector = Selector::max_point; // for the locations half-step
};

/// One alternation: weights update given x, then locations update given p.
/// d_r never increases (each half-step is an exact constrained minimization).
StepApprox lloyd_step(const Measure& mu, const StepApprox& approx, double r,
                      Selector sel = Selector::max_point);

struct FreeResult {
    StepApprox best;
    std::vector<StepApprox> candidates; // distinct converged fixed points, by d_r
    std::vector<int> unconverged_starts; // start indices that hit max_iterations
    int starts_converged = 0;
    int starts_total = 0;
};

/// Best unconstrained n-point r-approximation via multistart Lloyd alternation.
FreeResult best_free(const Measure& mu, int n, double r, const SolverConfig& cfg = {});

/// Independent grid oracle for n <= 3: multi-level refined grid search over
/// locations and cumulative weights, final grid step <= resolution.
StepApprox brute_force_oracle(const Measure& mu, int n, double r, double resolution);

} // namespace q1d
