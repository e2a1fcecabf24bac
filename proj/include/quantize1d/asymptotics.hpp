#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quantize1d/measure.hpp"
#include "quantize1d/unconstrained.hpp"

namespace q1d {

enum class Regime { uniform, free, locations_scheme, weights_scheme, asym_scheme };

std::string regime_name(Regime r);
Regime regime_from_name(const std::string& name);

struct RateSeries {
    std::vector<int> n_values;
    std::vector<double> d_values;
    Regime regime = Regime::uniform;
    double r = 2.0;
    double fitted_exponent = 0.0; // slope of log d vs log n (top half of n)
    double fitted_constant = 0.0; // d ~ constant * n^exponent
    double fit_residual = 0.0;    // rms residual of the fit in log space
    std::optional<double> log_correction_exponent; // fixed at +-1/2 when used

    std::string to_csv() const; // header: n,d_r,n_times_d,n_pow_fit
};

struct SweepOptions {
    SolverConfig solver;                                    // for the free regime
    std::optional<double> log_correction;                   // fit with (log n)^c term
    std::function<std::vector<double>(int)> locations_for_n; // locations_scheme override
};

/// d_r per n under the chosen regime, with a power-law fit over the top half.
RateSeries rate_sweep(const Measure& mu, double r, Regime regime, std::vector<int> n_values,
                      const SweepOptions& opt = {});

/// lim n d_r(best uniform) for absolutely continuous inverse measures:
/// (1/(2(r+1)^{1/r})) * || d mu^{-1} / d lambda ||_r; +inf when divergent.
double th6_limit(const Measure& mu, double r);

/// lim n d_r(best n-point): (1/(2(r+1)^{1/r})) (int rho_a^{1/(r+1)})^{(r+1)/r}.
double zador_limit(const Measure& mu, double r);

/// Whether the tilted quantile below has a closed form for this kind.
bool has_tilted_quantile(const Measure& mu);
/// Quantile of the tilted measure with density proportional to rho^{1/(r+1)}.
double tilted_quantile(const Measure& mu, double r, double u);
/// Locations x_{n,i} = F_{mu_r}^{-1}(i/(n+1)), i = 1..n.
std::vector<double> asym_best_locations(const Measure& mu, int n, double r);

/// Least-squares slope of log n against -log d over the top half of a series.
double quantization_dimension(const RateSeries& series, double* residual = nullptr);

/// Discrete measure realizing d_r(best n-point) >= a_n: envelope the target
/// sequence (decreasing, with decreasing r-th power differences), then place
/// dyadically separated atoms; truncated at K atoms and renormalized.
Measure slow_decay_measure(const std::vector<double>& a, double r, int K);

} // namespace q1d
