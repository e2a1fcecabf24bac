#include "quantize1d/unconstrained.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "quantize1d/asymptotics.hpp"

namespace q1d {

StepApprox lloyd_step(const Measure& mu, const StepApprox& approx, double r, Selector sel) {
    StepApprox w = best_given_locations(mu, approx.x, r, sel);
    StepApprox out = best_given_weights(mu, w.p, r);
    return out;
}

namespace {

double dist_pow(const Measure& mu, const StepApprox& a, double r) {
    return std::pow(distance_r(mu, a, r), r);
}

bool same_candidate(const StepApprox& a, const StepApprox& b) {
    if (a.size() != b.size()) return false;
    auto Pa = a.cumulative(), Pb = b.cumulative();
    for (size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.x[i] - b.x[i]) > 1e-8) return false;
        if (std::abs(Pa[i + 1] - Pb[i + 1]) > 1e-8) return false;
    }
    return true;
}

} // namespace

FreeResult best_free(const Measure& mu, int n, double r, const SolverConfig& cfg) {
    if (n < 1) throw std::invalid_argument("best_free: n must be positive");
    if (cfg.starts < 1 || cfg.max_iterations < 1)
        throw std::invalid_argument("best_free: bad config");

    const bool tilted = has_tilted_quantile(mu);

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const double jitter_half = 1.0 / (8.0 * n);
    const double t_eps = 1e-9;

    FreeResult result;
    result.starts_total = cfg.starts;
    for (int k = 0; k < cfg.starts; ++k) {
        StepApprox cur;
        if (k == 0) {
            // deterministic start from the best uniform approximation, so the
            // returned optimum never loses to the equal-weights solution
            cur = best_uniform(mu, n, r);
        } else if (k == 1 && mu.is_discrete()) {
            // heaviest support atoms; exact when the support fits in n atoms
            std::vector<size_t> idx(mu.atoms().size());
            for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
                return mu.weights()[a] > mu.weights()[b];
            });
            idx.resize(std::min<size_t>(n, idx.size()));
            std::vector<double> x0;
            for (size_t i : idx) x0.push_back(mu.atoms()[i]);
            while (int(x0.size()) < n) x0.push_back(x0.back());
            std::sort(x0.begin(), x0.end());
            cur = best_given_locations(mu, std::move(x0), r);
        } else {
            // quantile arguments i/(n+1), jittered in quantile space
            std::vector<double> ts(n);
            for (int i = 0; i < n; ++i) {
                double t = double(i + 1) / double(n + 1) + jitter_half * unif(rng);
                ts[i] = std::clamp(t, t_eps, 1.0 - t_eps);
            }
            std::sort(ts.begin(), ts.end());
            std::vector<double> x0(n);
            for (int i = 0; i < n; ++i)
                x0[i] = tilted ? tilted_quantile(mu, r, ts[i]) : mu.quantile(ts[i]);
            cur = best_given_locations(mu, std::move(x0), r);
        }

        double dcur = dist_pow(mu, cur, r);
        bool converged = false;
        for (int it = 0; it < cfg.max_iterations; ++it) {
            StepApprox nxt = lloyd_step(mu, cur, r, cfg.selector);
            double move = 0.0;
            auto Pc = cur.cumulative(), Pn = nxt.cumulative();
            for (int i = 0; i < n; ++i)
                move = std::max(move, std::abs(nxt.x[i] - cur.x[i]) +
                                          std::abs(Pn[i + 1] - Pc[i + 1]));
            cur = std::move(nxt);
            if (move < 1e-15) {
                converged = true;
                break;
            }
            if ((it + 1) % 16 == 0) {
                double dnew = dist_pow(mu, cur, r);
                if (std::abs(dcur - dnew) < cfg.convergence_tol * std::max(dcur, 1e-300)) {
                    converged = true;
                    dcur = dnew;
                    break;
                }
                dcur = dnew;
            }
        }
        if (converged)
            ++result.starts_converged;
        else
            result.unconverged_starts.push_back(k);

        cur.r = r;
        cur.achieved_distance = distance_r(mu, cur, r);
        bool dup = false;
        for (auto& c : result.candidates)
            if (same_candidate(c, cur)) {
                dup = true;
                if (*cur.achieved_distance < *c.achieved_distance) c = cur;
                break;
            }
        if (!dup) result.candidates.push_back(std::move(cur));
    }

    std::sort(result.candidates.begin(), result.candidates.end(),
              [](const StepApprox& a, const StepApprox& b) {
                  if (*a.achieved_distance != *b.achieved_distance)
                      return *a.achieved_distance < *b.achieved_distance;
                  return std::lexicographical_compare(a.x.begin(), a.x.end(), b.x.begin(),
                                                      b.x.end());
              });
    result.best = result.candidates.front();
    return result;
}

StepApprox brute_force_oracle(const Measure& mu, int n, double r, double resolution) {
    if (n < 1 || n > 3) throw std::invalid_argument("brute_force_oracle: n must be in 1..3");
    if (!(resolution > 0.0)) throw std::invalid_argument("brute_force_oracle: bad resolution");

    auto [slo, shi] = mu.support_bounds();
    if (!std::isfinite(slo)) slo = mu.quantile(1e-4);
    if (!std::isfinite(shi)) shi = mu.quantile(1.0 - 1e-4);
    double span = shi - slo;
    if (span <= 0.0) span = 1.0;

    const int grid = 9; // points per axis per level
    const int keep = 4; // distinct grid points refined per level
    const int dims = 2 * n - 1;

    struct Point {
        double d;
        std::vector<double> v; // n locations then n-1 cumulative cuts
    };

    StepApprox best;
    double best_d = inf;
    auto eval = [&](const std::vector<double>& v) {
        std::vector<double> x(v.begin(), v.begin() + n);
        std::sort(x.begin(), x.end());
        std::vector<double> P(n + 1, 0.0);
        P[n] = 1.0;
        for (int i = 0; i + 1 < n; ++i) P[i + 1] = std::clamp(v[n + i], 0.0, 1.0);
        std::sort(P.begin(), P.end());
        std::vector<double> p(n);
        for (int i = 0; i < n; ++i) p[i] = std::max(0.0, P[i + 1] - P[i]);
        StepApprox cand(std::move(x), std::move(p));
        double d = distance_r(mu, cand, r);
        if (d < best_d) {
            best_d = d;
            cand.achieved_distance = d;
            cand.r = r;
            best = cand;
        }
        return d;
    };

    // per-level centers and half-widths; start with one box over everything
    std::vector<std::vector<double>> centers{std::vector<double>(dims)};
    std::vector<double> halfw(dims);
    for (int i = 0; i < n; ++i) {
        centers[0][i] = 0.5 * (slo + shi);
        halfw[i] = 0.5 * span;
    }
    for (int i = n; i < dims; ++i) {
        centers[0][i] = 0.5;
        halfw[i] = 0.5;
    }

    double step = 2.0 * (*std::max_element(halfw.begin(), halfw.end())) / double(grid - 1);
    while (true) {
        double sep_thr = 1.5 * step;
        std::vector<Point> top;
        for (const auto& c : centers) {
            std::vector<int> idx(dims, 0);
            std::vector<double> v(dims);
            bool done = false;
            while (!done) {
                for (int i = 0; i < dims; ++i)
                    v[i] = c[i] - halfw[i] + 2.0 * halfw[i] * idx[i] / double(grid - 1);
                double d = eval(v);
                // keep the best few grid points, separated basins preferred
                bool placed = false;
                for (auto& pt : top) {
                    double sep = 0.0;
                    for (int i = 0; i < dims; ++i) sep = std::max(sep, std::abs(pt.v[i] - v[i]));
                    if (sep <= sep_thr) {
                        if (d < pt.d) {
                            pt.d = d;
                            pt.v = v;
                        }
                        placed = true;
                        break;
                    }
                }
                if (!placed) top.push_back({d, v});
                std::sort(top.begin(), top.end(),
                          [](const Point& a, const Point& b) { return a.d < b.d; });
                if (int(top.size()) > keep) top.resize(keep);
                int pos = 0;
                for (; pos < dims; ++pos) {
                    if (++idx[pos] < grid) break;
                    idx[pos] = 0;
                }
                if (pos == dims) done = true;
            }
        }
        if (step <= resolution || top.empty()) break;
        centers.clear();
        for (auto& pt : top) centers.push_back(pt.v);
        for (int i = 0; i < dims; ++i) halfw[i] = 2.0 * halfw[i] / double(grid - 1);
        step = 2.0 * (*std::max_element(halfw.begin(), halfw.end())) / double(grid - 1);
    }
    return best;
}

} // namespace q1d
