#include "quantize1d/constrained.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "quantize1d/step_fit.hpp"

namespace q1d {

namespace {

double pick(const Interval& q, Selector sel) {
    switch (sel) {
    case Selector::min_point:
        return q.lo;
    case Selector::max_point:
        return q.hi;
    default:
        return q.midpoint();
    }
}

} // namespace

StepApprox best_given_locations(const Measure& mu, std::vector<double> x, double r,
                                Selector sel) {
    if (x.empty()) throw std::invalid_argument("best_given_locations: empty x");
    if (!std::is_sorted(x.begin(), x.end()))
        throw std::invalid_argument("best_given_locations: x must be nondecreasing");
    size_t n = x.size();

    // collapse duplicate locations
    std::vector<double> xs;
    std::vector<size_t> group_end; // index past the last original slot of each group
    for (size_t i = 0; i < n; ++i) {
        if (xs.empty() || x[i] != xs.back()) {
            xs.push_back(x[i]);
            group_end.push_back(i + 1);
        } else {
            group_end.back() = i + 1;
        }
    }
    size_t m = xs.size();

    std::vector<double> Pbar(m, 1.0);
    double prev = 0.0;
    for (size_t j = 0; j + 1 < m; ++j) {
        Interval q = mu.quantile_set_quantile(0.5 * (xs[j] + xs[j + 1]));
        double v = std::clamp(pick(q, sel), 0.0, 1.0);
        v = std::max(v, prev); // float safety; theory gives monotone sets
        Pbar[j] = v;
        prev = v;
    }

    // re-expand: cumulative stays at the previous group's level until the last
    // duplicate, so the whole group weight lands on its last slot
    std::vector<double> P(n + 1, 0.0);
    for (size_t j = 0; j < m; ++j) {
        double base = j == 0 ? 0.0 : Pbar[j - 1];
        size_t first = j == 0 ? 0 : group_end[j - 1];
        for (size_t i = first; i < group_end[j]; ++i)
            P[i + 1] = (i + 1 == group_end[j]) ? Pbar[j] : base;
    }
    std::vector<double> p(n);
    for (size_t i = 0; i < n; ++i) p[i] = std::max(0.0, P[i + 1] - P[i]);

    StepApprox out(std::move(x), std::move(p));
    out.r = r;
    out.achieved_distance = distance_r(mu, out, r);
    return out;
}

StepApprox best_given_weights(const Measure& mu, std::vector<double> p, double r,
                              Selector sel) {
    if (p.empty()) throw std::invalid_argument("best_given_weights: empty p");
    double s = 0.0;
    for (double w : p) {
        if (w < 0.0) throw std::invalid_argument("best_given_weights: negative weight");
        s += w;
    }
    if (std::abs(s - 1.0) > 1e-12)
        throw std::invalid_argument("best_given_weights: weights must sum to 1");
    size_t n = p.size();
    std::vector<double> P(n + 1, 0.0);
    for (size_t i = 0; i < n; ++i) P[i + 1] = P[i] + p[i];
    P[n] = 1.0;

    std::vector<double> x(n, 0.0);
    std::vector<char> solved(n, 0);
    double prev = -inf;
    for (size_t i = 0; i < n; ++i) {
        if (!(P[i + 1] > P[i])) continue; // zero-weight slot, filled below
        double xi;
        if (r == 1.0) {
            xi = pick(mu.quantile_set_cdf(0.5 * (P[i] + P[i + 1])), sel);
        } else if (r == 2.0) {
            xi = mu.quantile_partial_integral(P[i], P[i + 1]) / (P[i + 1] - P[i]);
        } else {
            MonotoneSegment seg(mu, P[i], P[i + 1]);
            xi = tau_r(seg, r).value;
        }
        x[i] = std::max(xi, prev);
        prev = x[i];
        solved[i] = 1;
    }
    // zero-weight slots take the next solved atom, trailing ones the previous
    bool have_next = false;
    double nxt = 0.0;
    for (size_t i = n; i-- > 0;) {
        if (solved[i]) {
            nxt = x[i];
            have_next = true;
        } else if (have_next) {
            x[i] = nxt;
            solved[i] = 1;
        }
    }
    double prv = 0.0;
    for (size_t i = 0; i < n; ++i) {
        if (solved[i])
            prv = x[i];
        else
            x[i] = prv;
    }

    StepApprox out(std::move(x), std::move(p));
    out.r = r;
    out.achieved_distance = distance_r(mu, out, r);
    return out;
}

StepApprox best_uniform(const Measure& mu, int n, double r, Selector sel) {
    if (n < 1) throw std::invalid_argument("best_uniform: n must be positive");
    std::vector<double> u(n, 1.0 / double(n));
    return best_given_weights(mu, std::move(u), r, sel);
}

StepApprox best_weights_over_orderings(const Measure& mu, std::vector<double> p, double r,
                                       OrderingMode mode, Selector sel) {
    if (mode == OrderingMode::sorted_only) {
        std::sort(p.begin(), p.end());
        return best_given_weights(mu, std::move(p), r, sel);
    }
    if (p.size() > 9)
        throw std::invalid_argument("best_weights_over_orderings: n > 9 with all_permutations");
    std::sort(p.begin(), p.end());
    StepApprox best;
    bool have = false;
    do {
        StepApprox cand = best_given_weights(mu, p, r, sel);
        if (!have || *cand.achieved_distance < *best.achieved_distance ||
            (*cand.achieved_distance == *best.achieved_distance &&
             std::lexicographical_compare(cand.x.begin(), cand.x.end(), best.x.begin(),
                                          best.x.end()))) {
            best = cand;
            have = true;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

} // namespace q1d
