#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "quantize1d/unconstrained.hpp"

using namespace q1d;

TEST_CASE("lloyd step fixes an already optimal approximation") {
    Measure u = Measure::uniform(0, 1);
    StepApprox opt({0.25, 0.75}, {0.5, 0.5});
    StepApprox next = lloyd_step(u, opt, 2.0);
    CHECK(next.x[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(next.x[1] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(next.p[0] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("lloyd step from a hand-computed start") {
    Measure u = Measure::uniform(0, 1);
    StepApprox start({0.1, 0.9}, {0.5, 0.5});
    StepApprox next = lloyd_step(u, start, 2.0);
    auto P = next.cumulative();
    CHECK(P[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(next.x[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(next.x[1] == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("lloyd iteration walks into the known optimum") {
    Measure half = Measure::lebesgue_plus_atoms({{0, 1, 0.5}}, {{1.0, 0.5}});
    StepApprox cur = best_given_locations(half, {0.2, 0.8}, 1.0);
    for (int it = 0; it < 200; ++it) cur = lloyd_step(half, cur, 1.0);
    CHECK(cur.x[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(cur.x[1] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(cur.p[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("monotone descent along lloyd runs") {
    std::vector<std::pair<Measure, double>> cases = {
        {Measure::uniform(0, 1), 2.0},
        {Measure::beta_2_1(), 1.5},
        {Measure::exponential(), 1.0},
        {Measure::lebesgue_plus_atoms({{0, 1, 0.5}}, {{1.0, 0.5}}), 1.0},
        {Measure::cantor(), 2.0},
    };
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> ts(0.05, 0.95);
    for (auto& [mu, r] : cases) {
        for (int rep = 0; rep < 3; ++rep) {
            int n = 2 + int(rng() % 3);
            std::vector<double> t(n);
            for (double& v : t) v = ts(rng);
            std::sort(t.begin(), t.end());
            std::vector<double> x(n);
            for (int i = 0; i < n; ++i) x[i] = mu.quantile(std::max(1e-6, t[i]));
            StepApprox cur = best_given_locations(mu, x, r);
            double prev = std::pow(distance_r(mu, cur, r), r);
            for (int it = 0; it < 40; ++it) {
                cur = lloyd_step(mu, cur, r);
                double d = std::pow(distance_r(mu, cur, r), r);
                CHECK(d <= prev + 1e-13);
                prev = d;
            }
        }
    }
}

TEST_CASE("fixed points satisfy both optimality conditions") {
    std::vector<std::pair<Measure, double>> cases = {
        {Measure::uniform(0, 1), 2.0},
        {Measure::beta_2_1(), 2.0},
        {Measure::exponential(), 1.0},
    };
    for (auto& [mu, r] : cases) {
        FreeResult res = best_free(mu, 3, r);
        const StepApprox& b = res.best;
        auto P = b.cumulative();
        for (size_t i = 0; i + 1 < b.size(); ++i) {
            Interval q = mu.quantile_set_quantile(0.5 * (b.x[i] + b.x[i + 1]));
            CHECK(P[i + 1] >= q.lo - 1e-9);
            CHECK(P[i + 1] <= q.hi + 1e-9);
        }
        for (size_t i = 0; i < b.size(); ++i) {
            if (!(P[i + 1] > P[i])) continue;
            if (r == 1.0) {
                Interval q = mu.quantile_set_cdf(0.5 * (P[i] + P[i + 1]));
                CHECK(b.x[i] >= q.lo - 1e-9);
                CHECK(b.x[i] <= q.hi + 1e-9);
            } else {
                double want = mu.quantile_partial_integral(P[i], P[i + 1]) / (P[i + 1] - P[i]);
                CHECK(b.x[i] == doctest::Approx(want).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("classical stationarity for continuous measures") {
    for (auto& [mu, n] : std::vector<std::pair<Measure, int>>{
             {Measure::uniform(0, 1), 3}, {Measure::beta_2_1(), 3}, {Measure::exponential(), 2}}) {
        // r = 1 condition: 2F(x_i) = F(mid_{i-1}) + F(mid_i)
        StepApprox b1 = best_free(mu, n, 1.0).best;
        for (int i = 0; i < n; ++i) {
            double left = i == 0 ? 0.0 : mu.cdf(0.5 * (b1.x[i - 1] + b1.x[i]));
            double right = i == n - 1 ? 1.0 : mu.cdf(0.5 * (b1.x[i] + b1.x[i + 1]));
            CHECK(2.0 * mu.cdf(b1.x[i]) == doctest::Approx(left + right).epsilon(1e-8));
        }
        // r = 2 condition: cell mass times x_i equals the cell mean
        StepApprox b2 = best_free(mu, n, 2.0).best;
        auto P = b2.cumulative();
        for (int i = 0; i < n; ++i) {
            double mass = P[i + 1] - P[i];
            double mean = mu.quantile_partial_integral(P[i], P[i + 1]);
            CHECK(b2.x[i] * mass == doctest::Approx(mean).epsilon(1e-8));
        }
    }
}

TEST_CASE("exact recovery of small discrete supports") {
    Measure m = Measure::discrete({-1.0, 2.0}, {0.3, 0.7});
    for (double r : {1.0, 2.0}) {
        FreeResult res = best_free(m, 2, r);
        CHECK(*res.best.achieved_distance <= 1e-12);
        CHECK(res.best.x[0] == doctest::Approx(-1.0).epsilon(1e-9));
        CHECK(res.best.x[1] == doctest::Approx(2.0).epsilon(1e-9));
    }
    // n larger than the support size also recovers exactly
    FreeResult res3 = best_free(m, 3, 2.0);
    CHECK(*res3.best.achieved_distance <= 1e-10);
}

TEST_CASE("best_free beats or matches the constrained solutions") {
    // the unconstrained optimum is below any weight-constrained one, and in
    // particular below the best uniform approximation
    std::vector<Measure> mus = {Measure::uniform(0, 1), Measure::beta_2_1(),
                                Measure::exponential(),
                                Measure::lebesgue_plus_atoms({{0, 1, 0.5}}, {{1.0, 0.5}})};
    for (const Measure& mu : mus) {
        for (double r : {1.0, 2.0}) {
            int n = 3;
            double dfree = *best_free(mu, n, r).best.achieved_distance;
            double duni = *best_uniform(mu, n, r).achieved_distance;
            StepApprox skew = best_given_weights(mu, {0.6, 0.3, 0.1}, r);
            CHECK(dfree <= duni + 1e-9);
            CHECK(dfree <= *skew.achieved_distance + 1e-9);
        }
    }
}

TEST_CASE("grid oracle agrees on the small panel") {
    std::vector<Measure> mus = {
        Measure::uniform(0, 1), Measure::beta_2_1(),
        // truncated-exponential stand-in with a piecewise-linear quantile
        Measure::piecewise_linear_quantile({{0.0, 0.0},
                                            {0.25, 0.2712225865875373},
                                            {0.5, 0.6445598289862031},
                                            {0.75, 1.2470880469004342},
                                            {1.0, 3.0}}),
        Measure::discrete({0.0, 1.0, 2.5}, {0.2, 0.5, 0.3}),
        Measure::discrete({-1.0, 4.0}, {0.5, 0.5}),
    };
    for (const Measure& mu : mus) {
        for (int n = 1; n <= 3; ++n) {
            for (double r : {1.0, 2.0}) {
                double dfree = *best_free(mu, n, r).best.achieved_distance;
                StepApprox g = brute_force_oracle(mu, n, r, 1e-3);
                double slack = 2e-3 * double(n) * 6.0;
                CHECK(*g.achieved_distance >= dfree - 1e-6);
                CHECK(dfree <= *g.achieved_distance + slack);
            }
        }
    }
    CHECK_THROWS(brute_force_oracle(Measure::uniform(0, 1), 4, 2.0, 1e-2));
}

TEST_CASE("point mass is recovered exactly by the oracle") {
    StepApprox g = brute_force_oracle(Measure::point_mass(0.0), 1, 2.0, 1e-3);
    CHECK(*g.achieved_distance <= 1e-9);
    CHECK(std::abs(g.x[0]) <= 2e-3);
}

TEST_CASE("identical seeds give identical candidate lists") {
    Measure mu = Measure::lebesgue_plus_atoms({{-1, 1, 2.0 / 3.0}}, {{0.0, 1.0 / 3.0}});
    SolverConfig cfg;
    cfg.seed = 1234;
    FreeResult a = best_free(mu, 2, 1.0, cfg);
    FreeResult b = best_free(mu, 2, 1.0, cfg);
    REQUIRE(a.candidates.size() == b.candidates.size());
    for (size_t i = 0; i < a.candidates.size(); ++i) {
        for (size_t j = 0; j < a.candidates[i].size(); ++j) {
            CHECK(a.candidates[i].x[j] == b.candidates[i].x[j]);
            CHECK(a.candidates[i].p[j] == b.candidates[i].p[j]);
        }
    }
}
