#include "quantize1d/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "detail/normal.hpp"
#include "detail/quadrature.hpp"
#include "quantize1d/constrained.hpp"

namespace q1d {

std::string regime_name(Regime r) {
    switch (r) {
    case Regime::uniform:
        return "uniform";
    case Regime::free:
        return "free";
    case Regime::locations_scheme:
        return "locations_scheme";
    case Regime::weights_scheme:
        return "weights_scheme";
    case Regime::asym_scheme:
        return "asym_scheme";
    }
    return "uniform";
}

Regime regime_from_name(const std::string& name) {
    if (name == "uniform") return Regime::uniform;
    if (name == "free") return Regime::free;
    if (name == "locations_scheme") return Regime::locations_scheme;
    if (name == "weights_scheme") return Regime::weights_scheme;
    if (name == "asym_scheme") return Regime::asym_scheme;
    throw std::invalid_argument("unknown regime: " + name);
}

std::string RateSeries::to_csv() const {
    std::string out = "n,d_r,n_times_d,n_pow_fit\n";
    char buf[160];
    for (size_t i = 0; i < n_values.size(); ++i) {
        double n = double(n_values[i]);
        double fit = fitted_constant * std::pow(n, fitted_exponent);
        if (log_correction_exponent && n > 1.0)
            fit *= std::pow(std::log(n), *log_correction_exponent);
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", n_values[i], d_values[i],
                      n * d_values[i], fit);
        out += buf;
    }
    return out;
}

namespace {

void fit_power_law(RateSeries& s, std::optional<double> log_corr) {
    size_t m = s.n_values.size();
    size_t start = m >= 4 ? m / 2 : 0; // asymptotic window: top half
    std::vector<double> xs, ys;
    for (size_t i = start; i < m; ++i) {
        if (s.d_values[i] <= 0.0 || s.n_values[i] < 1) continue;
        double y = std::log(s.d_values[i]);
        if (log_corr && s.n_values[i] > 1)
            y -= *log_corr * std::log(std::log(double(s.n_values[i])));
        xs.push_back(std::log(double(s.n_values[i])));
        ys.push_back(y);
    }
    if (xs.size() < 2) {
        s.fitted_exponent = 0.0;
        s.fitted_constant = s.d_values.empty() ? 0.0 : s.d_values.back();
        s.fit_residual = 0.0;
        return;
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double nn = double(xs.size());
    double slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
    double icept = (sy - slope * sx) / nn;
    double rss = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        double e = ys[i] - slope * xs[i] - icept;
        rss += e * e;
    }
    s.fitted_exponent = slope;
    s.fitted_constant = std::exp(icept);
    s.fit_residual = std::sqrt(rss / nn);
    s.log_correction_exponent = log_corr;
}

} // namespace

RateSeries rate_sweep(const Measure& mu, double r, Regime regime, std::vector<int> n_values,
                      const SweepOptions& opt) {
    RateSeries out;
    out.regime = regime;
    out.r = r;
    std::sort(n_values.begin(), n_values.end());
    for (int n : n_values) {
        if (n < 1) throw std::invalid_argument("rate_sweep: n must be positive");
        double d = 0.0;
        switch (regime) {
        case Regime::uniform:
            d = *best_uniform(mu, n, r).achieved_distance;
            break;
        case Regime::free:
            d = *best_free(mu, n, r, opt.solver).best.achieved_distance;
            break;
        case Regime::locations_scheme: {
            std::vector<double> x;
            if (opt.locations_for_n)
                x = opt.locations_for_n(n);
            else {
                x.resize(n);
                for (int i = 0; i < n; ++i) x[i] = double(i + 1) / std::sqrt(double(n));
            }
            std::sort(x.begin(), x.end());
            d = *best_given_locations(mu, std::move(x), r).achieved_distance;
            break;
        }
        case Regime::weights_scheme: {
            // atoms of the best uniform 1-approximation, evaluated in d_r
            std::vector<double> x(n);
            for (int i = 0; i < n; ++i) x[i] = mu.quantile((2.0 * i + 1.0) / (2.0 * n));
            d = distance_r(mu, StepApprox::uniform_weights(std::move(x)), r);
            break;
        }
        case Regime::asym_scheme: {
            std::vector<double> x = asym_best_locations(mu, n, r);
            d = *best_given_locations(mu, std::move(x), r).achieved_distance;
            break;
        }
        }
        out.n_values.push_back(n);
        out.d_values.push_back(d);
    }
    fit_power_law(out, opt.log_correction);
    return out;
}

double th6_limit(const Measure& mu, double r) {
    if (r < 1.0) throw std::domain_error("th6_limit: r must be >= 1");
    if (!mu.has_inverse_density()) throw std::domain_error("th6_limit: inverse measure not a.c.");
    auto g = [&](double t) { return std::pow(mu.inverse_measure_density(t), r); };
    // evaluate the upper tail from the distance s to avoid 1-(1-s) noise
    auto ghi = [&](double s) {
        switch (mu.kind()) {
        case Measure::Kind::exponential:
            return std::pow(1.0 / s, r);
        case Measure::Kind::standard_normal:
            return std::pow(1.0 / detail::normal_pdf(detail::normal_quantile_complement(s)), r);
        default: {
            double t = 1.0 - s;
            if (t >= 1.0) t = 1.0 - 1e-16; // bounded-density kinds only
            return std::pow(mu.inverse_measure_density(t), r);
        }
        }
    };
    double integral = detail::integrate_unit_sing(g, g, ghi, 1e-12);
    if (!std::isfinite(integral)) return inf;
    return 0.5 * std::pow(integral, 1.0 / r) / std::pow(r + 1.0, 1.0 / r);
}

double zador_limit(const Measure& mu, double r) {
    if (r < 1.0) throw std::domain_error("zador_limit: r must be >= 1");
    double e = 1.0 / (r + 1.0);
    double integral;
    switch (mu.kind()) {
    case Measure::Kind::uniform:
        integral = std::pow(mu.param_b() - mu.param_a(), r * e);
        break;
    case Measure::Kind::exponential:
        integral = r + 1.0; // int e^{-x/(r+1)} dx over [0, inf)
        break;
    case Measure::Kind::standard_normal:
        integral = std::pow(2.0 * 3.14159265358979323846, 0.5 * r * e) * std::sqrt(r + 1.0);
        break;
    case Measure::Kind::beta_2_1:
        integral = std::pow(2.0, e) * (r + 1.0) / (r + 2.0);
        break;
    case Measure::Kind::lebesgue_plus_atoms: {
        integral = 0.0;
        // piecewise-constant density; atoms contribute nothing
        const auto& iv = mu.intervals();
        std::vector<double> xs;
        for (auto& v : iv) {
            xs.push_back(v[0]);
            xs.push_back(v[1]);
        }
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        for (size_t j = 0; j + 1 < xs.size(); ++j) {
            double mid = 0.5 * (xs[j] + xs[j + 1]);
            double rho = mu.density(mid);
            if (rho > 0.0) integral += (xs[j + 1] - xs[j]) * std::pow(rho, e);
        }
        break;
    }
    case Measure::Kind::piecewise_linear_quantile: {
        // int rho^{1/(r+1)} dx = int (quantile slope)^{r/(r+1)} dt over rising segments
        integral = 0.0;
        const auto& kn = mu.knots();
        for (size_t i = 1; i < kn.size(); ++i) {
            double dt = kn[i].first - kn[i - 1].first;
            double dv = kn[i].second - kn[i - 1].second;
            if (dv > 0.0) integral += dt * std::pow(dv / dt, r * e);
        }
        break;
    }
    case Measure::Kind::point_mass:
    case Measure::Kind::discrete:
    case Measure::Kind::slow_decay:
    case Measure::Kind::cantor:
    case Measure::Kind::inverse_cantor:
        return 0.0; // no absolutely continuous part
    default:
        throw std::domain_error("zador_limit: unsupported kind");
    }
    return 0.5 * std::pow(integral, (r + 1.0) / r) / std::pow(r + 1.0, 1.0 / r);
}

bool has_tilted_quantile(const Measure& mu) {
    switch (mu.kind()) {
    case Measure::Kind::uniform:
    case Measure::Kind::exponential:
    case Measure::Kind::standard_normal:
    case Measure::Kind::beta_2_1:
        return true;
    default:
        return false;
    }
}

double tilted_quantile(const Measure& mu, double r, double u) {
    if (!(u > 0.0 && u < 1.0)) throw std::domain_error("tilted_quantile: u in (0,1)");
    switch (mu.kind()) {
    case Measure::Kind::uniform:
        return mu.param_a() + u * (mu.param_b() - mu.param_a());
    case Measure::Kind::exponential:
        return -(r + 1.0) * std::log1p(-u);
    case Measure::Kind::standard_normal:
        return std::sqrt(r + 1.0) * detail::normal_quantile(u);
    case Measure::Kind::beta_2_1:
        return std::pow(u, (r + 1.0) / (r + 2.0));
    default:
        throw std::domain_error("tilted_quantile: no closed-form tilted density");
    }
}

std::vector<double> asym_best_locations(const Measure& mu, int n, double r) {
    if (n < 1) throw std::invalid_argument("asym_best_locations: n must be positive");
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = tilted_quantile(mu, r, double(i + 1) / double(n + 1));
    return x;
}

double quantization_dimension(const RateSeries& series, double* residual) {
    size_t m = series.n_values.size();
    if (m < 2) throw std::invalid_argument("quantization_dimension: need >= 2 points");
    size_t start = m >= 4 ? m / 2 : 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    size_t cnt = 0;
    for (size_t i = start; i < m; ++i) {
        if (series.d_values[i] <= 0.0) continue;
        double X = -std::log(series.d_values[i]);
        double Y = std::log(double(series.n_values[i]));
        sx += X;
        sy += Y;
        sxx += X * X;
        sxy += X * Y;
        ++cnt;
    }
    if (cnt < 2) throw std::invalid_argument("quantization_dimension: degenerate series");
    double nn = double(cnt);
    double slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
    if (residual) {
        double icept = (sy - slope * sx) / nn;
        double rss = 0.0;
        for (size_t i = start; i < m; ++i) {
            if (series.d_values[i] <= 0.0) continue;
            double X = -std::log(series.d_values[i]);
            double Y = std::log(double(series.n_values[i]));
            double e = Y - slope * X - icept;
            rss += e * e;
        }
        *residual = std::sqrt(rss / nn);
    }
    return slope;
}

Measure slow_decay_measure(const std::vector<double>& a, double r, int K) {
    if (K < 2) throw std::invalid_argument("slow_decay_measure: K must be >= 2");
    if (a.size() < 2) throw std::invalid_argument("slow_decay_measure: need >= 2 targets");
    for (double v : a)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("slow_decay_measure: targets must be finite nonnegative");
    // reject sequences that visibly fail to tend to zero over the given window
    if (a.back() > 0.0 && a.back() >= a.front())
        throw std::invalid_argument("slow_decay_measure: target sequence must vanish");

    // work in r-th power space, padded with zeros so the tail vanishes
    size_t n = std::max<size_t>(a.size(), size_t(K)) + 2;
    std::vector<double> pw(n, 0.0);
    for (size_t i = 0; i < a.size() && i < n; ++i) pw[i] = std::pow(a[i], r);
    // decreasing majorant
    for (size_t i = n - 1; i-- > 0;) pw[i] = std::max(pw[i], pw[i + 1]);
    // make the differences decreasing: d_k = max over m >= k of (pw_m - pw_{m+1})
    std::vector<double> diff(n, 0.0);
    for (size_t i = n - 1; i-- > 0;) {
        double d = pw[i] - pw[i + 1];
        diff[i] = std::max(d, i + 1 < n ? diff[i + 1] : 0.0);
    }
    std::vector<double> c(n + 1, 0.0); // c[i] = enveloped pw, c[n] = 0
    for (size_t i = n; i-- > 0;) c[i] = c[i + 1] + diff[i];

    // head element c0 with c0 - c[0] > c[0] - c[1], per the construction
    double gap = c[0] - c[1];
    double head = c[0] + std::max(2.0 * gap, c[0] > 0.0 ? c[0] : 1.0);

    // atoms x_k = 3 * 2^{k-1} * c_r^{1/r}, weights ~ 2^{-(k-1)r} (prev - cur)
    std::vector<double> deltas; // (c_{k-1} - c_k) with the head prepended
    deltas.push_back(head - c[0]);
    for (size_t k = 0; k + 1 <= n; ++k) deltas.push_back(c[k] - c[k + 1]);

    double cr = 0.0;
    for (size_t k = 0; k < deltas.size(); ++k) cr += std::pow(2.0, -double(k) * r) * deltas[k];
    if (!(cr > 0.0)) throw std::invalid_argument("slow_decay_measure: degenerate target");

    std::vector<double> atoms, weights;
    double total = 0.0;
    for (int k = 0; k < K && size_t(k) < deltas.size(); ++k) {
        double w = std::pow(2.0, -double(k) * r) * deltas[k] / cr;
        if (w <= 0.0) continue;
        atoms.push_back(3.0 * std::pow(2.0, double(k)) * std::pow(cr, 1.0 / r));
        weights.push_back(w);
        total += w;
    }
    if (atoms.empty()) throw std::invalid_argument("slow_decay_measure: no mass in truncation");
    for (double& w : weights) w /= total;
    return Measure::slow_decay(std::move(atoms), std::move(weights), K);
}

} // namespace q1d
