#include "quantize1d/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "detail/cantor.hpp"
#include "detail/normal.hpp"
#include "detail/quadrature.hpp"

namespace q1d {

namespace {

void check_weights(const std::vector<double>& w) {
    double s = 0.0;
    for (double x : w) {
        if (x < 0.0) throw std::invalid_argument("weights must be nonnegative");
        s += x;
    }
    if (std::abs(s - 1.0) > 1e-12) throw std::invalid_argument("weights must sum to 1");
}

std::vector<double> cumsum(const std::vector<double>& w) {
    std::vector<double> c(w.size());
    double s = 0.0;
    for (size_t i = 0; i < w.size(); ++i) {
        s += w[i];
        c[i] = s;
    }
    if (!c.empty()) c.back() = 1.0;
    return c;
}

} // namespace

Measure Measure::point_mass(double a) {
    Measure m;
    m.kind_ = Kind::point_mass;
    m.a_ = a;
    return m;
}

Measure Measure::uniform(double a, double b) {
    if (!(a < b)) throw std::invalid_argument("uniform: need a < b");
    Measure m;
    m.kind_ = Kind::uniform;
    m.a_ = a;
    m.b_ = b;
    return m;
}

Measure Measure::exponential() {
    Measure m;
    m.kind_ = Kind::exponential;
    return m;
}

Measure Measure::standard_normal() {
    Measure m;
    m.kind_ = Kind::standard_normal;
    return m;
}

Measure Measure::beta_2_1() {
    Measure m;
    m.kind_ = Kind::beta_2_1;
    return m;
}

Measure Measure::discrete(std::vector<double> atoms, std::vector<double> weights) {
    if (atoms.empty() || atoms.size() != weights.size())
        throw std::invalid_argument("discrete: atoms/weights size mismatch");
    for (size_t i = 1; i < atoms.size(); ++i)
        if (!(atoms[i - 1] < atoms[i]))
            throw std::invalid_argument("discrete: atoms must be strictly increasing");
    check_weights(weights);
    Measure m;
    m.kind_ = Kind::discrete;
    m.atoms_ = std::move(atoms);
    m.weights_ = std::move(weights);
    m.cum_ = cumsum(m.weights_);
    return m;
}

Measure Measure::slow_decay(std::vector<double> atoms, std::vector<double> weights, int K) {
    Measure m = discrete(std::move(atoms), std::move(weights));
    m.kind_ = Kind::slow_decay;
    m.truncation_ = K;
    return m;
}

Measure Measure::lebesgue_plus_atoms(std::vector<std::array<double, 3>> intervals,
                                     std::vector<std::pair<double, double>> atoms) {
    double mass = 0.0;
    for (auto& iv : intervals) {
        if (!(iv[0] < iv[1]) || iv[2] < 0.0)
            throw std::invalid_argument("lebesgue_plus_atoms: bad interval");
        mass += iv[2];
    }
    for (auto& a : atoms) {
        if (a.second < 0.0) throw std::invalid_argument("lebesgue_plus_atoms: bad atom mass");
        mass += a.second;
    }
    if (std::abs(mass - 1.0) > 1e-12)
        throw std::invalid_argument("lebesgue_plus_atoms: total mass must be 1");
    if (intervals.empty() && atoms.empty())
        throw std::invalid_argument("lebesgue_plus_atoms: empty description");
    Measure m;
    m.kind_ = Kind::lebesgue_plus_atoms;
    m.intervals_ = std::move(intervals);
    m.point_atoms_ = std::move(atoms);
    m.build_node_table();
    return m;
}

Measure Measure::piecewise_linear_quantile(std::vector<std::pair<double, double>> knots) {
    if (knots.size() < 2) throw std::invalid_argument("piecewise_linear_quantile: need >= 2 knots");
    for (size_t i = 1; i < knots.size(); ++i) {
        if (!(knots[i - 1].first < knots[i].first))
            throw std::invalid_argument("piecewise_linear_quantile: t must be strictly increasing");
        if (knots[i - 1].second > knots[i].second)
            throw std::invalid_argument("piecewise_linear_quantile: values must be nondecreasing");
    }
    if (knots.front().first < 0.0 || knots.back().first > 1.0)
        throw std::invalid_argument("piecewise_linear_quantile: t must lie in [0,1]");
    Measure m;
    m.kind_ = Kind::piecewise_linear_quantile;
    m.knots_ = std::move(knots);
    return m;
}

Measure Measure::cantor(int digit_depth) {
    if (digit_depth < 1) throw std::invalid_argument("cantor: digit_depth must be positive");
    Measure m;
    m.kind_ = Kind::cantor;
    m.digit_depth_ = digit_depth;
    return m;
}

Measure Measure::inverse_cantor(int digit_depth) {
    if (digit_depth < 1) throw std::invalid_argument("inverse_cantor: digit_depth must be positive");
    Measure m;
    m.kind_ = Kind::inverse_cantor;
    m.digit_depth_ = digit_depth;
    return m;
}

void Measure::build_node_table() {
    std::vector<double> xs;
    for (auto& iv : intervals_) {
        xs.push_back(iv[0]);
        xs.push_back(iv[1]);
    }
    for (auto& a : point_atoms_) xs.push_back(a.first);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    nodes_ = xs;
    size_t n = nodes_.size();
    dens_.assign(n, 0.0); // density on (nodes_[j], nodes_[j+1]); last entry unused
    jump_.assign(n, 0.0);
    for (auto& iv : intervals_) {
        double rho = iv[2] / (iv[1] - iv[0]);
        for (size_t j = 0; j + 1 < n; ++j)
            if (nodes_[j] >= iv[0] && nodes_[j + 1] <= iv[1]) dens_[j] += rho;
    }
    for (auto& a : point_atoms_) {
        size_t j = std::lower_bound(nodes_.begin(), nodes_.end(), a.first) - nodes_.begin();
        jump_[j] += a.second;
    }
    cum_before_.assign(n, 0.0);
    cum_after_.assign(n, 0.0);
    double c = 0.0;
    for (size_t j = 0; j < n; ++j) {
        cum_before_[j] = c;
        c += jump_[j];
        cum_after_[j] = c;
        if (j + 1 < n) c += dens_[j] * (nodes_[j + 1] - nodes_[j]);
    }
}

double Measure::cdf(double x) const {
    switch (kind_) {
    case Kind::point_mass:
        return x >= a_ ? 1.0 : 0.0;
    case Kind::uniform:
        return std::clamp((x - a_) / (b_ - a_), 0.0, 1.0);
    case Kind::exponential:
        return x <= 0.0 ? 0.0 : -std::expm1(-x);
    case Kind::standard_normal:
        return detail::normal_cdf(x);
    case Kind::beta_2_1:
        return x <= 0.0 ? 0.0 : (x >= 1.0 ? 1.0 : x * x);
    case Kind::discrete:
    case Kind::slow_decay: {
        size_t j = std::upper_bound(atoms_.begin(), atoms_.end(), x) - atoms_.begin();
        return j == 0 ? 0.0 : cum_[j - 1];
    }
    case Kind::lebesgue_plus_atoms: {
        if (x < nodes_.front()) return 0.0;
        if (x >= nodes_.back()) return 1.0;
        size_t j = std::upper_bound(nodes_.begin(), nodes_.end(), x) - nodes_.begin() - 1;
        return cum_after_[j] + dens_[j] * (x - nodes_[j]);
    }
    case Kind::piecewise_linear_quantile: {
        if (x < knots_.front().second) return 0.0;
        if (x >= knots_.back().second) return 1.0;
        // rightmost t with quantile value <= x
        double t = knots_.front().first;
        for (size_t i = 0; i + 1 < knots_.size(); ++i) {
            double t0 = knots_[i].first, t1 = knots_[i + 1].first;
            double v0 = knots_[i].second, v1 = knots_[i + 1].second;
            if (x >= v1) {
                t = t1;
                continue;
            }
            if (x >= v0 && v1 > v0) t = t0 + (x - v0) * (t1 - t0) / (v1 - v0);
            break;
        }
        return std::clamp(t, 0.0, 1.0);
    }
    case Kind::cantor:
        return detail::devil_staircase(x, digit_depth_);
    case Kind::inverse_cantor:
        return x <= 0.0 ? 0.0 : (x >= 1.0 ? 1.0 : detail::cantor_upper_inverse(x, digit_depth_));
    }
    return 0.0;
}

double Measure::cdf_left_limit(double x) const {
    switch (kind_) {
    case Kind::point_mass:
        return x > a_ ? 1.0 : 0.0;
    case Kind::discrete:
    case Kind::slow_decay: {
        size_t j = std::lower_bound(atoms_.begin(), atoms_.end(), x) - atoms_.begin();
        return j == 0 ? 0.0 : cum_[j - 1];
    }
    case Kind::lebesgue_plus_atoms: {
        size_t j = std::lower_bound(nodes_.begin(), nodes_.end(), x) - nodes_.begin();
        if (j < nodes_.size() && nodes_[j] == x) return cum_before_[j];
        return cdf(x);
    }
    case Kind::piecewise_linear_quantile: {
        // inf{t : quantile(t) >= x}
        if (x > knots_.back().second) return 1.0;
        if (knots_.front().second >= x) return 0.0;
        for (size_t i = 1; i < knots_.size(); ++i) {
            if (knots_[i].second >= x) {
                double t0 = knots_[i - 1].first, t1 = knots_[i].first;
                double v0 = knots_[i - 1].second, v1 = knots_[i].second;
                return v1 > v0 ? t0 + (x - v0) * (t1 - t0) / (v1 - v0) : t1;
            }
        }
        return 1.0;
    }
    case Kind::inverse_cantor:
        return x <= 0.0 ? 0.0 : (x >= 1.0 ? 1.0 : detail::cantor_lower_inverse(x, digit_depth_));
    default:
        return cdf(x); // continuous CDF
    }
}

double Measure::quantile(double t) const {
    if (!(t > 0.0 && t < 1.0)) { std::fprintf(stderr, "quantile arg=%.17g\n", t); throw std::domain_error("quantile: t must be in (0,1)"); }
    switch (kind_) {
    case Kind::point_mass:
        return a_;
    case Kind::uniform:
        return a_ + t * (b_ - a_);
    case Kind::exponential:
        return -std::log1p(-t);
    case Kind::standard_normal:
        return detail::normal_quantile(t);
    case Kind::beta_2_1:
        return std::sqrt(t);
    case Kind::discrete:
    case Kind::slow_decay: {
        // sup{F <= t}: first cumulative strictly above t
        size_t j = std::upper_bound(cum_.begin(), cum_.end(), t) - cum_.begin();
        if (j >= atoms_.size()) j = atoms_.size() - 1;
        return atoms_[j];
    }
    case Kind::lebesgue_plus_atoms: {
        size_t n = nodes_.size();
        for (size_t j = 0; j < n; ++j) {
            if (cum_after_[j] > t) {
                if (cum_before_[j] <= t) return nodes_[j]; // inside the atom's jump
                // crossed within the density segment to the left
                size_t s = j - 1;
                return nodes_[s] + (t - cum_after_[s]) / dens_[s];
            }
        }
        return nodes_.back();
    }
    case Kind::piecewise_linear_quantile: {
        if (t <= knots_.front().first) return knots_.front().second;
        if (t >= knots_.back().first) return knots_.back().second;
        size_t i = 1;
        while (knots_[i].first < t) ++i;
        double t0 = knots_[i - 1].first, t1 = knots_[i].first;
        double v0 = knots_[i - 1].second, v1 = knots_[i].second;
        return v0 + (t - t0) * (v1 - v0) / (t1 - t0);
    }
    case Kind::cantor:
        return detail::cantor_upper_inverse(t, digit_depth_);
    case Kind::inverse_cantor:
        return detail::devil_staircase(t, digit_depth_);
    }
    return 0.0;
}

double Measure::quantile_complement(double s) const {
    if (!(s > 0.0 && s < 1.0)) throw std::domain_error("quantile_complement: s in (0,1)");
    switch (kind_) {
    case Kind::exponential:
        return -std::log(s);
    case Kind::standard_normal:
        return detail::normal_quantile_complement(s);
    default:
        return quantile(1.0 - s);
    }
}

double Measure::quantile_left_limit(double t) const {
    switch (kind_) {
    case Kind::discrete:
    case Kind::slow_decay: {
        size_t j = std::lower_bound(cum_.begin(), cum_.end(), t) - cum_.begin();
        if (j >= atoms_.size()) j = atoms_.size() - 1;
        return atoms_[j];
    }
    case Kind::lebesgue_plus_atoms: {
        size_t n = nodes_.size();
        for (size_t j = 0; j < n; ++j)
            if (cum_before_[j] < t && t <= cum_after_[j]) return nodes_[j];
        for (size_t s = 0; s + 1 < n; ++s) {
            if (dens_[s] <= 0.0) continue;
            double t0 = cum_after_[s], t1 = t0 + dens_[s] * (nodes_[s + 1] - nodes_[s]);
            if (t0 < t && t <= t1) return nodes_[s] + (t - t0) / dens_[s];
        }
        return t <= cum_after_[0] ? nodes_.front() : nodes_.back();
    }
    case Kind::cantor:
        return detail::cantor_lower_inverse(t, digit_depth_);
    default:
        return quantile(t);
    }
}

std::vector<double> Measure::quantile_breakpoints() const {
    std::vector<double> out;
    switch (kind_) {
    case Kind::discrete:
    case Kind::slow_decay:
        out.assign(cum_.begin(), cum_.end() - 1);
        break;
    case Kind::lebesgue_plus_atoms:
        for (size_t j = 0; j < nodes_.size(); ++j) {
            if (cum_before_[j] > 0.0 && cum_before_[j] < 1.0) out.push_back(cum_before_[j]);
            if (cum_after_[j] > 0.0 && cum_after_[j] < 1.0) out.push_back(cum_after_[j]);
        }
        break;
    case Kind::piecewise_linear_quantile:
        for (auto& k : knots_)
            if (k.first > 0.0 && k.first < 1.0) out.push_back(k.first);
        break;
    default:
        break; // continuous or densely jumping kinds
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Interval Measure::quantile_set_cdf(double t) const {
    if (t < 0.0 || t > 1.0) throw std::domain_error("quantile_set_cdf: t must be in [0,1]");
    auto [lo_s, hi_s] = support_bounds();
    if (t <= 0.0) return {-inf, lo_s};
    if (t >= 1.0) return {hi_s, inf};
    return {quantile_left_limit(t), quantile(t)};
}

Interval Measure::quantile_set_quantile(double c) const {
    return {cdf_left_limit(c), cdf(c)};
}

std::pair<double, double> Measure::support_bounds() const {
    switch (kind_) {
    case Kind::point_mass:
        return {a_, a_};
    case Kind::uniform:
        return {a_, b_};
    case Kind::exponential:
        return {0.0, inf};
    case Kind::standard_normal:
        return {-inf, inf};
    case Kind::beta_2_1:
        return {0.0, 1.0};
    case Kind::discrete:
    case Kind::slow_decay:
        return {atoms_.front(), atoms_.back()};
    case Kind::lebesgue_plus_atoms:
        return {nodes_.front(), nodes_.back()};
    case Kind::piecewise_linear_quantile:
        return {knots_.front().second, knots_.back().second};
    case Kind::cantor:
    case Kind::inverse_cantor:
        return {0.0, 1.0};
    }
    return {0.0, 0.0};
}

long Measure::support_size() const {
    switch (kind_) {
    case Kind::point_mass:
        return 1;
    case Kind::discrete:
    case Kind::slow_decay:
        return static_cast<long>(atoms_.size());
    default:
        return -1;
    }
}

double Measure::moment(double r) const {
    if (r < 1.0) throw std::domain_error("moment: r must be >= 1");
    if (kind_ == Kind::point_mass) return std::pow(std::abs(a_), r);
    if (is_discrete()) {
        double s = 0.0;
        for (size_t i = 0; i < atoms_.size(); ++i)
            s += weights_[i] * std::pow(std::abs(atoms_[i]), r);
        return s;
    }
    auto g = [&](double t) { return std::pow(std::abs(quantile(t)), r); };
    auto ghi = [&](double s) { return std::pow(std::abs(quantile_complement(s)), r); };
    return detail::integrate_unit_sing(g, g, ghi, 1e-11);
}

bool Measure::has_inverse_density() const {
    switch (kind_) {
    case Kind::uniform:
    case Kind::exponential:
    case Kind::standard_normal:
    case Kind::beta_2_1:
        return true;
    case Kind::piecewise_linear_quantile:
        for (size_t i = 1; i < knots_.size(); ++i)
            if (!(knots_[i].second > knots_[i - 1].second)) return false;
        return knots_.front().first == 0.0 && knots_.back().first == 1.0;
    default:
        return false;
    }
}

double Measure::inverse_measure_density(double t) const {
    if (!(t > 0.0 && t < 1.0)) throw std::domain_error("inverse_measure_density: t in (0,1)");
    switch (kind_) {
    case Kind::uniform:
        return b_ - a_;
    case Kind::exponential:
        return 1.0 / (1.0 - t);
    case Kind::standard_normal:
        return 1.0 / detail::normal_pdf(detail::normal_quantile(t));
    case Kind::beta_2_1:
        return 0.5 / std::sqrt(t);
    case Kind::piecewise_linear_quantile: {
        if (!has_inverse_density())
            throw std::domain_error("inverse_measure_density: quantile has flat pieces");
        size_t i = 1;
        while (knots_[i].first < t) ++i;
        return (knots_[i].second - knots_[i - 1].second) /
               (knots_[i].first - knots_[i - 1].first);
    }
    default:
        throw std::domain_error("inverse_measure_density: unsupported kind");
    }
}

double Measure::quantile_partial_integral(double a, double b) const {
    if (b < a) return -quantile_partial_integral(b, a);
    a = std::clamp(a, 0.0, 1.0);
    b = std::clamp(b, 0.0, 1.0);
    switch (kind_) {
    case Kind::point_mass:
        return a_ * (b - a);
    case Kind::uniform:
        return a_ * (b - a) + 0.5 * (b_ - a_) * (b * b - a * a);
    case Kind::exponential: {
        auto A = [](double t) { // antiderivative of -log(1-t)
            double u = 1.0 - t;
            return u <= 0.0 ? 1.0 : u * std::log(u) + t;
        };
        return A(b) - A(a);
    }
    case Kind::standard_normal: {
        auto A = [](double t) {
            if (t <= 0.0 || t >= 1.0) return 0.0;
            return -detail::normal_pdf(detail::normal_quantile(t));
        };
        return A(b) - A(a);
    }
    case Kind::beta_2_1:
        return (2.0 / 3.0) * (std::pow(b, 1.5) - std::pow(a, 1.5));
    case Kind::discrete:
    case Kind::slow_decay: {
        double s = 0.0, prev = 0.0;
        for (size_t i = 0; i < atoms_.size(); ++i) {
            double lo = std::max(a, prev), hi = std::min(b, cum_[i]);
            if (hi > lo) s += atoms_[i] * (hi - lo);
            prev = cum_[i];
            if (prev >= b) break;
        }
        return s;
    }
    case Kind::lebesgue_plus_atoms: {
        double s = 0.0;
        size_t n = nodes_.size();
        for (size_t j = 0; j < n; ++j) {
            double lo = std::max(a, cum_before_[j]), hi = std::min(b, cum_after_[j]);
            if (hi > lo) s += nodes_[j] * (hi - lo);
            if (j + 1 < n && dens_[j] > 0.0) {
                double t0 = cum_after_[j], t1 = t0 + dens_[j] * (nodes_[j + 1] - nodes_[j]);
                double l = std::max(a, t0), h = std::min(b, t1);
                if (h > l) {
                    double x0 = nodes_[j] + (l - t0) / dens_[j];
                    double x1 = nodes_[j] + (h - t0) / dens_[j];
                    s += 0.5 * (x0 + x1) * (h - l);
                }
            }
        }
        return s;
    }
    case Kind::piecewise_linear_quantile: {
        double s = 0.0;
        auto seg = [&](double t0, double t1, double v0, double v1) {
            double l = std::max(a, t0), h = std::min(b, t1);
            if (h <= l) return;
            auto val = [&](double t) {
                return t1 > t0 ? v0 + (t - t0) * (v1 - v0) / (t1 - t0) : v0;
            };
            s += 0.5 * (val(l) + val(h)) * (h - l);
        };
        seg(0.0, knots_.front().first, knots_.front().second, knots_.front().second);
        for (size_t i = 1; i < knots_.size(); ++i)
            seg(knots_[i - 1].first, knots_[i].first, knots_[i - 1].second, knots_[i].second);
        seg(knots_.back().first, 1.0, knots_.back().second, knots_.back().second);
        return s;
    }
    case Kind::cantor:
        return detail::cantor_quantile_integral(b, digit_depth_) -
               detail::cantor_quantile_integral(a, digit_depth_);
    case Kind::inverse_cantor:
        return detail::devil_integral(b, digit_depth_) - detail::devil_integral(a, digit_depth_);
    }
    return 0.0;
}

double Measure::quantile_partial_square_integral(double a, double b) const {
    if (b < a) return -quantile_partial_square_integral(b, a);
    a = std::clamp(a, 0.0, 1.0);
    b = std::clamp(b, 0.0, 1.0);
    switch (kind_) {
    case Kind::point_mass:
        return a_ * a_ * (b - a);
    case Kind::uniform: {
        double w = b_ - a_;
        auto A = [&](double t) { return a_ * a_ * t + a_ * w * t * t + w * w * t * t * t / 3.0; };
        return A(b) - A(a);
    }
    case Kind::exponential: {
        auto A = [](double t) { // antiderivative of log(1-t)^2
            double u = 1.0 - t;
            if (u <= 0.0) return 2.0;
            double lg = std::log(u);
            return 2.0 - u * (lg * lg - 2.0 * lg + 2.0);
        };
        return A(b) - A(a);
    }
    case Kind::standard_normal: {
        auto A = [](double t) {
            if (t <= 0.0) return 0.0;
            if (t >= 1.0) return 1.0;
            double z = detail::normal_quantile(t);
            return t - z * detail::normal_pdf(z);
        };
        return A(b) - A(a);
    }
    case Kind::beta_2_1:
        return 0.5 * (b * b - a * a);
    case Kind::discrete:
    case Kind::slow_decay: {
        double s = 0.0, prev = 0.0;
        for (size_t i = 0; i < atoms_.size(); ++i) {
            double lo = std::max(a, prev), hi = std::min(b, cum_[i]);
            if (hi > lo) s += atoms_[i] * atoms_[i] * (hi - lo);
            prev = cum_[i];
            if (prev >= b) break;
        }
        return s;
    }
    case Kind::lebesgue_plus_atoms: {
        double s = 0.0;
        size_t n = nodes_.size();
        for (size_t j = 0; j < n; ++j) {
            double lo = std::max(a, cum_before_[j]), hi = std::min(b, cum_after_[j]);
            if (hi > lo) s += nodes_[j] * nodes_[j] * (hi - lo);
            if (j + 1 < n && dens_[j] > 0.0) {
                double t0 = cum_after_[j], t1 = t0 + dens_[j] * (nodes_[j + 1] - nodes_[j]);
                double l = std::max(a, t0), h = std::min(b, t1);
                if (h > l) {
                    double x0 = nodes_[j] + (l - t0) / dens_[j];
                    double x1 = nodes_[j] + (h - t0) / dens_[j];
                    s += (h - l) * (x0 * x0 + x0 * (x1 - x0) + (x1 - x0) * (x1 - x0) / 3.0);
                }
            }
        }
        return s;
    }
    case Kind::piecewise_linear_quantile: {
        double s = 0.0;
        auto seg = [&](double t0, double t1, double v0, double v1) {
            double l = std::max(a, t0), h = std::min(b, t1);
            if (h <= l) return;
            auto val = [&](double t) {
                return t1 > t0 ? v0 + (t - t0) * (v1 - v0) / (t1 - t0) : v0;
            };
            double x0 = val(l), x1 = val(h);
            s += (h - l) * (x0 * x0 + x0 * (x1 - x0) + (x1 - x0) * (x1 - x0) / 3.0);
        };
        seg(0.0, knots_.front().first, knots_.front().second, knots_.front().second);
        for (size_t i = 1; i < knots_.size(); ++i)
            seg(knots_[i - 1].first, knots_[i].first, knots_[i - 1].second, knots_[i].second);
        seg(knots_.back().first, 1.0, knots_.back().second, knots_.back().second);
        return s;
    }
    case Kind::cantor:
        return detail::cantor_quantile_square_integral(b, digit_depth_) -
               detail::cantor_quantile_square_integral(a, digit_depth_);
    case Kind::inverse_cantor:
        return detail::devil_square_integral(b, digit_depth_) -
               detail::devil_square_integral(a, digit_depth_);
    }
    return 0.0;
}

bool Measure::has_density() const {
    switch (kind_) {
    case Kind::uniform:
    case Kind::exponential:
    case Kind::standard_normal:
    case Kind::beta_2_1:
    case Kind::lebesgue_plus_atoms:
        return true;
    case Kind::piecewise_linear_quantile:
        return has_inverse_density();
    default:
        return false;
    }
}

double Measure::density(double x) const {
    switch (kind_) {
    case Kind::uniform:
        return (x >= a_ && x <= b_) ? 1.0 / (b_ - a_) : 0.0;
    case Kind::exponential:
        return x >= 0.0 ? std::exp(-x) : 0.0;
    case Kind::standard_normal:
        return detail::normal_pdf(x);
    case Kind::beta_2_1:
        return (x >= 0.0 && x <= 1.0) ? 2.0 * x : 0.0;
    case Kind::lebesgue_plus_atoms: {
        if (x < nodes_.front() || x >= nodes_.back()) return 0.0;
        size_t j = std::upper_bound(nodes_.begin(), nodes_.end(), x) - nodes_.begin();
        return j == 0 ? 0.0 : dens_[j - 1];
    }
    case Kind::piecewise_linear_quantile: {
        if (x <= knots_.front().second || x >= knots_.back().second) return 0.0;
        for (size_t i = 1; i < knots_.size(); ++i) {
            if (knots_[i].second >= x) {
                double dv = knots_[i].second - knots_[i - 1].second;
                double dt = knots_[i].first - knots_[i - 1].first;
                return dv > 0.0 ? dt / dv : 0.0;
            }
        }
        return 0.0;
    }
    default:
        throw std::domain_error("density: unsupported kind");
    }
}

} // namespace q1d
