#include "quantize1d/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace q1d {

namespace {
constexpr double kLogClamp = 1e-300;
}

PiecewiseFunction::PiecewiseFunction(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("piecewise: no pieces");
    for (auto& p : pieces_)
        if (!(p.a < p.b)) throw std::invalid_argument("piecewise: empty piece");
    for (size_t i = 1; i < pieces_.size(); ++i)
        if (pieces_[i].a != pieces_[i - 1].b)
            throw std::invalid_argument("piecewise: pieces must partition the domain");

    vmin_ = inf;
    vmax_ = -inf;
    for (auto& p : pieces_) {
        vmin_ = std::min({vmin_, p.value(p.a), p.value(p.b)});
        vmax_ = std::max({vmax_, p.value(p.a), p.value(p.b)});
        value_breaks_.push_back(p.value(p.a));
        value_breaks_.push_back(p.value(p.b));
    }
    std::sort(value_breaks_.begin(), value_breaks_.end());
    value_breaks_.erase(std::unique(value_breaks_.begin(), value_breaks_.end()),
                        value_breaks_.end());

    monotone_ = true;
    for (size_t i = 0; i < pieces_.size() && monotone_; ++i) {
        if (pieces_[i].slope < 0.0) monotone_ = false;
        if (i > 0 && pieces_[i].value(pieces_[i].a) < pieces_[i - 1].value(pieces_[i].a))
            monotone_ = false;
    }
}

PiecewiseFunction PiecewiseFunction::step(const std::vector<double>& breaks,
                                          const std::vector<double>& levels) {
    if (breaks.size() != levels.size() + 1)
        throw std::invalid_argument("step: breaks must have levels.size()+1 entries");
    std::vector<Piece> ps;
    for (size_t i = 0; i < levels.size(); ++i)
        ps.push_back({breaks[i], breaks[i + 1], 0.0, levels[i]});
    return PiecewiseFunction(std::move(ps));
}

double PiecewiseFunction::operator()(double x) const {
    if (x < domain_min() || x > domain_max())
        throw std::domain_error("piecewise: x outside domain");
    for (size_t i = 0; i < pieces_.size(); ++i) {
        bool last = i + 1 == pieces_.size();
        if (x < pieces_[i].b || (last && x <= pieces_[i].b)) return pieces_[i].value(x);
    }
    return pieces_.back().value(x);
}

double PiecewiseFunction::value_right_of_min() const {
    return pieces_.front().value(pieces_.front().a);
}

double PiecewiseFunction::value_left_of_max() const {
    return pieces_.back().value(pieces_.back().b);
}

double PiecewiseFunction::lambda_below(double t) const {
    double s = 0.0;
    for (auto& p : pieces_) {
        if (p.slope == 0.0) {
            if (p.icept < t) s += p.b - p.a;
        } else {
            double x = (t - p.icept) / p.slope; // f(x) = t
            double lo = p.slope > 0.0 ? p.a : std::clamp(x, p.a, p.b);
            double hi = p.slope > 0.0 ? std::clamp(x, p.a, p.b) : p.b;
            s += hi - lo;
        }
    }
    return s;
}

double PiecewiseFunction::lambda_above(double t) const {
    double s = 0.0;
    for (auto& p : pieces_) {
        if (p.slope == 0.0) {
            if (p.icept > t) s += p.b - p.a;
        } else {
            double x = (t - p.icept) / p.slope;
            double lo = p.slope > 0.0 ? std::clamp(x, p.a, p.b) : p.a;
            double hi = p.slope > 0.0 ? p.b : std::clamp(x, p.a, p.b);
            s += hi - lo;
        }
    }
    return s;
}

double PiecewiseFunction::lambda_equal(double t) const {
    double s = 0.0;
    for (auto& p : pieces_)
        if (p.slope == 0.0 && p.icept == t) s += p.b - p.a;
    return s;
}

double PiecewiseFunction::ell(double t) const {
    return 0.5 * (domain_min() + domain_max() + lambda_below(t) - lambda_above(t));
}

double PiecewiseFunction::ell_upper_inverse(double x) const {
    // sup{t : ell(t) <= x}; ell is nondecreasing, piecewise affine in t with
    // breakpoints at the distinct piece-endpoint values, jumps where
    // lambda{f = t} > 0. Comparisons snap within round-off so exact-tie flats
    // keep their full extent.
    const auto& tb = value_breaks_;
    const double tol = 1e-13 * (1.0 + std::abs(x));
    if (ell(tb.front()) > x + tol) return tb.front(); // crossing at/below vmin
    size_t k = tb.size() - 1;
    while (k > 0 && ell(tb[k]) > x + tol) --k;
    if (k + 1 == tb.size()) return tb.back();
    double t0 = tb[k], t1 = tb[k + 1];
    double e0 = ell(t0) + 0.5 * lambda_equal(t0); // ell(t0+)
    double e1 = ell(t1) - 0.5 * lambda_equal(t1); // ell(t1-)
    if (e0 > x + tol) return t0;
    if (e1 <= x + tol) return t1;
    return t0 + (x - e0) * (t1 - t0) / (e1 - e0);
}

double PiecewiseFunction::ell_lower_inverse(double x) const {
    // inf{t : ell(t) >= x}
    const auto& tb = value_breaks_;
    const double tol = 1e-13 * (1.0 + std::abs(x));
    if (ell(tb.front()) >= x - tol) return tb.front();
    size_t k = 0;
    while (k + 1 < tb.size() && ell(tb[k + 1]) < x - tol) ++k;
    if (k + 1 == tb.size()) return tb.back();
    // ell(tb[k]) < x <= ell(tb[k+1]); crossing within (tb[k], tb[k+1]]
    double t0 = tb[k], t1 = tb[k + 1];
    double e0 = ell(t0) + 0.5 * lambda_equal(t0); // ell(t0+)
    double e1 = ell(t1) - 0.5 * lambda_equal(t1); // ell(t1-)
    if (e0 >= x - tol) return t0;
    if (e1 < x - tol) return t1;
    return t0 + (x - e0) * (t1 - t0) / (e1 - e0);
}

double PiecewiseFunction::ell_inverse(double x) const {
    if (!(x > domain_min() && x < domain_max()))
        throw std::domain_error("ell_inverse: x must be interior to the domain");
    return ell_upper_inverse(x);
}

Interval PiecewiseFunction::balanced_set() const {
    double xi = 0.5 * (domain_min() + domain_max());
    return {ell_lower_inverse(xi), ell_upper_inverse(xi)};
}

std::vector<Interval> PiecewiseFunction::growth_points() const {
    if (!monotone_) throw std::domain_error("growth_points: function must be monotone");
    std::vector<Interval> out;
    bool constant = vmax_ == vmin_;
    if (constant) return out;
    out.push_back({domain_min(), domain_min()});
    for (size_t i = 0; i < pieces_.size(); ++i) {
        if (pieces_[i].slope > 0.0) out.push_back({pieces_[i].a, pieces_[i].b});
        if (i > 0 && pieces_[i].value(pieces_[i].a) > pieces_[i - 1].value(pieces_[i].a))
            out.push_back({pieces_[i].a, pieces_[i].a});
    }
    out.push_back({domain_max(), domain_max()});
    std::sort(out.begin(), out.end(), [](const Interval& u, const Interval& v) {
        return u.lo < v.lo || (u.lo == v.lo && u.hi < v.hi);
    });
    std::vector<Interval> merged;
    for (auto& iv : out) {
        if (!merged.empty() && iv.lo <= merged.back().hi)
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        else
            merged.push_back(iv);
    }
    return merged;
}

double PiecewiseFunction::integral_pow_below(double t, double p) const {
    double s = 0.0;
    for (auto& pc : pieces_) {
        if (pc.slope == 0.0) {
            if (pc.icept < t) s += (pc.b - pc.a) * std::pow(t - pc.icept, p);
            continue;
        }
        double x = (t - pc.icept) / pc.slope;
        double lo = pc.slope > 0.0 ? pc.a : std::clamp(x, pc.a, pc.b);
        double hi = pc.slope > 0.0 ? std::clamp(x, pc.a, pc.b) : pc.b;
        if (hi <= lo) continue;
        // antiderivative of (t - slope*x - icept)^p is -(...)^{p+1}/(slope (p+1))
        auto A = [&](double xx) {
            double u = t - pc.value(xx);
            return -std::pow(std::max(u, 0.0), p + 1.0) / (pc.slope * (p + 1.0));
        };
        s += A(hi) - A(lo);
    }
    return s;
}

double PiecewiseFunction::integral_pow_above(double t, double p) const {
    double s = 0.0;
    for (auto& pc : pieces_) {
        if (pc.slope == 0.0) {
            if (pc.icept > t) s += (pc.b - pc.a) * std::pow(pc.icept - t, p);
            continue;
        }
        double x = (t - pc.icept) / pc.slope;
        double lo = pc.slope > 0.0 ? std::clamp(x, pc.a, pc.b) : pc.a;
        double hi = pc.slope > 0.0 ? pc.b : std::clamp(x, pc.a, pc.b);
        if (hi <= lo) continue;
        auto A = [&](double xx) {
            double u = pc.value(xx) - t;
            return std::pow(std::max(u, 0.0), p + 1.0) / (pc.slope * (p + 1.0));
        };
        s += A(hi) - A(lo);
    }
    return s;
}

double PiecewiseFunction::abs_power_norm(double t, double r) const {
    return integral_pow_below(t, r) + integral_pow_above(t, r);
}

double PiecewiseFunction::integral_log_leq(double c, double t) const {
    // int over {f <= c} of log(t - f(x)) dx, assuming t > f on that set.
    double s = 0.0;
    for (auto& pc : pieces_) {
        double lo, hi;
        if (pc.slope == 0.0) {
            if (pc.icept > c) continue;
            lo = pc.a;
            hi = pc.b;
            s += (hi - lo) * std::log(std::max(t - pc.icept, kLogClamp));
            continue;
        }
        double x = (c - pc.icept) / pc.slope;
        lo = pc.slope > 0.0 ? pc.a : std::max(pc.a, std::min(x, pc.b));
        hi = pc.slope > 0.0 ? std::max(pc.a, std::min(x, pc.b)) : pc.b;
        if (hi <= lo) continue;
        // antiderivative of log(t - s x - i): -(u log u - u)/s with u = t - f(x)
        auto A = [&](double xx) {
            double u = std::max(t - pc.value(xx), kLogClamp);
            return -(u * std::log(u) - u) / pc.slope;
        };
        s += A(hi) - A(lo);
    }
    return s;
}

double PiecewiseFunction::integral_log_geq(double c, double t) const {
    // int over {f >= c} of log(f(x) - t) dx, assuming f > t on that set.
    double s = 0.0;
    for (auto& pc : pieces_) {
        double lo, hi;
        if (pc.slope == 0.0) {
            if (pc.icept < c) continue;
            lo = pc.a;
            hi = pc.b;
            s += (hi - lo) * std::log(std::max(pc.icept - t, kLogClamp));
            continue;
        }
        double x = (c - pc.icept) / pc.slope;
        lo = pc.slope > 0.0 ? std::max(pc.a, std::min(x, pc.b)) : pc.a;
        hi = pc.slope > 0.0 ? pc.b : std::max(pc.a, std::min(x, pc.b));
        if (hi <= lo) continue;
        auto A = [&](double xx) {
            double u = std::max(pc.value(xx) - t, kLogClamp);
            return (u * std::log(u) - u) / pc.slope;
        };
        s += A(hi) - A(lo);
    }
    return s;
}

Interval PiecewiseFunction::quantile_set(double c) const {
    if (!monotone_) throw std::domain_error("quantile_set: function must be monotone");
    // [inf{f >= c}, sup{f <= c}]; inf over empty := max I, sup := min I
    double lo = domain_max(), hi = domain_min();
    for (auto& pc : pieces_) {
        double va = pc.value(pc.a), vb = pc.value(pc.b);
        if (std::max(va, vb) >= c) {
            if (va >= c)
                lo = pc.a;
            else
                lo = (c - pc.icept) / pc.slope;
            break;
        }
    }
    for (size_t i = pieces_.size(); i-- > 0;) {
        auto& pc = pieces_[i];
        double va = pc.value(pc.a), vb = pc.value(pc.b);
        if (std::min(va, vb) <= c) {
            if (vb <= c)
                hi = pc.b;
            else
                hi = (c - pc.icept) / pc.slope;
            break;
        }
    }
    return {lo, hi};
}

} // namespace q1d
