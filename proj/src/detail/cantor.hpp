#pragma once

#include <cmath>

namespace q1d::detail {

// Digit-expansion evaluation of the Cantor "devil staircase" C and its upper
// inverse U(t) = sup{C <= t}, together with exact partial integrals of both.
// Doubles are dyadic rationals, so expanding the binary digits of t resolves
// every dyadic ambiguity toward the upper (right-continuous) branch.

/// Classical Cantor function C(x) on [0,1], clamped outside.
inline double devil_staircase(double x, int depth) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double acc = 0.0, scale = 0.5;
    for (int k = 0; k < depth; ++k) {
        x *= 3.0;
        int d = static_cast<int>(x);
        x -= d;
        if (d == 1) return acc + scale;        // inside a removed gap
        if (d >= 2) acc += scale;
        scale *= 0.5;
        if (x == 0.0) break;
    }
    return acc;
}

/// U(t) = sup{C <= t}: maps the binary digits of t to ternary digits {0,2}.
inline double cantor_upper_inverse(double t, int depth) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double acc = 0.0, scale = 1.0 / 3.0;
    for (int k = 0; k < depth; ++k) {
        t *= 2.0;
        if (t >= 1.0) {
            acc += 2.0 * scale;
            t -= 1.0;
        }
        scale /= 3.0;
        if (t == 0.0) break;
    }
    return acc;
}

/// inf{C >= t}: the lower end of the C-preimage of the dyadic rational t.
inline double cantor_lower_inverse(double t, int depth) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double acc = 0.0, scale = 1.0 / 3.0;
    double gap = 0.0; // 3^{-m} for the last nonzero binary digit m
    for (int k = 0; k < depth; ++k) {
        t *= 2.0;
        if (t >= 1.0) {
            acc += 2.0 * scale;
            t -= 1.0;
            gap = scale;
        }
        scale /= 3.0;
        if (t == 0.0) break;
    }
    return acc - gap;
}

/// int_0^t U(s) ds by the self-similar split at t = 1/2.
inline double cantor_quantile_integral(double t, int depth) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 0.5;
    double s = 0.0, m = 1.0;
    for (int k = 0; k < depth && t > 0.0; ++k) {
        if (t >= 0.5) {
            s += m * (1.0 / 12.0 + (2.0 / 3.0) * (t - 0.5));
            t = 2.0 * t - 1.0;
        } else {
            t = 2.0 * t;
        }
        m /= 6.0;
    }
    return s;
}

/// int_0^t U(s)^2 ds; S2(1) = 3/8.
inline double cantor_quantile_square_integral(double t, int depth) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 0.375;
    if (depth <= 0) return 0.0;
    if (t >= 0.5) {
        double u = 2.0 * t - 1.0;
        return 1.0 / 48.0 + (4.0 / 9.0) * (t - 0.5) +
               (2.0 / 9.0) * cantor_quantile_integral(u, depth - 1) +
               cantor_quantile_square_integral(u, depth - 1) / 18.0;
    }
    return cantor_quantile_square_integral(2.0 * t, depth - 1) / 18.0;
}

/// int_0^t C(s) ds by the self-similar split at thirds; S(1) = 1/2.
inline double devil_integral(double t, int depth) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 0.5;
    if (depth <= 0) return 0.0;
    if (t <= 1.0 / 3.0) return devil_integral(3.0 * t, depth - 1) / 6.0;
    if (t <= 2.0 / 3.0) return 1.0 / 12.0 + 0.5 * (t - 1.0 / 3.0);
    return 0.25 + 0.5 * (t - 2.0 / 3.0) + devil_integral(3.0 * t - 2.0, depth - 1) / 6.0;
}

/// int_0^t C(s)^2 ds; S2(1) = 3/10.
inline double devil_square_integral(double t, int depth) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 0.3;
    if (depth <= 0) return 0.0;
    if (t <= 1.0 / 3.0) return devil_square_integral(3.0 * t, depth - 1) / 12.0;
    if (t <= 2.0 / 3.0) return 1.0 / 40.0 + 0.25 * (t - 1.0 / 3.0);
    double u = 3.0 * t - 2.0;
    return 13.0 / 120.0 + 0.25 * (t - 2.0 / 3.0) + devil_integral(u, depth - 1) / 6.0 +
           devil_square_integral(u, depth - 1) / 12.0;
}

} // namespace q1d::detail
