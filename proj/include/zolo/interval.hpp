#pragma once

#include <cmath>

#include "zolo/errors.hpp"

namespace zolo {

// Real Mobius transformation z -> (a z + b)/(c z + d), det != 0.
struct Mobius {
    double a, b, c, d;

    double operator()(double z) const { return (a * z + b) / (c * z + d); }

    Mobius inverse() const { return Mobius{d, -b, -c, a}; }

    // The unique Mobius map sending (z1,z2,z3) -> (w1,w2,w3), built by
    // composing the two cross-ratio maps through (0,1,inf).
    static Mobius through(double z1, double z2, double z3,
                          double w1, double w2, double w3) {
        // S(z) = (z-z1)(z2-z3) / ((z-z3)(z2-z1)) sends z1,z2,z3 -> 0,1,inf
        auto standard = [](double p1, double p2, double p3) {
            return Mobius{p2 - p3, -p1 * (p2 - p3), p2 - p1, -p3 * (p2 - p1)};
        };
        Mobius S = standard(z1, z2, z3);
        Mobius W = standard(w1, w2, w3).inverse();
        // compose W o S
        return Mobius{W.a * S.a + W.b * S.c, W.a * S.b + W.b * S.d,
                      W.c * S.a + W.d * S.c, W.c * S.b + W.d * S.d};
    }
};

// Condenser geometry (E, F): either the symmetric pair E = [-b,-a], F = [a,b]
// with 0 < a < b, or two disjoint real intervals [a,b] and [c,d].
//
// A general pair carries the absolute cross-ratio
//     gamma = |c-a||d-b| / (|c-b||d-a|) > 1
// and alpha = -1 + 2 gamma + 2 sqrt(gamma^2 - gamma) > 1, the endpoint of the
// symmetric pair ([-alpha,-1],[1,alpha]) it transplants onto.
struct IntervalPair {
    enum class Kind { symmetric, general };

    Kind kind;
    double a, b;          // symmetric: 0 < a < b; general: first interval
    double c = 0, d = 0;  // general: second interval
    double gamma = 0;     // general only
    double alpha = 0;     // general only
    double alpha_minus_1 = 0; // kept separately: accurate when gamma -> 1

    static IntervalPair symmetric(double a, double b) {
        if (!(a > 0.0) || !(a < b) || !std::isfinite(a) || !std::isfinite(b))
            throw geometry_error("symmetric pair requires 0 < a < b < inf");
        IntervalPair p;
        p.kind = Kind::symmetric;
        p.a = a;
        p.b = b;
        return p;
    }

    static IntervalPair general(double a, double b, double c, double d) {
        if (!(a < b) || !(c < d))
            throw geometry_error("general pair requires nondegenerate intervals a < b, c < d");
        if (!(b < c || d < a))
            throw geometry_error("separation condition violated: intervals must be disjoint");
        IntervalPair p;
        p.kind = Kind::general;
        p.a = a;
        p.b = b;
        p.c = c;
        p.d = d;
        p.gamma = std::abs(c - a) * std::abs(d - b) /
                  (std::abs(c - b) * std::abs(d - a));
        if (!std::isfinite(p.gamma) || !(p.gamma > 1.0))
            throw geometry_error("cross-ratio degenerate (intervals touch?)");
        p.alpha_minus_1 = 2.0 * (p.gamma - 1.0) +
                          2.0 * std::sqrt(p.gamma * (p.gamma - 1.0));
        p.alpha = 1.0 + p.alpha_minus_1;
        return p;
    }

    // For a general pair: the map T with T(left) = [-alpha,-1], T(right) = [1,alpha],
    // where "left" is the interval with smaller coordinates.
    Mobius transplant() const {
        if (kind != Kind::general)
            throw geometry_error("transplant defined for general pairs only");
        double lhi = b, rlo = c, rhi = d;
        if (d < a) { // second interval lies to the left
            lhi = d; rlo = a; rhi = b;
        }
        // the left interval's lower endpoint maps to -alpha automatically
        // (the cross-ratio was matched when alpha was computed)
        return Mobius::through(lhi, rlo, rhi, -1.0, 1.0, alpha);
    }

    bool first_interval_is_left() const {
        if (kind != Kind::general) return true;
        return b < c;
    }
};

} // namespace zolo
