#pragma once

#include <cmath>
#include <limits>

#include "zolo/errors.hpp"

// Double-precision elliptic kernel: complete elliptic integral K, the
// Grotzsch ring function mu, Jacobi sn, and the theta-quotient product that
// inverts mu.  Everything downstream (Zolotarev numbers, decay rates, ADI
// shifts) is built on these four functions.

namespace zolo {

inline constexpr double pi_const = 3.14159265358979323846;

// Elliptic modulus lambda together with its complement sqrt(1-lambda^2).
//
// The complement is stored explicitly: for lambda -> 1 (interval ratios b/a up
// to 1e8 drive lambda' = a/b tiny) forming sqrt(1-lambda^2) from lambda alone
// loses all relative accuracy, so the constructor that knows the accurate
// complement must be able to supply it.
struct ModulusValue {
    double lambda;
    double complementary;

    static ModulusValue from_lambda(double lam) {
        if (!(lam >= 0.0 && lam <= 1.0))
            throw domain_error("modulus must lie in [0,1]");
        // (1-lam)(1+lam) keeps accuracy down to lam' ~ sqrt(eps)
        return ModulusValue{lam, std::sqrt((1.0 - lam) * (1.0 + lam))};
    }

    static ModulusValue from_complementary(double comp) {
        if (!(comp >= 0.0 && comp <= 1.0))
            throw domain_error("complementary modulus must lie in [0,1]");
        return ModulusValue{std::sqrt((1.0 - comp) * (1.0 + comp)), comp};
    }

    // Both values supplied by a caller that computed them stably.
    static ModulusValue from_pair(double lam, double comp) {
        if (!(lam >= 0.0 && lam <= 1.0) || !(comp >= 0.0 && comp <= 1.0))
            throw domain_error("modulus pair must lie in [0,1]");
        double resid = std::abs(lam * lam + comp * comp - 1.0);
        if (resid > 4.0 * std::numeric_limits<double>::epsilon())
            throw domain_error("modulus pair violates lambda^2 + lambda'^2 = 1");
        return ModulusValue{lam, comp};
    }
};

namespace detail {

struct AgmResult {
    double value;
    int iterations;
};

// Arithmetic-geometric mean of (a0, b0), a0 >= b0 > 0.  Quadratic convergence;
// 12 iterations cover b0 down to ~1e-16 relative to a0.
inline AgmResult agm(double a0, double b0) {
    double a = a0, b = b0;
    int it = 0;
    // 1.5 ulp stop: sqrt rounding can leave a and b oscillating one ulp apart
    while (std::abs(a - b) > 1.5 * std::numeric_limits<double>::epsilon() * a && it < 40) {
        double am = 0.5 * (a + b);
        double gm = std::sqrt(a * b);
        a = am;
        b = gm;
        ++it;
    }
    return {0.5 * (a + b), it};
}

} // namespace detail

// Complete elliptic integral of the first kind,
//   K(lambda) = int_0^1 dt / sqrt((1-t^2)(1-lambda^2 t^2)),
// evaluated as pi / (2 agm(1, lambda')).
inline double complete_elliptic_K(const ModulusValue& m) {
    // the divergence test is on the complement: lambda rounds to 1.0 already
    // for b/a ~ 1e8 while K = pi/(2 agm(1, lambda')) stays perfectly finite
    if (m.complementary == 0.0)
        throw domain_error("K(1) diverges (logarithmic singularity)");
    if (m.lambda < 0.0 || m.lambda > 1.0)
        throw domain_error("K: modulus outside [0,1]");
    return pi_const / (2.0 * detail::agm(1.0, m.complementary).value);
}

// Grotzsch ring function mu(lambda) = (pi/2) K(lambda') / K(lambda),
// a strictly decreasing bijection [0,1] -> [inf,0].
// Computed as (pi/2) agm(1,lambda') / agm(1,lambda): both AGMs run at full
// relative accuracy however extreme the modulus, which is what the rest of the
// library relies on for decay rates with b/a up to 1e8.
inline double grotzsch_mu(const ModulusValue& m) {
    if (m.lambda <= 0.0)
        throw domain_error("mu(0) is infinite");
    if (m.lambda > 1.0)
        throw domain_error("mu: modulus outside (0,1]");
    if (m.complementary == 0.0) return 0.0; // mu(1) = 0
    return 0.5 * pi_const * detail::agm(1.0, m.complementary).value /
           detail::agm(1.0, m.lambda).value;
}

// Jacobi sn(u; lambda) by the descending Landen transformation
//   k_{i+1} = (1 - k'_i)/(1 + k'_i),   sn(u;k) = (1+k1) s1 / (1 + k1 s1^2),
// with s1 = sn(u/(1+k1); k1), recursed until the modulus drops below 1e-16
// (at most 16 stages) where sn = sin.  The complementary modulus is carried
// through the recursion, so lambda arbitrarily close to 1 stays accurate as
// long as the caller supplied an accurate complement.
inline double jacobi_sn(double u, const ModulusValue& m) {
    if (m.complementary == 0.0)
        throw domain_error("sn with modulus 1 not supported (degenerates to tanh)");
    if (m.lambda < 1e-16) {
        double s = std::sin(u);
        return s;
    }
    constexpr int max_stages = 16;
    double k[max_stages + 1];
    double kc = m.complementary;
    k[0] = m.lambda;
    int stages = 0;
    double scale = 1.0; // product of (1 + k_i), i = 1..stages
    while (stages < max_stages && k[stages] >= 1e-16) {
        double knext = (1.0 - kc) / (1.0 + kc);
        double kcnext = 2.0 * std::sqrt(kc) / (1.0 + kc);
        ++stages;
        k[stages] = knext;
        kc = kcnext;
        scale *= (1.0 + knext);
    }
    double s = std::sin(u / scale);
    for (int i = stages; i >= 1; --i) {
        s = (1.0 + k[i]) * s / (1.0 + k[i] * s * s);
    }
    if (s > 1.0) s = 1.0;
    if (s < -1.0) s = -1.0;
    return s;
}

namespace detail {

struct SnCnDn {
    double sn, cn, dn;
};

// sn, cn, dn jointly by the same descending Landen chain.  The quantity
// 1 - k_i is carried exactly as m1_i = 2 kc_{i-1}/(1 + kc_{i-1}), so
// dn = (m1 + k cn1^2)/(1 + k sn1^2) keeps full relative accuracy down to
// dn(K) = lambda' even when lambda' is tiny.  Needed for ADI shift values
// b*dn(...) and the c_j of the extremal rational.
inline SnCnDn jacobi_sn_cn_dn(double u, const ModulusValue& m) {
    if (m.complementary == 0.0)
        throw domain_error("sn/cn/dn with modulus 1 not supported");
    if (m.lambda < 1e-16)
        return {std::sin(u), std::cos(u), 1.0};
    constexpr int max_stages = 16;
    double k[max_stages + 1];
    double m1[max_stages + 1]; // m1[i] = 1 - k[i], formed without cancellation
    double kc = m.complementary;
    k[0] = m.lambda;
    int stages = 0;
    double scale = 1.0;
    while (stages < max_stages && k[stages] >= 1e-16) {
        double knext = (1.0 - kc) / (1.0 + kc);
        double m1next = 2.0 * kc / (1.0 + kc);
        kc = 2.0 * std::sqrt(kc) / (1.0 + kc);
        ++stages;
        k[stages] = knext;
        m1[stages] = m1next;
        scale *= (1.0 + knext);
    }
    double ub = u / scale;
    double s = std::sin(ub), c = std::cos(ub), d = 1.0;
    for (int i = stages; i >= 1; --i) {
        double den = 1.0 + k[i] * s * s;
        double snew = (1.0 + k[i]) * s / den;
        double cnew = c * d / den;
        double dnew = (m1[i] + k[i] * c * c) / den;
        s = snew;
        c = cnew;
        d = dnew;
    }
    if (s > 1.0) s = 1.0;
    if (s < -1.0) s = -1.0;
    return {s, c, d};
}

} // namespace detail

// log of the theta quotient kappa(q) = (theta2(0,q)/theta3(0,q))^2
//                                    = 4 sqrt(q) prod (1+q^{2t})^4/(1+q^{2t-1})^4.
// This is the inverse of mu under q = exp(-2 mu(kappa)).  The product is
// truncated at the first factor with q^t < 2^-60; factors are 1 + O(q^t), so
// the truncation error is below one ulp.
inline double log_theta_quotient_kappa(double q) {
    if (!(q > 0.0 && q < 1.0))
        throw domain_error("theta quotient requires 0 < q < 1");
    double logq = std::log(q);
    double acc = std::log(4.0) + 0.5 * logq;
    for (int t = 1;; ++t) {
        double q_even = std::exp((2.0 * t) * logq);
        double q_odd = std::exp((2.0 * t - 1.0) * logq);
        acc += 4.0 * (std::log1p(q_even) - std::log1p(q_odd));
        if (std::exp(t * logq) < 0x1.0p-60) break;
        if (t > 1 << 20) throw domain_error("theta quotient: q too close to 1");
    }
    return acc;
}

inline double theta_quotient_kappa(double q) {
    return std::exp(log_theta_quotient_kappa(q));
}

} // namespace zolo
