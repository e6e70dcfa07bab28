#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "zolo/errors.hpp"
#include "zolo/structured.hpp"
#include "zolo/zolotarev.hpp"

// Per-class singular-value decay curves, eps-rank bounds, and condition-number
// floors.  A curve certifies sigma_j / sigma_1 <= value(j); fresh certificates
// exist only at indices j = 1 (mod nu) and even/other indices inherit the
// previous value (the staircase in the figures).  Everything is kept in
// log-space: curves drop below realmin around j ~ 200 for well-separated
// geometry.

namespace zolo {

enum class BoundVariant {
    MuTight, // Grotzsch-ring rate, the default
    LogWeak, // log-form rate ("slightly weaker", no mu)
};

inline const char* to_string(BoundVariant v) {
    return v == BoundVariant::MuTight ? "mu-tight" : "log-weak";
}

struct BoundCurve {
    MatrixClass cls = MatrixClass::Pick;
    BoundVariant variant = BoundVariant::MuTight;
    int n = 0, m = 0;
    int nu = 1;          // certificate stride
    int parity = 0;      // [n]_2 where the class uses it
    double log_C = 0;    // log of the leading constant (4 or 16)
    double log_rate = 0; // log rho of this curve's rate (+inf if degenerate)
    double log_rho_mu = 0; // mu-based rate of the underlying symmetric problem
    bool hilbert_form = false;

    // exponent of rho at certificate step k
    double exponent(int k) const {
        switch (cls) {
            case MatrixClass::Pick:
            case MatrixClass::Cauchy:
            case MatrixClass::Loewner:
                return -2.0 * k;
            case MatrixClass::KrylovHermitian:
            case MatrixClass::VandermondeReal:
                return -static_cast<double>(k) + parity;
            case MatrixClass::HankelPSD:
                return variant == BoundVariant::MuTight ? -2.0 * k + 2.0 * parity
                                                        : -2.0 * k + 2.0;
        }
        return 0.0;
    }

    // log of the certified bound on sigma_j/sigma_1 (j is 1-based); clamped at
    // log(1) = 0 and constant within each stride.
    double log_value(int j) const {
        if (j < 1) throw domain_error("bound curve index must be >= 1");
        int k = (j - 1) / nu;
        double e = exponent(k);
        if (!std::isfinite(log_rate))
            return e >= 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
        double v = log_C + e * log_rate;
        return v < 0.0 ? v : 0.0;
    }

    double value(int j) const {
        double lv = log_value(j);
        return lv < std::log(std::numeric_limits<double>::min()) ? 0.0 : std::exp(lv);
    }

    std::vector<double> log_values(int upto) const {
        std::vector<double> v(upto);
        for (int j = 1; j <= upto; ++j) v[j - 1] = log_value(j);
        return v;
    }

    // Exact ratio certificate: log of the factor f_k with
    // sigma_{j + nu k} <= f_k sigma_j for every j >= 1.  Uses the exact
    // product-formula Zolotarev value of the underlying symmetric problem
    // (tighter than the curve's closed-form constant), with the interlacing
    // shift for odd-n Krylov/Vandermonde and the squared factor for Hankel.
    double log_ratio_step(int k) const {
        if (k <= 0) return 0.0;
        switch (cls) {
            case MatrixClass::Pick:
            case MatrixClass::Cauchy:
            case MatrixClass::Loewner:
                return std::min(0.0, detail::log_Zk_product(log_rho_mu, k));
            case MatrixClass::KrylovHermitian:
            case MatrixClass::VandermondeReal: {
                int kk = k - parity;
                if (kk <= 0) return 0.0;
                if (!std::isfinite(log_rho_mu)) return 0.0;
                return std::min(0.0, detail::log_Ekk_product(log_rho_mu, kk));
            }
            case MatrixClass::HankelPSD: {
                int kk = k - parity;
                if (kk <= 0) return 0.0;
                if (!std::isfinite(log_rho_mu)) return 0.0;
                return std::min(0.0, 2.0 * detail::log_Ekk_product(log_rho_mu, kk));
            }
        }
        return 0.0;
    }
};

// sigma_{j+2k}(P_n) <= 4 rho^{-2k} sigma_j(P_n), rho = exp(pi^2/(2 mu(a/b)))
// (weak variant: mu(a/b) -> log(4b/a)).
inline BoundCurve pick_bound(double a, double b, int n,
                             BoundVariant variant = BoundVariant::MuTight) {
    if (!(a > 0.0 && a < b)) throw geometry_error("pick bound requires 0 < a < b");
    BoundCurve c;
    c.cls = MatrixClass::Pick;
    c.variant = variant;
    c.n = c.m = n;
    c.nu = 2;
    c.log_C = std::log(4.0);
    c.log_rho_mu = detail::log_rho_symmetric(a, b);
    c.log_rate = variant == BoundVariant::MuTight
                     ? c.log_rho_mu
                     : pi_const * pi_const / (2.0 * std::log(4.0 * b / a));
    return c;
}

namespace detail {

inline BoundCurve cauchy_like_bound(MatrixClass cls, double a, double b, double c,
                                    double d, int n, int m, BoundVariant variant) {
    IntervalPair pair = IntervalPair::general(a, b, c, d);
    BoundCurve bc;
    bc.cls = cls;
    bc.variant = variant;
    bc.n = n;
    bc.m = m;
    bc.nu = cls == MatrixClass::Loewner ? 2 : 1;
    bc.log_C = std::log(4.0);
    bc.log_rho_mu = log_rho_general(pair);
    bc.log_rate = variant == BoundVariant::MuTight
                      ? bc.log_rho_mu
                      : pi_const * pi_const / (2.0 * std::log(16.0 * pair.gamma));
    return bc;
}

} // namespace detail

// sigma_{j+k}(C) <= 4 [exp(pi^2/(4 mu(1/sqrt(gamma))))]^{-2k} sigma_j(C)
// (weak variant: 4 mu(1/sqrt(gamma)) -> 2 log(16 gamma)).
inline BoundCurve cauchy_bound(double a, double b, double c, double d, int n, int m,
                               BoundVariant variant = BoundVariant::MuTight) {
    return detail::cauchy_like_bound(MatrixClass::Cauchy, a, b, c, d, n, m, variant);
}

// Same rate with nu = 2.
inline BoundCurve loewner_bound(double a, double b, double c, double d, int n,
                                BoundVariant variant = BoundVariant::MuTight) {
    return detail::cauchy_like_bound(MatrixClass::Loewner, a, b, c, d, n, n, variant);
}

namespace detail {

inline void krylov_rates(int n, BoundVariant variant, BoundCurve& c) {
    int half = n / 2;
    c.parity = n % 2;
    if (half >= 2) {
        double ell = std::tan(pi_const / (4.0 * half));
        c.log_rho_mu = log_rho_symmetric(ell, 1.0 / ell);
        c.log_rate = variant == BoundVariant::MuTight
                         ? c.log_rho_mu
                         : pi_const * pi_const / (4.0 * std::log(8.0 * half / pi_const));
    } else {
        // floor(n/2) = 1: tan(pi/4) = 1, the condenser degenerates; every
        // index of the curve that exists (j <= 3) clamps to 1 anyway.
        c.log_rho_mu = std::numeric_limits<double>::infinity();
        c.log_rate = std::numeric_limits<double>::infinity();
    }
}

} // namespace detail

// sigma_{j+2k}(K) <= 4 rho^{-k+[n]_2} sigma_j(K),
// rho = exp(pi^2/(2 mu(tan(pi/(4 floor(n/2)))^2)))
// (weak variant: 2 mu(...) -> 4 log(8 floor(n/2)/pi)).
inline BoundCurve krylov_bound(int n, BoundVariant variant = BoundVariant::MuTight,
                               MatrixClass cls = MatrixClass::KrylovHermitian) {
    if (n < 2) throw domain_error("krylov bound requires n >= 2");
    if (cls != MatrixClass::KrylovHermitian && cls != MatrixClass::VandermondeReal)
        throw capability_error("krylov_bound covers Krylov and Vandermonde classes");
    BoundCurve c;
    c.cls = cls;
    c.variant = variant;
    c.n = c.m = n;
    c.nu = 2;
    c.log_C = std::log(4.0);
    detail::krylov_rates(n, variant, c);
    return c;
}

inline BoundCurve vandermonde_bound(int n, BoundVariant variant = BoundVariant::MuTight) {
    return krylov_bound(n, variant, MatrixClass::VandermondeReal);
}

// Squared Krylov curve for H = K^T K (sigma_j(H) = sigma_j(K)^2): constant 16,
// exponent -2k + 2[n]_2 in the mu-tight variant.  The weak variant keeps the
// parity-independent exponent -2k + 2 with the log rate, the uniform even/odd
// form.
inline BoundCurve hankel_bound(int n, BoundVariant variant = BoundVariant::MuTight) {
    if (n < 2) throw domain_error("hankel bound requires n >= 2");
    BoundCurve c;
    c.cls = MatrixClass::HankelPSD;
    c.variant = variant;
    c.n = c.m = n;
    c.nu = 2;
    c.log_C = std::log(16.0);
    detail::krylov_rates(n, variant, c);
    return c;
}

// The Hilbert matrix specialization of the Cauchy bound:
// sigma_{k+1}(H_n) <= 4 [exp(pi^2/(2 log(8n-4)))]^{-2k} sigma_1(H_n).
inline BoundCurve hilbert_bound(int n) {
    if (n < 2) throw domain_error("hilbert bound requires n >= 2");
    BoundCurve c;
    c.cls = MatrixClass::Cauchy;
    c.variant = BoundVariant::LogWeak;
    c.hilbert_form = true;
    c.n = c.m = n;
    c.nu = 1;
    c.log_C = std::log(4.0);
    c.log_rate = pi_const * pi_const / (2.0 * std::log(8.0 * n - 4.0));
    // exact-step machinery uses the true Hilbert geometry
    IntervalPair pair = IntervalPair::general(-n + 0.5, -0.5, 0.5, n - 0.5);
    c.log_rho_mu = detail::log_rho_general(pair);
    return c;
}

// --- eps-rank upper bounds ----------------------------------------------------

struct EpsRankParams {
    double a = 0, b = 0;   // Pick
    double gamma = 0;      // Cauchy / Loewner
    int n = 0;             // Krylov / Vandermonde / Hankel
};

inline int eps_rank_bound(MatrixClass cls, const EpsRankParams& p, double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw domain_error("eps-rank bound requires 0 < eps < 1");
    const double pi2 = pi_const * pi_const;
    switch (cls) {
        case MatrixClass::Pick: {
            if (!(p.a > 0.0 && p.a < p.b)) throw geometry_error("pick eps-rank: bad interval");
            return 2 * static_cast<int>(
                           std::ceil(std::log(4.0 * p.b / p.a) * std::log(4.0 / eps) / pi2));
        }
        case MatrixClass::Cauchy: {
            if (!(p.gamma > 1.0)) throw geometry_error("cauchy eps-rank: gamma must exceed 1");
            return static_cast<int>(
                std::ceil(std::log(16.0 * p.gamma) * std::log(4.0 / eps) / pi2));
        }
        case MatrixClass::Loewner: {
            if (!(p.gamma > 1.0)) throw geometry_error("loewner eps-rank: gamma must exceed 1");
            return 2 * static_cast<int>(
                           std::ceil(std::log(16.0 * p.gamma) * std::log(4.0 / eps) / pi2));
        }
        case MatrixClass::KrylovHermitian:
        case MatrixClass::VandermondeReal: {
            if (p.n < 2) throw domain_error("krylov eps-rank requires n >= 2");
            double l = std::log(8.0 * (p.n / 2) / pi_const);
            return 2 * static_cast<int>(std::ceil(4.0 * l * std::log(4.0 / eps) / pi2)) + 2;
        }
        case MatrixClass::HankelPSD: {
            if (p.n < 2) throw domain_error("hankel eps-rank requires n >= 2");
            double l = std::log(8.0 * (p.n / 2) / pi_const);
            return 2 * static_cast<int>(std::ceil(2.0 * l * std::log(16.0 / eps) / pi2)) + 2;
        }
    }
    throw capability_error("eps-rank bound: unknown class");
}

// --- condition-number floors ----------------------------------------------------
//
// Returns log kappa_2 lower bounds:
//   Pick:   (1/4) exp(pi^2/(2 log(4b/a)))^{2 ceil(n/2 - 1)}
//   Cauchy: (1/4) exp(pi^2/(2 log(16 gamma)))^{2(n-1)}
//   Hankel: gamma^{n-1} / (16 n) with gamma ~= 3.210

inline double log_condition_lower_bound_pick(double a, double b, int n) {
    if (!(a > 0.0 && a < b)) throw geometry_error("pick condition bound: bad interval");
    if (n < 1) throw domain_error("n must be positive");
    double expo = 2.0 * std::ceil(0.5 * n - 1.0);
    return -std::log(4.0) + expo * pi_const * pi_const / (2.0 * std::log(4.0 * b / a));
}

inline double log_condition_lower_bound_cauchy(double gamma, int n) {
    if (!(gamma > 1.0)) throw geometry_error("cauchy condition bound: gamma must exceed 1");
    if (n < 1) throw domain_error("n must be positive");
    return -std::log(4.0) +
           2.0 * (n - 1.0) * pi_const * pi_const / (2.0 * std::log(16.0 * gamma));
}

inline double log_condition_lower_bound_hankel(int n) {
    if (n < 3) throw domain_error("hankel condition bound needs n >= 3");
    const double gamma = 3.210;
    return (n - 1.0) * std::log(gamma) - std::log(16.0 * n);
}

inline double log_condition_lower_bound(MatrixClass cls, const EpsRankParams& p, int n) {
    switch (cls) {
        case MatrixClass::Pick: return log_condition_lower_bound_pick(p.a, p.b, n);
        case MatrixClass::Cauchy: return log_condition_lower_bound_cauchy(p.gamma, n);
        case MatrixClass::HankelPSD: return log_condition_lower_bound_hankel(n);
        default:
            throw capability_error("condition lower bound available for Pick, Cauchy, Hankel only");
    }
}

} // namespace zolo
