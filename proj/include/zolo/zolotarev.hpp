#pragma once

#include <cmath>
#include <limits>

#include "zolo/elliptic.hpp"
#include "zolo/errors.hpp"
#include "zolo/interval.hpp"

// Zolotarev numbers Z_k(E,F) for interval condensers, the two-sided sandwich
// estimates, the Blaschke quantity E_k, and the sign-function minimax value
// E_{k,k}.  All products are evaluated in log-space: k log(rho) passes 745
// quickly, so linear values are reported as 0 with an underflow flag.

namespace zolo {

namespace detail {

// Stop rule shared by every infinite product here: factors are 1 + O(q^tau),
// so iteration ends at the first factor with q^tau < 2^-60.
inline constexpr double log_q_cutoff = -41.58883083359672; // log(2^-60)

// log Z_k as a function of log(rho) alone:
//   log(4) - 2k log(rho) + 4 sum_tau [log1p(rho^{-8 tau k}) - log1p(rho^{4k - 8 tau k})]
inline double log_Zk_product(double log_rho, int k) {
    if (k == 0) return 0.0;
    double acc = std::log(4.0) - 2.0 * k * log_rho;
    for (int tau = 1;; ++tau) {
        double t_even = std::exp(-8.0 * tau * k * log_rho);
        double t_odd = std::exp((4.0 * k - 8.0 * tau * k) * log_rho);
        acc += 4.0 * (std::log1p(t_even) - std::log1p(t_odd));
        if (-4.0 * k * tau * log_rho < log_q_cutoff) break;
    }
    return acc;
}

// log E_{k,k} from log(rho): the same theta product at q = rho^{-2k}.
inline double log_Ekk_product(double log_rho, int k) {
    if (k == 0) return 0.0;
    double acc = std::log(4.0) - k * log_rho;
    for (int tau = 1;; ++tau) {
        double t_even = std::exp(-4.0 * tau * k * log_rho);
        double t_odd = std::exp((2.0 * k - 4.0 * tau * k) * log_rho);
        acc += 4.0 * (std::log1p(t_even) - std::log1p(t_odd));
        if (-2.0 * k * tau * log_rho < log_q_cutoff) break;
    }
    return acc;
}

} // namespace detail

struct ZolotarevEvaluation {
    int k = 0;
    double rho = 0;       // exp(pi^2 / (2 mu)); may overflow for near-touching geometry
    double log_rho = 0;   // always finite
    double log_Zk = 0;    // natural log of the product-formula value
    double Zk = 1;        // exp(log_Zk); 0 if underflowed
    bool underflow = false;
    double lower = 0, upper = 0;         // Cor.-style sandwich, linear (0 on underflow)
    double log_lower = 0, log_upper = 0; // same in log-space
    double gamma = 0, alpha = 0;         // populated for general pairs
};

namespace detail {

// log rho for the symmetric pair ([-b,-a],[a,b]):  log rho = pi^2/(2 mu(a/b)).
// The modulus pair (a/b, sqrt((b-a)(b+a))/b) is formed without cancellation.
inline double log_rho_symmetric(double a, double b) {
    double lam = a / b;
    double comp = std::sqrt((b - a) * (b + a)) / b;
    // normalize rounding drift so from_pair's 4-ulp identity check passes
    double n = std::sqrt(lam * lam + comp * comp);
    ModulusValue m = ModulusValue::from_pair(lam / n, comp / n);
    return pi_const * pi_const / (2.0 * grotzsch_mu(m));
}

// log rho for a general pair via the transplanted symmetric pair (1, alpha):
// modulus 1/alpha with complement sqrt((alpha-1)(alpha+1))/alpha.
inline double log_rho_general(const IntervalPair& p) {
    double lam = 1.0 / p.alpha;
    double comp = std::sqrt(p.alpha_minus_1 * (p.alpha + 1.0)) / p.alpha;
    double n = std::sqrt(lam * lam + comp * comp);
    ModulusValue m = ModulusValue::from_pair(lam / n, comp / n);
    return pi_const * pi_const / (2.0 * grotzsch_mu(m));
}

inline void fill_from_log_rho(ZolotarevEvaluation& ev, double log_rho, int k) {
    ev.k = k;
    ev.log_rho = log_rho;
    ev.rho = std::exp(log_rho);
    const double log4 = std::log(4.0);
    if (k == 0) {
        ev.log_Zk = 0.0;
        ev.Zk = 1.0;
    } else {
        ev.log_Zk = log_Zk_product(log_rho, k);
        ev.underflow = ev.log_Zk < std::log(std::numeric_limits<double>::min());
        ev.Zk = ev.underflow ? 0.0 : std::exp(ev.log_Zk);
    }
    // sandwich: 4 rho^{-2k}/(1+rho^{-4k})^4 <= Z_k <= 4 rho^{-2k}/(1+rho^{-4k})^2
    double q = std::exp(-4.0 * k * log_rho);
    ev.log_lower = log4 - 2.0 * k * log_rho - 4.0 * std::log1p(q);
    ev.log_upper = log4 - 2.0 * k * log_rho - 2.0 * std::log1p(q);
    double logmin = std::log(std::numeric_limits<double>::min());
    ev.lower = ev.log_lower < logmin ? 0.0 : std::exp(ev.log_lower);
    ev.upper = ev.log_upper < logmin ? 0.0 : std::exp(ev.log_upper);
}

} // namespace detail

// Z_k([-b,-a],[a,b]) by the corrected infinite product.
inline ZolotarevEvaluation zolotarev_number(const IntervalPair& pair, int k) {
    if (pair.kind != IntervalPair::Kind::symmetric)
        throw geometry_error("zolotarev_number expects a symmetric pair");
    if (k < 0) throw domain_error("k must be nonnegative");
    ZolotarevEvaluation ev;
    detail::fill_from_log_rho(ev, detail::log_rho_symmetric(pair.a, pair.b), k);
    return ev;
}

inline ZolotarevEvaluation zolotarev_number(double a, double b, int k) {
    return zolotarev_number(IntervalPair::symmetric(a, b), k);
}

// Z_k([a,b],[c,d]) for disjoint intervals: transplant onto ([-alpha,-1],[1,alpha])
// and evaluate the symmetric product there.  Equivalently rho = exp(pi^2/(4 mu(1/sqrt(gamma))))
// via Gauss' transformation mu(1/alpha) = 2 mu(1/sqrt(gamma)).
inline ZolotarevEvaluation zolotarev_number_general(const IntervalPair& pair, int k) {
    if (pair.kind != IntervalPair::Kind::general)
        throw geometry_error("zolotarev_number_general expects a general pair");
    if (k < 0) throw domain_error("k must be nonnegative");
    ZolotarevEvaluation ev;
    detail::fill_from_log_rho(ev, detail::log_rho_general(pair), k);
    ev.gamma = pair.gamma;
    ev.alpha = pair.alpha;
    return ev;
}

// log E_k([eta,1]) = log( 2 rho^{-k} prod (1+rho^{-8 tau k})^2/(1+rho^{4k-8 tau k})^2 ),
// rho = exp(pi^2/(2 mu(eta))).  Satisfies E_k = sqrt(Z_k([-1,-eta],[eta,1])).
inline double log_blaschke_Ek(double eta, int k) {
    if (!(eta > 0.0 && eta < 1.0))
        throw domain_error("blaschke_Ek requires 0 < eta < 1");
    if (k < 0) throw domain_error("k must be nonnegative");
    if (k == 0) return 0.0;
    double log_rho = detail::log_rho_symmetric(eta, 1.0);
    double acc = std::log(2.0) - k * log_rho;
    for (int tau = 1;; ++tau) {
        double t_even = std::exp(-8.0 * tau * k * log_rho);
        double t_odd = std::exp((4.0 * k - 8.0 * tau * k) * log_rho);
        acc += 2.0 * (std::log1p(t_even) - std::log1p(t_odd));
        if (-4.0 * k * tau * log_rho < detail::log_q_cutoff) break;
    }
    return acc;
}

inline double blaschke_Ek(double eta, int k) {
    double lg = log_blaschke_Ek(eta, k);
    return lg < std::log(std::numeric_limits<double>::min()) ? 0.0 : std::exp(lg);
}

// log E_{k,k}([-b,-a],[a,b]): minimax error of degree-(k,k) rational
// approximation to sign on [-b,-a] u [a,b].  Product with q = rho^{-2k}:
//   E_{k,k} = 4 rho^{-k} prod (1+rho^{-4 tau k})^4/(1+rho^{2k-4 tau k})^4.
// Equals 2 sqrt(Z_k)/(1+Z_k).  The degree-parity identity
// E_{k,k} = E_{2 floor((k-1)/2)+1, 2 floor(k/2)} is representational only:
// this single entry point keyed by k covers both.
inline double log_sign_minimax_Ekk(double a, double b, int k) {
    if (!(a > 0.0 && a < b)) throw geometry_error("sign_minimax requires 0 < a < b");
    if (k < 1) throw domain_error("sign_minimax requires k >= 1");
    return detail::log_Ekk_product(detail::log_rho_symmetric(a, b), k);
}

inline double sign_minimax_Ekk(double a, double b, int k) {
    double lg = log_sign_minimax_Ekk(a, b, k);
    return lg < std::log(std::numeric_limits<double>::min()) ? 0.0 : std::exp(lg);
}

// The Krylov step factor: 2 sqrt(Z_k)/(1+Z_k) with Z_k = Z_k([-1/l,-l],[l,1/l]),
// l = tan(pi/(2n)), n even.  Bounds Z_{2k}(E, F+ u F-) for any E in R, and hence
// the 2k-step singular value ratios of n-column Krylov matrices with Hermitian
// argument; Z_{2k+1} <= Z_{2k} covers odd steps.
inline double log_krylov_Z2k_bound(int n, int k) {
    if (n < 2 || (n % 2) != 0)
        throw domain_error("krylov_Z2k_bound requires even n >= 2 (apply interlacing first)");
    if (k < 0) throw domain_error("k must be nonnegative");
    if (k == 0) return 0.0;
    double ell = std::tan(pi_const / (2.0 * n));
    if (!(ell < 1.0))
        throw geometry_error("krylov_Z2k_bound: degenerate geometry (n = 2 admits no k >= 1 step)");
    return log_sign_minimax_Ekk(ell, 1.0 / ell, k);
}

inline double krylov_Z2k_bound(int n, int k) {
    double lg = log_krylov_Z2k_bound(n, k);
    return lg < std::log(std::numeric_limits<double>::min()) ? 0.0 : std::exp(lg);
}

} // namespace zolo
