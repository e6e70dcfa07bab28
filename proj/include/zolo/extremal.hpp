#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "zolo/elliptic.hpp"
#include "zolo/errors.hpp"
#include "zolo/interval.hpp"
#include "zolo/zolotarev.hpp"

// The extremal rational function for Z_k([-b,-a],[a,b]):
//
//   rtilde(z) = M z prod_{j even} (z^2+c_j) / prod_{j odd} (z^2+c_j),
//   c_j = a^2 sn^2(j K(kappa)/k; kappa) / (1 - sn^2(...)),  kappa = sqrt(1-(a/b)^2),
//
// the minimax approximation to sign on [-b,-a] u [a,b], and the combined
//
//   R(z) = (1 + s rtilde(z)) / (1 - s rtilde(z)),   s = (1+Z_k)/(1-Z_k),
//
// which attains sup_E |R| / inf_F |R| = Z_k.  R's zeros and poles (the fADI
// shift parameters) have the closed form
//
//   poles = { b dn((2j-1) K(kappa)/(2k); kappa) }  in (a,b),  zeros = -poles,
//
// so R(z) = (-1)^k prod (z + p_j)/(z - p_j) with R(0) = 1, and |R| is
// evaluated in log-space from this factoring.  The factored route matters:
// once Z_k drops below eps^2 the oscillation of s*rtilde around 1 is not
// representable in doubles and the Mobius quotient form loses the value of
// |R| on E entirely, while the factored form keeps ~1e-14 relative accuracy.

namespace zolo {

struct ExtremalRational {
    int k = 0;
    double a = 0, b = 0;
    ModulusValue kappa{0, 1};
    std::vector<double> c;      // c_1..c_{k-1}; c[j-1] is c_j, strictly increasing
    double M = 0;               // equioscillation normalization, > 0
    double log_M = 0;
    double Zk = 0, log_Zk = 0;
    double mobius_scale = 0;    // s = (1+Z_k)/(1-Z_k)
    std::vector<std::complex<double>> zeros; // sorted by real part, in (-b,-a)
    std::vector<std::complex<double>> poles; // sorted by real part, in (a,b)

    // log G(x) for x > 0 where rtilde(x) = M G(x) on the positive axis.
    double log_abs_G(double x) const {
        double acc = std::log(x);
        for (int j = 2; j <= k - 1; j += 2) acc += std::log(x * x + c[j - 1]);
        for (int j = 1; j <= k - 1; j += 2) acc -= std::log(x * x + c[j - 1]);
        return acc;
    }

    // d/dx log G(x)
    double dlog_abs_G(double x) const {
        double acc = 1.0 / x;
        for (int j = 2; j <= k - 1; j += 2) acc += 2.0 * x / (x * x + c[j - 1]);
        for (int j = 1; j <= k - 1; j += 2) acc -= 2.0 * x / (x * x + c[j - 1]);
        return acc;
    }

    double rtilde(double z) const {
        if (z == 0.0) return 0.0;
        double mag = std::exp(log_M + log_abs_G(std::abs(z)));
        return z > 0 ? mag : -mag;
    }

    std::complex<double> rtilde(std::complex<double> z) const {
        std::complex<double> num = z;
        std::complex<double> den = 1.0;
        for (int j = 2; j <= k - 1; j += 2) num *= (z * z + c[j - 1]);
        for (int j = 1; j <= k - 1; j += 2) den *= (z * z + c[j - 1]);
        return M * num / den;
    }

    // sign(z) - rtilde(z) on [-b,-a] u [a,b]; full absolute accuracy via expm1.
    double sign_error(double z) const {
        double w = log_M + log_abs_G(std::abs(z));
        return z > 0 ? -std::expm1(w) : std::expm1(w);
    }

    // Mobius quotient form; accurate while Z_k is well above eps^2.
    double R_mobius(double z) const {
        double t = mobius_scale * rtilde(z);
        return (1.0 + t) / (1.0 - t);
    }

    std::complex<double> R_mobius(std::complex<double> z) const {
        std::complex<double> t = mobius_scale * rtilde(z);
        return (1.0 + t) / (1.0 - t);
    }

    // log |R(z)| from the factored form; valid for all real z.
    double log_abs_R(double z) const {
        double acc = 0.0;
        for (const auto& p : poles)
            acc += std::log(std::abs(z + p.real())) - std::log(std::abs(z - p.real()));
        return acc;
    }

    // R(z) with sign from the factored form: R = (-1)^k prod (z+p)/(z-p).
    double R_factored(double z) const {
        int neg = k; // (-1)^k
        double acc = 0.0;
        for (const auto& pc : poles) {
            double p = pc.real();
            double num = z + p, den = z - p;
            if (num < 0) ++neg;
            if (den < 0) ++neg;
            acc += std::log(std::abs(num)) - std::log(std::abs(den));
        }
        double mag = std::exp(acc);
        return (neg % 2) ? -mag : mag;
    }
};

namespace detail {

// G evaluated on a Chebyshev grid of [a,b]; local extrema refined by golden
// section.  Returns log G at the global min and max.  In regimes where the
// oscillation of G is below machine precision the two coincide to rounding,
// which still pins M (= 2/(Gmin+Gmax)) to full relative accuracy.
inline std::pair<double, double> log_G_extrema(const ExtremalRational& r) {
    const double a = r.a, b = r.b;
    const int N = 4096;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::vector<double> xs(N), gs(N);
    for (int i = 0; i < N; ++i) {
        // Chebyshev points, ascending
        xs[i] = mid - half * std::cos(pi_const * i / (N - 1));
        gs[i] = r.log_abs_G(xs[i]);
    }
    xs.front() = a;
    xs.back() = b;

    auto golden = [&](double lo, double hi, bool maximize) {
        const double gr = 0.6180339887498949;
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double f1 = r.log_abs_G(x1), f2 = r.log_abs_G(x2);
        for (int it = 0; it < 90 && (hi - lo) > 1e-14 * (std::abs(lo) + std::abs(hi)); ++it) {
            if ((f1 > f2) == maximize) {
                hi = x2; x2 = x1; f2 = f1;
                x1 = hi - gr * (hi - lo);
                f1 = r.log_abs_G(x1);
            } else {
                lo = x1; x1 = x2; f1 = f2;
                x2 = lo + gr * (hi - lo);
                f2 = r.log_abs_G(x2);
            }
        }
        return r.log_abs_G(0.5 * (lo + hi));
    };

    double gmin = gs[0], gmax = gs[0];
    for (int i = 0; i < N; ++i) {
        bool lmax = (i == 0 || gs[i] >= gs[i - 1]) && (i == N - 1 || gs[i] >= gs[i + 1]);
        bool lmin = (i == 0 || gs[i] <= gs[i - 1]) && (i == N - 1 || gs[i] <= gs[i + 1]);
        if (!lmax && !lmin) continue;
        double v = gs[i];
        if (i > 0 && i < N - 1) v = golden(xs[i - 1], xs[i + 1], lmax);
        gmin = std::min(gmin, v);
        gmax = std::max(gmax, v);
    }
    return {gmin, gmax};
}

} // namespace detail

inline ExtremalRational extremal_rational(double a, double b, int k) {
    if (k < 1) throw domain_error("extremal rational requires degree k >= 1");
    if (!(a > 0.0 && a < b)) throw geometry_error("extremal rational requires 0 < a < b");

    ExtremalRational r;
    r.k = k;
    r.a = a;
    r.b = b;
    {
        double comp = a / b;
        double lam = std::sqrt((1.0 - comp) * (1.0 + comp));
        double n = std::sqrt(lam * lam + comp * comp);
        r.kappa = ModulusValue::from_pair(lam / n, comp / n);
    }
    const double K = complete_elliptic_K(r.kappa);

    r.c.resize(std::max(0, k - 1));
    for (int j = 1; j <= k - 1; ++j) {
        auto scd = detail::jacobi_sn_cn_dn(j * K / k, r.kappa);
        double ratio = scd.sn / scd.cn; // sc(jK/k); cn > 0 on (0,K)
        r.c[j - 1] = a * a * ratio * ratio;
    }

    auto eval = zolotarev_number(a, b, k);
    r.Zk = eval.Zk;
    r.log_Zk = eval.log_Zk;
    r.mobius_scale = (1.0 + r.Zk) / (1.0 - r.Zk);

    // M = 2/(min G + max G): centers M G(x) symmetrically around 1 on [a,b],
    // which is the equioscillation condition for sign(z) - rtilde(z).
    auto [log_gmin, log_gmax] = detail::log_G_extrema(r);
    // log(2) - log(e^gmin + e^gmax), summed stably from the larger term
    double lse = log_gmax + std::log1p(std::exp(log_gmin - log_gmax));
    r.log_M = std::log(2.0) - lse;
    r.M = std::exp(r.log_M);

    // zeros/poles: p_j = b dn((2j-1)K/(2k)), zeros = -p_j (elliptic order j = 1..k)
    r.poles.reserve(k);
    r.zeros.reserve(k);
    std::vector<double> p(k);
    for (int j = 1; j <= k; ++j) {
        auto scd = detail::jacobi_sn_cn_dn((2.0 * j - 1.0) * K / (2.0 * k), r.kappa);
        p[j - 1] = b * scd.dn;
    }
    std::sort(p.begin(), p.end());
    for (auto it = p.rbegin(); it != p.rend(); ++it) r.zeros.emplace_back(-*it, 0.0);
    for (double v : p) r.poles.emplace_back(v, 0.0);
    return r;
}

// Pointwise sign-function error sign(z) - rtilde(z) on the grid, which must
// lie inside [-b,-a] u [a,b].
inline std::vector<double> extremal_sign_error(double a, double b, int k,
                                               std::span<const double> grid) {
    ExtremalRational r = extremal_rational(a, b, k);
    std::vector<double> out;
    out.reserve(grid.size());
    const double slack = 4.0 * std::numeric_limits<double>::epsilon();
    for (double z : grid) {
        double az = std::abs(z);
        if (az < a * (1.0 - slack) || az > b * (1.0 + slack))
            throw domain_error("sign-error grid point outside [-b,-a] u [a,b]");
        out.push_back(r.sign_error(z));
    }
    return out;
}

// Alternation-cluster count for an error curve sampled on an ascending grid:
// a point belongs to a cluster if |e| >= (1-1e-6) max|e|; consecutive flagged
// points merge; clusters must alternate in sign.
struct AlternationCount {
    int clusters = 0;
    bool alternating = true;
};

inline AlternationCount count_alternation_clusters(std::span<const double> err) {
    double emax = 0.0;
    for (double e : err) emax = std::max(emax, std::abs(e));
    AlternationCount out;
    if (emax == 0.0) return out;
    const double thresh = (1.0 - 1e-6) * emax;
    int last_sign = 0;
    bool in_cluster = false;
    for (double e : err) {
        bool flagged = std::abs(e) >= thresh;
        if (!flagged) {
            in_cluster = false;
            continue;
        }
        int s = e > 0 ? 1 : -1;
        if (!in_cluster) {
            ++out.clusters;
            if (last_sign != 0 && s == last_sign) out.alternating = false;
            last_sign = s;
            in_cluster = true;
        } else if (s != last_sign) {
            // sign flip inside one contiguous run: split into a new cluster
            ++out.clusters;
            last_sign = s;
        }
    }
    return out;
}

// Local maxima of |f| on [lo,hi]: bracketed on a uniform grid and refined by
// golden section.  Returns the refined peaks (x, signed f(x)) in ascending x.
// This is the grid oracle used to measure equioscillation and sup/inf values
// independently of any product formula.
struct PeakPoint {
    double x = 0;
    double value = 0; // signed f(x) at the peak of |f|
};

template <class F>
std::vector<PeakPoint> refined_abs_peaks(F&& f, double lo, double hi, int grid_n) {
    std::vector<double> xs(grid_n), av(grid_n);
    for (int i = 0; i < grid_n; ++i) {
        xs[i] = lo + (hi - lo) * i / (grid_n - 1.0);
        av[i] = std::abs(f(xs[i]));
    }
    const double gr = 0.6180339887498949;
    std::vector<PeakPoint> peaks;
    for (int i = 0; i < grid_n; ++i) {
        bool lmax = (i == 0 || av[i] >= av[i - 1]) && (i == grid_n - 1 || av[i] >= av[i + 1]);
        if (!lmax) continue;
        double a = xs[std::max(0, i - 1)], b = xs[std::min(grid_n - 1, i + 1)];
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = std::abs(f(x1)), f2 = std::abs(f(x2));
        for (int it = 0; it < 80 && (b - a) > 1e-13 * (std::abs(a) + std::abs(b) + 1.0); ++it) {
            if (f1 > f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - gr * (b - a);
                f1 = std::abs(f(x1));
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + gr * (b - a);
                f2 = std::abs(f(x2));
            }
        }
        double xm = 0.5 * (a + b);
        peaks.push_back({xm, f(xm)});
    }
    return peaks;
}

// Global maximum of a scalar function on [lo,hi]: grid scan plus golden
// refinement of every grid-local maximum.  Use on log-magnitudes, where
// chasing |f| would instead find the dips at zeros and poles.
template <class F>
double refined_max(F&& f, double lo, double hi, int grid_n) {
    std::vector<double> xs(grid_n), fv(grid_n);
    for (int i = 0; i < grid_n; ++i) {
        xs[i] = lo + (hi - lo) * i / (grid_n - 1.0);
        fv[i] = f(xs[i]);
    }
    const double gr = 0.6180339887498949;
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_n; ++i) {
        bool lmax = (i == 0 || fv[i] >= fv[i - 1]) && (i == grid_n - 1 || fv[i] >= fv[i + 1]);
        if (!lmax) continue;
        double a = xs[std::max(0, i - 1)], b = xs[std::min(grid_n - 1, i + 1)];
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = f(x1), f2 = f(x2);
        for (int it = 0; it < 80 && (b - a) > 1e-13 * (std::abs(a) + std::abs(b) + 1.0); ++it) {
            if (f1 > f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - gr * (b - a);
                f1 = f(x1);
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + gr * (b - a);
                f2 = f(x2);
            }
        }
        best = std::max(best, f(0.5 * (a + b)));
    }
    return best;
}

// fADI shift parameters: the zeros and poles of R for the pair, transplanted
// for general geometry.  `pairs[j]` keeps the natural elliptic pairing
// (zero_j, pole_j) = (T^-1(-p_j), T^-1(p_j)).
struct AdiShiftPairs {
    std::vector<std::complex<double>> zeros; // E-side (left interval), sorted
    std::vector<std::complex<double>> poles; // F-side (right interval), sorted
    std::vector<std::pair<double, double>> pairs; // (zero, pole) in elliptic order
};

inline AdiShiftPairs adi_shifts(const IntervalPair& pair, int k) {
    if (k < 1) throw domain_error("adi_shifts requires k >= 1");
    AdiShiftPairs out;
    if (pair.kind == IntervalPair::Kind::symmetric) {
        ExtremalRational r = extremal_rational(pair.a, pair.b, k);
        out.zeros = r.zeros;
        out.poles = r.poles;
        for (int j = 0; j < k; ++j)
            out.pairs.emplace_back(-r.poles[j].real(), r.poles[j].real());
        return out;
    }
    ExtremalRational r = extremal_rational(1.0, pair.alpha, k);
    Mobius Tinv = pair.transplant().inverse();
    std::vector<double> zs, ps;
    zs.reserve(k);
    ps.reserve(k);
    for (int j = 0; j < k; ++j) {
        double pj = r.poles[j].real();
        double z = Tinv(-pj);
        double p = Tinv(pj);
        zs.push_back(z);
        ps.push_back(p);
        out.pairs.emplace_back(z, p);
    }
    std::sort(zs.begin(), zs.end());
    std::sort(ps.begin(), ps.end());
    for (double v : zs) out.zeros.emplace_back(v, 0.0);
    for (double v : ps) out.poles.emplace_back(v, 0.0);
    return out;
}

} // namespace zolo
