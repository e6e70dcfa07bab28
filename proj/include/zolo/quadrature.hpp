#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "zolo/errors.hpp"
#include "zolo/measure.hpp"

namespace zolo {

namespace detail {

// Implicit-shift QL for a symmetric tridiagonal matrix, accumulating only the
// first row of the eigenvector matrix (all Golub-Welsch needs).  diag/offdiag
// are overwritten; returns eigenvalues in `diag` and first components in `z`.
inline void tridiag_eigen_first_row(std::vector<double>& diag,
                                    std::vector<double>& offdiag,
                                    std::vector<double>& z) {
    const int n = static_cast<int>(diag.size());
    z.assign(n, 0.0);
    if (n == 0) return;
    z[0] = 1.0;
    if (n == 1) return;
    std::vector<double> e(offdiag);
    e.resize(n, 0.0);

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw data_error("tridiagonal QL failed to converge");
                double g = (diag[l + 1] - diag[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = diag[m] - diag[l] + e[l] / (g + (g >= 0 ? r : -r));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i], bb = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        diag[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = (i >= l);
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = diag[i + 1] - p;
                    r = (diag[i] - g) * s + 2.0 * c * bb;
                    p = s * r;
                    diag[i + 1] = g + p;
                    g = c * r - bb;
                    double t = z[i + 1];
                    z[i + 1] = s * z[i] + c * t;
                    z[i] = c * z[i] - s * t;
                }
                if (underflow) continue;
                diag[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace detail

struct GaussRule {
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;  // w_s^2 >= 0, sum = total mass
};

namespace detail {

// Gauss rule from monic three-term recurrence coefficients
// (alpha_0..alpha_{n-1}, beta_1..beta_{n-1}) and total mass mu0.
inline GaussRule rule_from_recurrence(std::vector<double> alpha,
                                      const std::vector<double>& beta,
                                      double mu0) {
    const int n = static_cast<int>(alpha.size());
    std::vector<double> off(n > 1 ? n - 1 : 0);
    for (int i = 0; i + 1 < n; ++i) {
        if (!(beta[i] > 0.0)) throw measure_error("recurrence breakdown: beta <= 0");
        off[i] = std::sqrt(beta[i]);
    }
    std::vector<double> z;
    tridiag_eigen_first_row(alpha, off, z);
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return alpha[i] < alpha[j]; });
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = alpha[idx[i]];
        rule.weights[i] = mu0 * z[idx[i]] * z[idx[i]];
    }
    return rule;
}

// Lanczos tridiagonalization of diag(nodes) with starting vector sqrt(w),
// fully reorthogonalized: the textbook stable route from a discrete measure
// to its Jacobi matrix.
inline GaussRule rule_from_discrete(const std::vector<double>& nodes,
                                    const std::vector<double>& masses, int n) {
    const int N = static_cast<int>(nodes.size());
    int support = 0;
    for (double w : masses)
        if (w > 0.0) ++support;
    if (support < n)
        throw measure_error("discrete measure needs >= n support points for an n-point rule");

    double mu0 = 0.0;
    for (double w : masses) mu0 += w;

    std::vector<std::vector<double>> Q; // Lanczos vectors
    std::vector<double> alpha, beta;
    std::vector<double> q(N), qprev(N, 0.0);
    for (int i = 0; i < N; ++i) q[i] = std::sqrt(masses[i] / mu0);

    auto dot = [N](const std::vector<double>& x, const std::vector<double>& y) {
        double s = 0.0;
        for (int i = 0; i < N; ++i) s += x[i] * y[i];
        return s;
    };

    for (int j = 0; j < n; ++j) {
        Q.push_back(q);
        std::vector<double> v(N);
        for (int i = 0; i < N; ++i) v[i] = nodes[i] * q[i];
        double a = dot(v, q);
        alpha.push_back(a);
        if (j + 1 == n) break;
        for (int i = 0; i < N; ++i) v[i] -= a * q[i];
        if (j > 0)
            for (int i = 0; i < N; ++i) v[i] -= std::sqrt(beta[j - 1]) * qprev[i];
        // full reorthogonalization, twice
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& qi : Q) {
                double c = dot(v, qi);
                for (int i = 0; i < N; ++i) v[i] -= c * qi[i];
            }
        double nv = std::sqrt(dot(v, v));
        if (!(nv > 0.0)) throw measure_error("Lanczos breakdown: measure support too small");
        beta.push_back(nv * nv);
        qprev = q;
        for (int i = 0; i < N; ++i) q[i] = v[i] / nv;
    }
    return rule_from_recurrence(alpha, beta, mu0);
}

// Stieltjes on a raw moment vector, with polynomials carried in the monomial
// basis and Gram inner products from the Hankel moment matrix; every new
// polynomial is re-orthogonalized against all previous ones.  The map from
// moments to recurrence coefficients is exponentially ill-conditioned, hence
// the hard cap at n <= 30.
inline GaussRule rule_from_moments(const std::vector<double>& h, int n) {
    if (n > 30)
        throw measure_error("moment input limited to n <= 30 (moments -> recurrence is "
                            "exponentially ill-conditioned)");
    const int L = static_cast<int>(h.size());
    if (L < 2 * n - 1)
        throw measure_error("need at least 2n-1 moments for an n-point rule");

    // positive definiteness of the n x n Hankel form via Cholesky
    {
        std::vector<double> A(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A[i * n + j] = h[i + j];
        for (int c = 0; c < n; ++c) {
            double d = A[c * n + c];
            for (int k = 0; k < c; ++k) d -= A[c * n + k] * A[c * n + k];
            if (!(d > 0.0)) throw measure_error("moment vector fails positive-definiteness check");
            d = std::sqrt(d);
            A[c * n + c] = d;
            for (int r = c + 1; r < n; ++r) {
                double s = A[r * n + c];
                for (int k = 0; k < c; ++k) s -= A[r * n + k] * A[c * n + k];
                A[r * n + c] = s / d;
            }
        }
    }

    // <x^i, x^j> = h[i+j] while i+j < L
    auto inner = [&](const std::vector<double>& p, const std::vector<double>& q) {
        double s = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] == 0.0) continue;
            for (std::size_t j = 0; j < q.size(); ++j) {
                if (q[j] == 0.0) continue;
                std::size_t d = i + j;
                if (d >= static_cast<std::size_t>(L))
                    throw measure_error("moment vector too short for requested rule");
                s += p[i] * q[j] * h[d];
            }
        }
        return s;
    };
    auto shift_x = [](const std::vector<double>& p) {
        std::vector<double> q(p.size() + 1, 0.0);
        for (std::size_t i = 0; i < p.size(); ++i) q[i + 1] = p[i];
        return q;
    };

    std::vector<std::vector<double>> P; // orthogonal (monic-ish) polynomials
    std::vector<double> norms;          // <p_j, p_j>
    std::vector<double> alpha, beta;

    P.push_back({1.0});
    norms.push_back(h[0]);
    for (int j = 0; j < n; ++j) {
        // alpha_j = <x p_j, p_j>/<p_j,p_j>; the last one needs moment 2n-1
        // and is replaced by alpha_{n-2} when only 2n-1 moments were given
        // (any real completion yields a valid nonnegative measure matching
        // the supplied moments).
        double a;
        std::vector<double> xp = shift_x(P[j]);
        if (j == n - 1 && L < 2 * n) {
            a = j > 0 ? alpha[j - 1] : 0.0;
            alpha.push_back(a);
            break; // beta_{n-1} already known; nothing more needed
        }
        a = inner(xp, P[j]) / norms[j];
        alpha.push_back(a);
        if (j + 1 == n) break;
        std::vector<double> next = xp;
        for (std::size_t i = 0; i < P[j].size(); ++i) next[i] -= a * P[j][i];
        if (j > 0) {
            double bj = beta[j - 1];
            for (std::size_t i = 0; i < P[j - 1].size(); ++i) next[i] -= bj * P[j - 1][i];
        }
        // full reorthogonalization in the moment inner product
        for (int pass = 0; pass < 2; ++pass)
            for (int i = 0; i <= j; ++i) {
                double c = inner(next, P[i]) / norms[i];
                for (std::size_t t = 0; t < P[i].size(); ++t) next[t] -= c * P[i][t];
            }
        double nn = inner(next, next);
        if (!(nn > 0.0)) throw measure_error("moment vector fails positive-definiteness check");
        beta.push_back(nn / norms[j]);
        P.push_back(std::move(next));
        norms.push_back(nn);
    }
    return rule_from_recurrence(alpha, beta, h[0]);
}

} // namespace detail

// n-point Gauss rule of the measure: nodes x_s and nonnegative weights w_s^2
// with  sum w_s^2 x_s^m = int x^m dmu  for 0 <= m <= 2n-1.
inline GaussRule gauss_quadrature(const MeasureSpec& measure, int n) {
    if (n < 1) throw measure_error("gauss_quadrature requires n >= 1");
    switch (measure.kind) {
        case MeasureSpec::Kind::uniform_on: {
            // Legendre recurrence mapped onto (a,b): alpha = 0, beta_k = k^2/(4k^2-1)
            std::vector<double> alpha(n, 0.0), beta(n > 1 ? n - 1 : 0);
            for (int k = 1; k < n; ++k)
                beta[k - 1] = (static_cast<double>(k) * k) / (4.0 * k * k - 1.0);
            GaussRule t = detail::rule_from_recurrence(alpha, beta, 2.0);
            const double mid = 0.5 * (measure.a + measure.b);
            const double half = 0.5 * (measure.b - measure.a);
            for (auto& x : t.nodes) x = mid + half * x;
            for (auto& w : t.weights) w *= half;
            return t;
        }
        case MeasureSpec::Kind::discrete:
            return detail::rule_from_discrete(measure.nodes, measure.weights, n);
        case MeasureSpec::Kind::moments:
            return detail::rule_from_moments(measure.h, n);
    }
    throw measure_error("unknown measure kind");
}

} // namespace zolo
