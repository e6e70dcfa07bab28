#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "zolo/elliptic.hpp"
#include "zolo/errors.hpp"
#include "zolo/matrix.hpp"
#include "zolo/measure.hpp"
#include "zolo/quadrature.hpp"
#include "zolo/rng.hpp"

// Generators for the six structured matrix classes, their displacement data,
// and the Fiedler factorization of positive semidefinite Hankel matrices.

namespace zolo {

enum class MatrixClass {
    Pick,
    Cauchy,
    Loewner,
    KrylovHermitian,
    VandermondeReal,
    HankelPSD,
};

inline const char* to_string(MatrixClass c) {
    switch (c) {
        case MatrixClass::Pick: return "pick";
        case MatrixClass::Cauchy: return "cauchy";
        case MatrixClass::Loewner: return "loewner";
        case MatrixClass::KrylovHermitian: return "krylov";
        case MatrixClass::VandermondeReal: return "vandermonde";
        case MatrixClass::HankelPSD: return "hankel";
    }
    return "?";
}

// Displacement rank nu of the class's canonical Sylvester equation.
inline int displacement_rank(MatrixClass c) {
    switch (c) {
        case MatrixClass::Pick: return 2;
        case MatrixClass::Cauchy: return 1;
        case MatrixClass::Loewner: return 2;
        case MatrixClass::KrylovHermitian: return 1;
        case MatrixClass::VandermondeReal: return 1;
        case MatrixClass::HankelPSD: return 2;
    }
    return 0;
}

// Tagged description of one structured matrix instance.  Only the fields the
// class needs are inspected:
//   Pick:        x (in [interval_a, interval_b], 0 < a < b), s
//   Cauchy:      x, y (disjoint), s, t; intervals for bound evaluation
//   Loewner:     x, y (disjoint), r, s
//   Krylov:      x (diagonal Hermitian argument, length m), w, cols n
//   Vandermonde: x (length m), cols n   (Krylov with w = ones)
//   Hankel:      measure, dimension n
// Data vectors are real; complex data is out of scope.
struct StructuredMatrixSpec {
    MatrixClass cls = MatrixClass::Cauchy;
    int rows = 0, cols = 0;
    std::vector<double> x, y;
    std::vector<double> s, t, r, w;
    MeasureSpec measure;
    // intervals containing the node sets, used by bound evaluation
    double interval_a = 0, interval_b = 0; // x side
    double interval_c = 0, interval_d = 0; // y side

    static StructuredMatrixSpec pick(std::vector<double> x, std::vector<double> s,
                                     double a, double b) {
        StructuredMatrixSpec sp;
        sp.cls = MatrixClass::Pick;
        sp.rows = sp.cols = static_cast<int>(x.size());
        sp.x = std::move(x);
        sp.s = std::move(s);
        sp.interval_a = a;
        sp.interval_b = b;
        return sp;
    }

    static StructuredMatrixSpec cauchy(std::vector<double> x, std::vector<double> y,
                                       std::vector<double> s, std::vector<double> t,
                                       double a, double b, double c, double d) {
        StructuredMatrixSpec sp;
        sp.cls = MatrixClass::Cauchy;
        sp.rows = static_cast<int>(x.size());
        sp.cols = static_cast<int>(y.size());
        sp.x = std::move(x);
        sp.y = std::move(y);
        sp.s = std::move(s);
        sp.t = std::move(t);
        sp.interval_a = a;
        sp.interval_b = b;
        sp.interval_c = c;
        sp.interval_d = d;
        return sp;
    }

    static StructuredMatrixSpec loewner(std::vector<double> x, std::vector<double> y,
                                        std::vector<double> r, std::vector<double> s,
                                        double a, double b, double c, double d) {
        StructuredMatrixSpec sp;
        sp.cls = MatrixClass::Loewner;
        sp.rows = static_cast<int>(x.size());
        sp.cols = static_cast<int>(y.size());
        sp.x = std::move(x);
        sp.y = std::move(y);
        sp.r = std::move(r);
        sp.s = std::move(s);
        sp.interval_a = a;
        sp.interval_b = b;
        sp.interval_c = c;
        sp.interval_d = d;
        return sp;
    }

    static StructuredMatrixSpec krylov(std::vector<double> spectrum, std::vector<double> w,
                                       int n) {
        StructuredMatrixSpec sp;
        sp.cls = MatrixClass::KrylovHermitian;
        sp.rows = static_cast<int>(spectrum.size());
        sp.cols = n;
        sp.x = std::move(spectrum);
        sp.w = std::move(w);
        return sp;
    }

    static StructuredMatrixSpec vandermonde(std::vector<double> x, int n) {
        StructuredMatrixSpec sp;
        sp.cls = MatrixClass::VandermondeReal;
        sp.rows = static_cast<int>(x.size());
        sp.cols = n;
        sp.x = std::move(x);
        return sp;
    }

    static StructuredMatrixSpec hankel(MeasureSpec measure, int n) {
        StructuredMatrixSpec sp;
        sp.cls = MatrixClass::HankelPSD;
        sp.rows = sp.cols = n;
        sp.measure = std::move(measure);
        return sp;
    }
};

namespace detail {

inline void require_strictly_increasing(const std::vector<double>& v, const char* what) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1]))
            throw data_error(std::string(what) + " nodes must be strictly increasing");
}

} // namespace detail

// Positive semidefinite Hankel matrix of moments of the measure:
// (H)_{jk} = int x^{j+k-2} dmu.
inline DenseMatrix hankel_from_measure(const MeasureSpec& measure, int n) {
    if (n < 1) throw measure_error("hankel_from_measure requires n >= 1");
    std::vector<double> h(2 * n - 1);
    if (measure.kind == MeasureSpec::Kind::moments &&
        static_cast<int>(measure.h.size()) < 2 * n - 1)
        throw measure_error("moment vector too short for requested Hankel size");
    for (int m = 0; m < 2 * n - 1; ++m) h[m] = measure.moment(m);
    DenseMatrix H(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) H(i, j) = h[i + j];
    return H;
}

// Krylov factor K of the Fiedler factorization H = K^T K: Gauss nodes x_s and
// weights w_s^2 of the measure give K = [w | D_x w | ... | D_x^{n-1} w] with
// w_s = sqrt(w_s^2), so sigma_j(H) = sigma_j(K)^2.
inline DenseMatrix fiedler_factor(const MeasureSpec& measure, int n) {
    GaussRule rule = gauss_quadrature(measure, n);
    DenseMatrix K(n, n);
    for (int s = 0; s < n; ++s) {
        double w = std::sqrt(rule.weights[s]);
        double p = 1.0;
        for (int j = 0; j < n; ++j) {
            K(s, j) = w * p;
            p *= rule.nodes[s];
        }
    }
    return K;
}

inline DenseMatrix generate(const StructuredMatrixSpec& spec) {
    switch (spec.cls) {
        case MatrixClass::Pick: {
            const auto& x = spec.x;
            const auto& s = spec.s;
            if (x.size() != s.size() || x.empty())
                throw data_error("pick: node/data size mismatch");
            detail::require_strictly_increasing(x, "pick");
            if (!(x.front() > 0.0)) throw geometry_error("pick nodes must be positive");
            int n = static_cast<int>(x.size());
            DenseMatrix P(n, n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) P(i, j) = (s[i] + s[j]) / (x[i] + x[j]);
            return P;
        }
        case MatrixClass::Cauchy: {
            const auto& x = spec.x;
            const auto& y = spec.y;
            if (x.size() != spec.s.size() || y.size() != spec.t.size())
                throw data_error("cauchy: node/data size mismatch");
            if (x.size() < y.size())
                throw data_error("cauchy requires rows >= cols");
            detail::require_strictly_increasing(x, "cauchy x");
            detail::require_strictly_increasing(y, "cauchy y");
            int m = static_cast<int>(x.size()), n = static_cast<int>(y.size());
            DenseMatrix C(m, n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < m; ++i) {
                    double den = x[i] - y[j];
                    if (den == 0.0)
                        throw data_error("cauchy: coincident nodes x_j = y_k");
                    C(i, j) = spec.s[i] * spec.t[j] / den;
                }
            return C;
        }
        case MatrixClass::Loewner: {
            const auto& x = spec.x;
            const auto& y = spec.y;
            if (x.size() != spec.r.size() || y.size() != spec.s.size() || x.size() != y.size())
                throw data_error("loewner: node/data size mismatch");
            detail::require_strictly_increasing(x, "loewner x");
            detail::require_strictly_increasing(y, "loewner y");
            int n = static_cast<int>(x.size());
            DenseMatrix L(n, n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) {
                    double den = x[i] - y[j];
                    if (den == 0.0)
                        throw data_error("loewner: coincident nodes x_j = y_k");
                    L(i, j) = (spec.r[i] - spec.s[j]) / den;
                }
            return L;
        }
        case MatrixClass::KrylovHermitian: {
            const auto& x = spec.x;
            const auto& w = spec.w;
            if (x.size() != w.size() || x.empty())
                throw data_error("krylov: spectrum/vector size mismatch");
            int m = static_cast<int>(x.size()), n = spec.cols;
            if (m < n) throw data_error("krylov requires rows >= cols");
            DenseMatrix K(m, n);
            for (int i = 0; i < m; ++i) {
                double p = w[i];
                for (int j = 0; j < n; ++j) {
                    K(i, j) = p;
                    p *= x[i];
                }
            }
            return K;
        }
        case MatrixClass::VandermondeReal: {
            const auto& x = spec.x;
            int m = static_cast<int>(x.size()), n = spec.cols;
            if (m < n) throw data_error("vandermonde requires rows >= cols");
            detail::require_strictly_increasing(x, "vandermonde");
            DenseMatrix V(m, n);
            for (int i = 0; i < m; ++i) {
                double p = 1.0;
                for (int j = 0; j < n; ++j) {
                    V(i, j) = p;
                    p *= x[i];
                }
            }
            return V;
        }
        case MatrixClass::HankelPSD:
            return hankel_from_measure(spec.measure, spec.cols);
    }
    throw data_error("unknown matrix class");
}

// The shift matrix Q of the Krylov displacement equation: Q e_j = e_{j+1},
// Q e_n = -e_1.
inline DenseMatrix krylov_shift_Q(int n) {
    DenseMatrix Q(n, n);
    for (int j = 0; j + 1 < n; ++j) Q(j + 1, j) = 1.0;
    Q(0, n - 1) = -1.0;
    return Q;
}

// A X - X B for the class's canonical displacement coefficients.
inline DenseMatrix displacement(const StructuredMatrixSpec& spec, const DenseMatrix& X) {
    const int m = X.rows(), n = X.cols();
    if (m != spec.rows || n != spec.cols)
        throw data_error("displacement: matrix does not match spec dimensions");
    DenseMatrix D(m, n);
    switch (spec.cls) {
        case MatrixClass::Pick: // D_x X - X (-D_x)
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < m; ++i)
                    D(i, j) = spec.x[i] * X(i, j) + X(i, j) * spec.x[j];
            return D;
        case MatrixClass::Cauchy:
        case MatrixClass::Loewner: // D_x X - X D_y
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < m; ++i)
                    D(i, j) = spec.x[i] * X(i, j) - X(i, j) * spec.y[j];
            return D;
        case MatrixClass::KrylovHermitian:
        case MatrixClass::VandermondeReal: { // D_x X - X Q
            DenseMatrix XQ = matmul_nn(X, krylov_shift_Q(n));
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < m; ++i) D(i, j) = spec.x[i] * X(i, j) - XQ(i, j);
            return D;
        }
        case MatrixClass::HankelPSD: { // Q X - X Q^T
            DenseMatrix Q = krylov_shift_Q(n);
            DenseMatrix QX = matmul_nn(Q, X);
            DenseMatrix Qt(n, n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) Qt(i, j) = Q(j, i);
            DenseMatrix XQt = matmul_nn(X, Qt);
            return QX - XQt;
        }
    }
    throw data_error("unknown matrix class");
}

// --- node and data ensembles -------------------------------------------------

inline std::vector<double> equispaced_nodes(double a, double b, int n) {
    std::vector<double> x(n);
    if (n == 1) {
        x[0] = 0.5 * (a + b);
        return x;
    }
    for (int i = 0; i < n; ++i) x[i] = a + (b - a) * i / (n - 1.0);
    return x;
}

// Chebyshev points of the second kind mapped to [a,b], ascending.
inline std::vector<double> chebyshev_nodes(double a, double b, int n) {
    std::vector<double> x(n);
    if (n == 1) {
        x[0] = 0.5 * (a + b);
        return x;
    }
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) x[i] = mid - half * std::cos(pi_const * i / (n - 1.0));
    x[0] = a;
    x[n - 1] = b;
    return x;
}

inline std::vector<double> uniform_random_sorted(Rng& rng, double a, double b, int n) {
    std::vector<double> x(n);
    for (auto& v : x) v = rng.uniform(a, b);
    std::sort(x.begin(), x.end());
    for (int i = 1; i < n; ++i)
        if (x[i] <= x[i - 1]) x[i] = std::nextafter(x[i - 1], b);
    return x;
}

inline std::vector<double> gaussian_vector(Rng& rng, int n) {
    std::vector<double> v(n);
    for (auto& e : v) e = rng.normal();
    return v;
}

} // namespace zolo
