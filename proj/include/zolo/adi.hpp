#pragma once

#include <cmath>
#include <vector>

#include "zolo/errors.hpp"
#include "zolo/extremal.hpp"
#include "zolo/matrix.hpp"
#include "zolo/spectra.hpp"
#include "zolo/structured.hpp"
#include "zolo/zolotarev.hpp"

// Factored ADI with Zolotarev shifts: the constructive route to the singular
// value bounds.  For A X - X B = M N^T with diagonal A, B and shift pairs
// (alpha_j, beta_j), each double-step adds the rank-nu increment
//
//   X_j - X_{j-1} = (beta_j - alpha_j) (A - beta_j I)^{-1} M_{j-1} N_{j-1}^T (B - alpha_j I)^{-1},
//   M_j = M_{j-1} + (beta_j - alpha_j) (A - beta_j I)^{-1} M_{j-1},
//   N_j = N_{j-1} - (beta_j - alpha_j) (B - alpha_j I)^{-1} N_{j-1},
//
// and after k steps X - X_k = r(A) X r(B)^{-1} with r(z) = prod (z-alpha_j)/(z-beta_j).
// Placing the alpha_j on sigma(A)'s interval and the beta_j on sigma(B)'s
// (zeros and poles of the extremal rational) gives ||X - X_k||_2 <= Z_k ||X||_2.

namespace zolo {

struct LowRankFactors {
    DenseMatrix U; // m x (nu k)
    DenseMatrix V; // n x (nu k)
    int k = 0;
    int nu = 0;
    double certified_bound = 0;     // Z_k(E,F); 0 with underflow flag
    double log_certified_bound = 0;
    bool underflow = false;
};

namespace detail {

struct AdiSetup {
    std::vector<double> adiag, bdiag;      // diagonal coefficients
    std::vector<std::vector<double>> Mcol; // m x nu
    std::vector<std::vector<double>> Ncol; // n x nu
    std::vector<std::pair<double, double>> shifts; // (alpha_j, beta_j)
    ZolotarevEvaluation zk;
};

inline AdiSetup adi_setup(const StructuredMatrixSpec& spec, int k) {
    AdiSetup su;
    const int m = spec.rows, n = spec.cols;
    switch (spec.cls) {
        case MatrixClass::Pick: {
            double a = spec.interval_a, b = spec.interval_b;
            if (!(a > 0.0 && a < b))
                throw geometry_error("pick fADI requires interval 0 < a < b");
            for (double xv : spec.x)
                if (xv < a || xv > b)
                    throw geometry_error("pick fADI: node outside declared interval");
            IntervalPair pair = IntervalPair::symmetric(a, b);
            AdiShiftPairs sp = adi_shifts(pair, k);
            su.zk = zolotarev_number(pair, k);
            su.adiag = spec.x;
            su.bdiag.resize(n);
            for (int i = 0; i < n; ++i) su.bdiag[i] = -spec.x[i];
            // sigma(A) lives on [a,b] where R has its poles: r = 1/R, so the
            // A-side shifts are the poles and the B-side shifts the zeros.
            for (auto& pr : sp.pairs) su.shifts.emplace_back(pr.second, pr.first);
            // M N^T = s e^T + e s^T
            su.Mcol = {spec.s, std::vector<double>(m, 1.0)};
            su.Ncol = {std::vector<double>(n, 1.0), spec.s};
            return su;
        }
        case MatrixClass::Cauchy:
        case MatrixClass::Loewner: {
            IntervalPair pair = IntervalPair::general(spec.interval_a, spec.interval_b,
                                                      spec.interval_c, spec.interval_d);
            AdiShiftPairs sp = adi_shifts(pair, k);
            su.zk = zolotarev_number_general(pair, k);
            su.adiag = spec.x;
            su.bdiag = spec.y;
            // zeros sit in the left interval; alpha-shifts belong with sigma(A)
            bool x_is_left = spec.interval_b < spec.interval_c;
            for (auto& pr : sp.pairs) {
                if (x_is_left)
                    su.shifts.emplace_back(pr.first, pr.second);
                else
                    su.shifts.emplace_back(pr.second, pr.first);
            }
            if (spec.cls == MatrixClass::Cauchy) {
                su.Mcol = {spec.s};
                std::vector<double> t = spec.t;
                su.Ncol = {t};
            } else {
                su.Mcol = {spec.r, std::vector<double>(m, 1.0)};
                std::vector<double> ns(n);
                for (int i = 0; i < n; ++i) ns[i] = -spec.s[i];
                su.Ncol = {std::vector<double>(n, 1.0), ns};
            }
            return su;
        }
        case MatrixClass::KrylovHermitian:
        case MatrixClass::VandermondeReal:
        case MatrixClass::HankelPSD:
            throw capability_error(
                "fADI covers Pick/Cauchy/Loewner (classes with real disjoint spectra); "
                "Krylov-type displacement has complex spectrum and is handled by bounds only");
    }
    throw capability_error("fADI: unknown class");
}

} // namespace detail

inline LowRankFactors fadi_approximate(const StructuredMatrixSpec& spec, int k) {
    if (k < 1) throw domain_error("fADI requires k >= 1");
    detail::AdiSetup su = detail::adi_setup(spec, k);
    const int m = spec.rows, n = spec.cols;
    const int nu = static_cast<int>(su.Mcol.size());

    LowRankFactors out;
    out.k = k;
    out.nu = nu;
    out.certified_bound = su.zk.Zk;
    out.log_certified_bound = su.zk.log_Zk;
    out.underflow = su.zk.underflow;
    out.U = DenseMatrix(m, nu * k);
    out.V = DenseMatrix(n, nu * k);

    std::vector<std::vector<double>> Mc = su.Mcol, Nc = su.Ncol;
    for (int j = 0; j < k; ++j) {
        auto [alpha, beta] = su.shifts[j];
        double scale = beta - alpha;
        for (int c = 0; c < nu; ++c) {
            double* ucol = out.U.col(j * nu + c);
            double* vcol = out.V.col(j * nu + c);
            for (int i = 0; i < m; ++i) ucol[i] = Mc[c][i] / (su.adiag[i] - beta);
            for (int i = 0; i < n; ++i) vcol[i] = Nc[c][i] / (su.bdiag[i] - alpha);
            for (int i = 0; i < m; ++i) Mc[c][i] += scale * ucol[i];
            for (int i = 0; i < n; ++i) Nc[c][i] -= scale * vcol[i];
            for (int i = 0; i < m; ++i) ucol[i] *= scale;
        }
    }
    return out;
}

inline DenseMatrix low_rank_product(const LowRankFactors& f) {
    DenseMatrix X(f.U.rows(), f.V.rows());
    for (int r = 0; r < f.U.cols(); ++r) {
        const double* u = f.U.col(r);
        const double* v = f.V.col(r);
        for (int j = 0; j < X.cols(); ++j) {
            double vj = v[j];
            double* xc = X.col(j);
            for (int i = 0; i < X.rows(); ++i) xc[i] += u[i] * vj;
        }
    }
    return X;
}

struct AdiComparison {
    int k = 0, nu = 0;
    double sigma1 = 0;
    double adi_error = 0;      // ||X - U V^T||_2
    double optimal_error = 0;  // sigma_{1 + nu k}(X)
    double ratio = 0;          // adi_error / optimal_error (>= 1)
    double certified_bound = 0;
    double log_certified_bound = 0;
};

inline AdiComparison compare_with_truncated_svd(const StructuredMatrixSpec& spec, int k) {
    DenseMatrix X = generate(spec);
    LowRankFactors f = fadi_approximate(spec, k);
    DenseMatrix D = X - low_rank_product(f);
    SpectrumReport rx = singular_values(X);
    AdiComparison cmp;
    cmp.k = k;
    cmp.nu = f.nu;
    cmp.sigma1 = rx.sigma1();
    cmp.adi_error = spectral_norm(D);
    int idx = f.nu * k; // sigma_{1 + nu k}, 0-based index nu k
    cmp.optimal_error = idx < static_cast<int>(rx.sigma.size()) ? rx.sigma[idx] : 0.0;
    cmp.ratio = cmp.optimal_error > 0 ? cmp.adi_error / cmp.optimal_error
                                      : std::numeric_limits<double>::infinity();
    cmp.certified_bound = f.certified_bound;
    cmp.log_certified_bound = f.log_certified_bound;
    return cmp;
}

} // namespace zolo
