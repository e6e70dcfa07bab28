#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "zolo/bounds.hpp"
#include "zolo/csv.hpp"
#include "zolo/ensembles.hpp"
#include "zolo/extremal.hpp"
#include "zolo/parallel.hpp"
#include "zolo/spectra.hpp"
#include "zolo/structured.hpp"

// Reference experiment data as CSV: seeded singular-value ensembles against
// their bound staircases (1), the degree-8 sign-approximation error and the
// Zolotarev numbers with their upper bound (2), and the Krylov/Hankel decay
// ensembles (3).

namespace zolo {

inline constexpr double ln10 = 2.30258509299404568;

namespace detail {

struct SeriesData {
    std::string label;
    SpectrumReport report;
    BoundCurve curve;
};

inline void write_spectrum_series(const std::string& path, std::uint64_t seed,
                                  const std::string& variant, const std::string& key_name,
                                  const std::vector<SeriesData>& series) {
    CsvWriter csv(path, seed, variant);
    csv.header({key_name, "index", "sigma_over_sigma1", "bound", "trusted"});
    for (const auto& s : series) {
        double s1 = s.report.sigma1();
        for (int j = 1; j <= static_cast<int>(s.report.sigma.size()); ++j) {
            csv.row({s.label, csv_int(j), csv_num(s.report.sigma[j - 1] / s1),
                     csv_num(s.curve.value(j)), csv_int(j <= s.report.trusted_count ? 1 : 0)});
        }
    }
}

} // namespace detail

// Figure 1: 100x100 Pick ensembles (equispaced nodes, Gaussian data) for
// b/a in {1.1, 10, 100}, and Cauchy ensembles on the three standard
// geometries (Chebyshev nodes, Gaussian data), each against its bound.
inline std::vector<std::string> write_figure1(std::uint64_t seed, const std::string& outdir,
                                              BoundVariant variant = BoundVariant::MuTight) {
    const int n = 100;
    std::vector<std::string> files;

    {
        std::vector<double> ratios = {1.1, 10.0, 100.0};
        std::vector<detail::SeriesData> series(ratios.size());
        parallel_for(ratios.size(), [&](std::size_t i) {
            double ba = ratios[i];
            Rng rng(derive_seed(seed, 100 + i));
            auto spec = make_pick_instance(1.0, ba, n, rng);
            series[i].label = csv_num(ba);
            series[i].report = singular_values(generate(spec));
            series[i].curve = pick_bound(1.0, ba, n, variant);
        });
        std::string path = outdir + "/fig1_pick.csv";
        detail::write_spectrum_series(path, seed, to_string(variant), "b_over_a", series);
        files.push_back(path);
    }

    {
        auto geoms = cauchy_figure_geometries();
        std::vector<detail::SeriesData> series(geoms.size());
        parallel_for(geoms.size(), [&](std::size_t i) {
            const auto& g = geoms[i];
            Rng rng(derive_seed(seed, 200 + i));
            auto spec = make_cauchy_instance(g, n, rng);
            series[i].label = csv_num(IntervalPair::general(g.a, g.b, g.c, g.d).gamma);
            series[i].report = singular_values(generate(spec));
            series[i].curve = cauchy_bound(g.a, g.b, g.c, g.d, n, n, variant);
        });
        std::string path = outdir + "/fig1_cauchy.csv";
        detail::write_spectrum_series(path, seed, to_string(variant), "gamma", series);
        files.push_back(path);
    }
    return files;
}

// Figure 2, left: error of the best R_{8,8} approximation to sign on
// [-10,-1] u [1,10], sampled densely with the refined alternation peaks
// flagged.  Right: log10 Z_k against the log10 of the 4 rho^{-2k} upper
// bound for b/a in {1.1, 10, 100}, k = 0..20.
inline std::vector<std::string> write_figure2(std::uint64_t seed, const std::string& outdir) {
    std::vector<std::string> files;
    {
        const double a = 1.0, b = 10.0;
        const int k = 8;
        ExtremalRational r = extremal_rational(a, b, k);
        auto err = [&](double x) { return r.sign_error(x); };

        std::string path = outdir + "/fig2_sign_error.csv";
        CsvWriter csv(path, seed, "n/a");
        csv.header({"x", "sign_error", "is_alternation_point"});
        for (double side : {-1.0, 1.0}) {
            double lo = side < 0 ? -b : a;
            double hi = side < 0 ? -a : b;
            auto peaks = refined_abs_peaks(err, lo, hi, 4001);
            double emax = 0.0;
            for (auto& p : peaks) emax = std::max(emax, std::abs(p.value));
            std::vector<std::pair<double, bool>> pts;
            const int N = 2001;
            for (int i = 0; i < N; ++i) pts.emplace_back(lo + (hi - lo) * i / (N - 1.0), false);
            for (auto& p : peaks)
                if (std::abs(p.value) >= (1.0 - 1e-6) * emax) pts.emplace_back(p.x, true);
            std::sort(pts.begin(), pts.end());
            for (auto& [x, flag] : pts)
                csv.row({csv_num(x), csv_num(err(x)), csv_int(flag ? 1 : 0)});
        }
        files.push_back(path);
    }
    {
        std::string path = outdir + "/fig2_zolotarev.csv";
        CsvWriter csv(path, seed, "n/a");
        csv.header({"b_over_a", "k", "log10_Zk", "log10_upper_bound"});
        for (double ba : {1.1, 10.0, 100.0}) {
            for (int k = 0; k <= 20; ++k) {
                auto ev = zolotarev_number(1.0, ba, k);
                double log10_up = (std::log(4.0) - 2.0 * k * ev.log_rho) / ln10;
                csv.row({csv_num(ba), csv_int(k), csv_num(ev.log_Zk / ln10), csv_num(log10_up)});
            }
        }
        files.push_back(path);
    }
    return files;
}

// Figure 3: Krylov ensembles (equispaced Hermitian spectrum on [-1,1],
// Gaussian vector) against the mu-form bound, and Hankel matrices of the
// uniform measure on [-1,1] against the squared log-form bound, n in
// {10, 100, 1000}.
inline std::vector<std::string> write_figure3(std::uint64_t seed, const std::string& outdir) {
    std::vector<std::string> files;
    const std::vector<int> sizes = {10, 100, 1000};
    {
        std::vector<detail::SeriesData> series(sizes.size());
        parallel_for(sizes.size(), [&](std::size_t i) {
            int n = sizes[i];
            Rng rng(derive_seed(seed, 300 + i));
            auto spec = make_krylov_instance(n, rng);
            series[i].label = csv_int(n);
            series[i].report = singular_values(generate(spec));
            series[i].curve = krylov_bound(n, BoundVariant::MuTight);
        });
        std::string path = outdir + "/fig3_krylov.csv";
        detail::write_spectrum_series(path, seed, "mu-tight", "n", series);
        files.push_back(path);
    }
    {
        std::vector<detail::SeriesData> series(sizes.size());
        parallel_for(sizes.size(), [&](std::size_t i) {
            int n = sizes[i];
            auto H = hankel_from_measure(MeasureSpec::uniform(-1.0, 1.0), n);
            series[i].label = csv_int(n);
            series[i].report = singular_values(H);
            series[i].curve = hankel_bound(n, BoundVariant::LogWeak);
        });
        std::string path = outdir + "/fig3_hankel.csv";
        detail::write_spectrum_series(path, seed, "log-weak", "n", series);
        files.push_back(path);
    }
    return files;
}

inline std::vector<std::string> write_figure(int id, std::uint64_t seed,
                                             const std::string& outdir,
                                             BoundVariant variant = BoundVariant::MuTight) {
    switch (id) {
        case 1: return write_figure1(seed, outdir, variant);
        case 2: return write_figure2(seed, outdir);
        case 3: return write_figure3(seed, outdir);
        default: throw domain_error("figure id must be 1, 2, or 3");
    }
}

} // namespace zolo
