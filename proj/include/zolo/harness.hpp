#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "zolo/bounds.hpp"
#include "zolo/csv.hpp"
#include "zolo/ensembles.hpp"
#include "zolo/parallel.hpp"
#include "zolo/spectra.hpp"
#include "zolo/structured.hpp"

// Seeded verification sweeps: for each class, build random instances, compute
// the spectrum, and check the decay curve, the exact ratio certificates, the
// eps-rank bound, and (Hankel) the Fiedler identity and semidefiniteness.

namespace zolo {

struct SweepOptions {
    std::uint64_t seed = 42;
    int instances = 20;
    BoundVariant variant = BoundVariant::MuTight;
    double trust_rel = default_trust_rel();
    bool quick = false; // cap sizes at 100 for fast unit runs
};

struct SweepInstance {
    std::string description;
    int n = 0, m = 0;
    int checked = 0, violations = 0;
    int ratio_checked = 0, ratio_violations = 0;
    int eps_checked = 0, eps_violations = 0;
    double worst_margin = 0; // min log(bound) - log(ratio) over trusted indices
    bool fiedler_ok = true;
    double fiedler_max_dev = 0; // max |sigma_j(H) - sigma_j(K)^2| / sigma_1(H)
    bool psd_ok = true;
    bool pass = true;
};

struct SweepResult {
    MatrixClass cls = MatrixClass::Pick;
    std::vector<SweepInstance> instances;
    bool pass = true;
    int total_checked = 0, total_violations = 0;
    int total_ratio_checked = 0, total_ratio_violations = 0;
    int total_eps_checked = 0, total_eps_violations = 0;

    void finalize() {
        pass = true;
        for (const auto& r : instances) {
            total_checked += r.checked;
            total_violations += r.violations;
            total_ratio_checked += r.ratio_checked;
            total_ratio_violations += r.ratio_violations;
            total_eps_checked += r.eps_checked;
            total_eps_violations += r.eps_violations;
            pass = pass && r.pass;
        }
    }
};

namespace detail {

inline void check_eps_ranks(const SpectrumReport& rep, MatrixClass cls,
                            const EpsRankParams& params, SweepInstance& out) {
    for (double eps : {1e-4, 1e-8, 1e-12}) {
        EpsRankResult r = eps_rank(rep, eps);
        if (!r.trusted) continue; // below the floor the computed rank is a lower bound
        ++out.eps_checked;
        if (r.rank > eps_rank_bound(cls, params, eps)) ++out.eps_violations;
    }
}

inline void apply_record(const VerificationRecord& rec, SweepInstance& out) {
    out.checked = rec.checked;
    out.violations = rec.violations;
    out.ratio_checked = rec.ratio_checked;
    out.ratio_violations = rec.ratio_violations;
    out.worst_margin = rec.worst_margin;
}

} // namespace detail

inline SweepResult run_class_sweep(MatrixClass cls, const SweepOptions& opt) {
    SweepResult result;
    result.cls = cls;
    result.instances.resize(opt.instances);

    auto geoms = cauchy_figure_geometries();
    const std::vector<double> pick_ratios = {1.1, 10.0, 100.0};
    std::vector<int> sizes = {10, 100, 1000};
    if (opt.quick) sizes = {10, 40, 100};

    parallel_for(opt.instances, [&](std::size_t idx) {
        Rng rng(derive_seed(opt.seed, idx));
        SweepInstance& out = result.instances[idx];
        switch (cls) {
            case MatrixClass::Pick: {
                double ba = pick_ratios[idx % pick_ratios.size()];
                int n = opt.quick ? 60 : 100;
                auto spec = make_pick_instance(1.0, ba, n, rng);
                out.description = "pick b/a=" + csv_num(ba);
                out.n = out.m = n;
                SpectrumReport rep = singular_values(generate(spec), opt.trust_rel);
                detail::apply_record(verify_bound(rep, pick_bound(1.0, ba, n, opt.variant)), out);
                detail::check_eps_ranks(rep, cls, {1.0, ba, 0.0, n}, out);
                break;
            }
            case MatrixClass::Cauchy: {
                const auto& g = geoms[idx % geoms.size()];
                int n = opt.quick ? 60 : 100;
                auto spec = make_cauchy_instance(g, n, rng);
                double gamma = IntervalPair::general(g.a, g.b, g.c, g.d).gamma;
                out.description = "cauchy gamma=" + csv_num(gamma);
                out.n = out.m = n;
                SpectrumReport rep = singular_values(generate(spec), opt.trust_rel);
                detail::apply_record(
                    verify_bound(rep, cauchy_bound(g.a, g.b, g.c, g.d, n, n, opt.variant)), out);
                detail::check_eps_ranks(rep, cls, {0.0, 0.0, gamma, n}, out);
                break;
            }
            case MatrixClass::Loewner: {
                const auto& g = geoms[idx % geoms.size()];
                int n = opt.quick ? 60 : 100;
                auto spec = make_loewner_instance(g, n, rng);
                double gamma = IntervalPair::general(g.a, g.b, g.c, g.d).gamma;
                out.description = "loewner gamma=" + csv_num(gamma);
                out.n = out.m = n;
                SpectrumReport rep = singular_values(generate(spec), opt.trust_rel);
                detail::apply_record(
                    verify_bound(rep, loewner_bound(g.a, g.b, g.c, g.d, n, opt.variant)), out);
                detail::check_eps_ranks(rep, cls, {0.0, 0.0, gamma, n}, out);
                break;
            }
            case MatrixClass::KrylovHermitian: {
                int n = sizes[idx % sizes.size()];
                auto spec = make_krylov_instance(n, rng);
                out.description = "krylov n=" + csv_int(n);
                out.n = out.m = n;
                SpectrumReport rep = singular_values(generate(spec), opt.trust_rel);
                detail::apply_record(verify_bound(rep, krylov_bound(n, opt.variant)), out);
                detail::check_eps_ranks(rep, cls, {0.0, 0.0, 0.0, n}, out);
                break;
            }
            case MatrixClass::VandermondeReal: {
                int n = sizes[idx % sizes.size()];
                auto spec = make_vandermonde_instance(n, rng);
                out.description = "vandermonde n=" + csv_int(n);
                out.n = out.m = n;
                SpectrumReport rep = singular_values(generate(spec), opt.trust_rel);
                detail::apply_record(verify_bound(rep, vandermonde_bound(n, opt.variant)), out);
                detail::check_eps_ranks(rep, cls, {0.0, 0.0, 0.0, n}, out);
                break;
            }
            case MatrixClass::HankelPSD: {
                int n = sizes[idx % sizes.size()];
                MeasureSpec measure = MeasureSpec::uniform(-1.0, 1.0);
                std::string tag = "uniform(-1,1)";
                if (idx >= sizes.size()) {
                    if (idx % 2 == 0) {
                        // random discrete measure supported on n points
                        auto nodes = uniform_random_sorted(rng, -1.0, 1.0, n);
                        std::vector<double> weights(n);
                        for (auto& w : weights) w = 0.05 + rng.uniform01();
                        measure = MeasureSpec::discrete(nodes, weights);
                        tag = "discrete";
                    } else {
                        // random subinterval of [-1,1]; support outside the unit
                        // interval would blow the high moments up exponentially
                        double lo = rng.uniform(-1.0, 0.3);
                        double hi = lo + 0.2 + rng.uniform(0.0, 1.0 - lo - 0.2);
                        measure = MeasureSpec::uniform(lo, hi);
                        tag = "uniform(" + csv_num(lo) + "," + csv_num(hi) + ")";
                    }
                }
                out.description = "hankel " + tag + " n=" + csv_int(n);
                out.n = out.m = n;
                DenseMatrix H = hankel_from_measure(measure, n);
                SpectrumReport rep = singular_values(H, opt.trust_rel);
                detail::apply_record(verify_bound(rep, hankel_bound(n, opt.variant)), out);
                detail::check_eps_ranks(rep, cls, {0.0, 0.0, 0.0, n}, out);
                out.psd_ok = is_psd_within(H, 1e-12 * rep.sigma1());
                // Fiedler identity through the Gauss-quadrature Krylov factor
                DenseMatrix K = fiedler_factor(measure, n);
                SpectrumReport rk = singular_values(K, opt.trust_rel);
                for (int j = 0; j < rep.trusted_count; ++j) {
                    double dev = std::abs(rep.sigma[j] - rk.sigma[j] * rk.sigma[j]) / rep.sigma1();
                    out.fiedler_max_dev = std::max(out.fiedler_max_dev, dev);
                }
                out.fiedler_ok = out.fiedler_max_dev <= 1e-10;
                break;
            }
        }
        out.pass = out.violations == 0 && out.ratio_violations == 0 &&
                   out.eps_violations == 0 && out.fiedler_ok && out.psd_ok;
    });
    result.finalize();
    return result;
}

// Condition-number floors on instances small enough for sigma_n to be trusted,
// plus the standard n = 100 ensembles (skipped and counted when sigma_n falls
// below the trust threshold).
struct ConditionFloorResult {
    int checked = 0, violations = 0, skipped = 0;
    bool pass() const { return violations == 0; }
};

inline ConditionFloorResult run_condition_floor_suite(std::uint64_t seed) {
    ConditionFloorResult res;
    auto check = [&](const SpectrumReport& rep, double log_bound) {
        int n = static_cast<int>(rep.sigma.size());
        if (rep.trusted_count < n) {
            ++res.skipped;
            return;
        }
        double log_kappa = std::log(rep.sigma1()) - std::log(rep.sigma[n - 1]);
        ++res.checked;
        if (log_kappa < log_bound - 1e-10) ++res.violations;
    };

    int item = 0;
    for (int n : {4, 6, 8, 12, 100}) {
        for (double ba : {10.0, 100.0}) {
            Rng rng(derive_seed(seed, 7000 + item++));
            auto spec = make_pick_instance(1.0, ba, n, rng);
            check(singular_values(generate(spec)), log_condition_lower_bound_pick(1.0, ba, n));
        }
    }
    auto geoms = cauchy_figure_geometries();
    for (int n : {4, 6, 8, 100}) {
        for (const auto& g : geoms) {
            Rng rng(derive_seed(seed, 7100 + item++));
            auto spec = make_cauchy_instance(g, n, rng);
            double gamma = IntervalPair::general(g.a, g.b, g.c, g.d).gamma;
            check(singular_values(generate(spec)), log_condition_lower_bound_cauchy(gamma, n));
        }
    }
    for (int n : {3, 4, 6, 8, 10, 50}) {
        // Hilbert matrix: the canonical ill-conditioned positive definite Hankel
        auto H = hankel_from_measure(MeasureSpec::uniform(0.0, 1.0), n);
        check(singular_values(H), log_condition_lower_bound_hankel(n));
    }
    return res;
}

} // namespace zolo
