// Command-line harness for the library: evaluate Zolotarev numbers and bound
// curves, generate structured matrices, compute verified spectra, run fADI,
// and reproduce the reference figure data as CSV.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zolo/adi.hpp"
#include "zolo/bounds.hpp"
#include "zolo/csv.hpp"
#include "zolo/ensembles.hpp"
#include "zolo/extremal.hpp"
#include "zolo/figures.hpp"
#include "zolo/harness.hpp"
#include "zolo/matrix.hpp"
#include "zolo/measure_json.hpp"
#include "zolo/spectra.hpp"
#include "zolo/structured.hpp"
#include "zolo/version.hpp"
#include "zolo/zolotarev.hpp"

namespace {

constexpr double kLn10 = 2.30258509299404568;

double trust_from_env() {
    if (const char* env = std::getenv("ZOLO_TRUST_THRESHOLD")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0.0 && v < 1.0) return v;
        throw zolo::data_error("ZOLO_TRUST_THRESHOLD must be a relative threshold in (0,1)");
    }
    return zolo::default_trust_rel();
}

zolo::MatrixClass parse_class(const std::string& s) {
    if (s == "pick") return zolo::MatrixClass::Pick;
    if (s == "cauchy") return zolo::MatrixClass::Cauchy;
    if (s == "loewner") return zolo::MatrixClass::Loewner;
    if (s == "krylov") return zolo::MatrixClass::KrylovHermitian;
    if (s == "vandermonde") return zolo::MatrixClass::VandermondeReal;
    if (s == "hankel") return zolo::MatrixClass::HankelPSD;
    throw zolo::data_error("unknown matrix class: " + s);
}

zolo::BoundVariant parse_variant(const std::string& s) {
    if (s == "mu-tight") return zolo::BoundVariant::MuTight;
    if (s == "log-weak") return zolo::BoundVariant::LogWeak;
    throw zolo::data_error("bound variant must be mu-tight or log-weak");
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void save_matrix(const zolo::DenseMatrix& A, const std::string& path) {
    if (ends_with(path, ".csv"))
        zolo::save_matrix_csv(A, path);
    else
        zolo::save_matrix_binary(A, path);
}

zolo::DenseMatrix load_matrix(const std::string& path) {
    if (ends_with(path, ".csv")) return zolo::load_matrix_csv(path);
    return zolo::load_matrix_binary(path);
}

struct GenerateArgs {
    std::string cls = "cauchy";
    int n = 100, m = 0;
    std::uint64_t seed = 42;
    std::string out;
    std::vector<double> interval{1.0, 10.0};
    std::vector<double> x_interval{-8.5, -2.0};
    std::vector<double> y_interval{3.0, 10.0};
    std::string nodes = "chebyshev";
    std::string measure_json;
    std::vector<double> uniform_measure;
};

std::vector<double> make_nodes(const std::string& kind, zolo::Rng& rng, double a, double b, int n) {
    if (kind == "chebyshev") return zolo::chebyshev_nodes(a, b, n);
    if (kind == "equispaced") return zolo::equispaced_nodes(a, b, n);
    if (kind == "random") return zolo::uniform_random_sorted(rng, a, b, n);
    throw zolo::data_error("node kind must be chebyshev, equispaced, or random");
}

zolo::StructuredMatrixSpec build_spec(const GenerateArgs& g) {
    zolo::Rng rng(g.seed);
    zolo::MatrixClass cls = parse_class(g.cls);
    int m = g.m > 0 ? g.m : g.n;
    switch (cls) {
        case zolo::MatrixClass::Pick: {
            double a = g.interval[0], b = g.interval[1];
            auto x = make_nodes(g.nodes, rng, a, b, g.n);
            auto s = zolo::gaussian_vector(rng, g.n);
            return zolo::StructuredMatrixSpec::pick(std::move(x), std::move(s), a, b);
        }
        case zolo::MatrixClass::Cauchy: {
            double a = g.x_interval[0], b = g.x_interval[1];
            double c = g.y_interval[0], d = g.y_interval[1];
            auto x = make_nodes(g.nodes, rng, a, b, m);
            auto y = make_nodes(g.nodes, rng, c, d, g.n);
            auto s = zolo::gaussian_vector(rng, m);
            auto t = zolo::gaussian_vector(rng, g.n);
            return zolo::StructuredMatrixSpec::cauchy(std::move(x), std::move(y), std::move(s),
                                                      std::move(t), a, b, c, d);
        }
        case zolo::MatrixClass::Loewner: {
            double a = g.x_interval[0], b = g.x_interval[1];
            double c = g.y_interval[0], d = g.y_interval[1];
            auto x = make_nodes(g.nodes, rng, a, b, g.n);
            auto y = make_nodes(g.nodes, rng, c, d, g.n);
            auto r = zolo::gaussian_vector(rng, g.n);
            auto t = zolo::gaussian_vector(rng, g.n);
            return zolo::StructuredMatrixSpec::loewner(std::move(x), std::move(y), std::move(r),
                                                       std::move(t), a, b, c, d);
        }
        case zolo::MatrixClass::KrylovHermitian: {
            double a = g.interval[0], b = g.interval[1];
            auto x = zolo::equispaced_nodes(a, b, m);
            auto w = zolo::gaussian_vector(rng, m);
            return zolo::StructuredMatrixSpec::krylov(std::move(x), std::move(w), g.n);
        }
        case zolo::MatrixClass::VandermondeReal: {
            double a = g.interval[0], b = g.interval[1];
            return zolo::StructuredMatrixSpec::vandermonde(
                zolo::uniform_random_sorted(rng, a, b, m), g.n);
        }
        case zolo::MatrixClass::HankelPSD: {
            zolo::MeasureSpec measure =
                !g.measure_json.empty()
                    ? zolo::load_measure_json(g.measure_json)
                    : (g.uniform_measure.size() == 2
                           ? zolo::MeasureSpec::uniform(g.uniform_measure[0], g.uniform_measure[1])
                           : zolo::MeasureSpec::uniform(-1.0, 1.0));
            return zolo::StructuredMatrixSpec::hankel(measure, g.n);
        }
    }
    throw zolo::data_error("unreachable");
}

void print_zolotarev_row(const zolo::ZolotarevEvaluation& ev, bool general) {
    std::printf("k        %d\n", ev.k);
    if (general) {
        std::printf("gamma    %.17g\n", ev.gamma);
        std::printf("alpha    %.17g\n", ev.alpha);
    }
    std::printf("rho      %.17g\n", ev.rho);
    std::printf("log10_Zk %.17g\n", ev.log_Zk / kLn10);
    std::printf("Zk       %.17g%s\n", ev.Zk, ev.underflow ? "  (underflow; see log10_Zk)" : "");
    std::printf("lower    %.17g\n", ev.lower);
    std::printf("upper    %.17g\n", ev.upper);
}

nlohmann::json sweep_to_json(const zolo::SweepResult& res, const zolo::SweepOptions& opt) {
    nlohmann::json j;
    j["class"] = zolo::to_string(res.cls);
    j["seed"] = opt.seed;
    j["variant"] = zolo::to_string(opt.variant);
    j["trust_threshold_rel"] = opt.trust_rel;
    j["instances"] = nlohmann::json::array();
    for (const auto& inst : res.instances) {
        nlohmann::json ji;
        ji["description"] = inst.description;
        ji["n"] = inst.n;
        ji["checked"] = inst.checked;
        ji["violations"] = inst.violations;
        ji["ratio_checked"] = inst.ratio_checked;
        ji["ratio_violations"] = inst.ratio_violations;
        ji["eps_checked"] = inst.eps_checked;
        ji["eps_violations"] = inst.eps_violations;
        ji["worst_log_margin"] = inst.worst_margin;
        if (res.cls == zolo::MatrixClass::HankelPSD) {
            ji["fiedler_ok"] = inst.fiedler_ok;
            ji["fiedler_max_dev"] = inst.fiedler_max_dev;
            ji["psd_ok"] = inst.psd_ok;
        }
        ji["pass"] = inst.pass;
        j["instances"].push_back(ji);
    }
    j["total_checked"] = res.total_checked;
    j["total_violations"] = res.total_violations;
    j["pass"] = res.pass;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zolotarev numbers, extremal rational functions, and singular-value "
                 "decay bounds for structured matrices"};
    app.set_version_flag("--version", std::string("zolo ") + zolo::version_string);
    app.require_subcommand(1);

    // --- zolotarev -------------------------------------------------------
    auto* cz = app.add_subcommand("zolotarev", "Evaluate Z_k with sandwich bounds");
    std::vector<double> sym_pair, gen_pair;
    int zk = 1;
    cz->add_option("--sym", sym_pair, "symmetric pair: a b (E=[-b,-a], F=[a,b])")
        ->expected(2);
    cz->add_option("--general", gen_pair, "general pair: a b c d")->expected(4);
    cz->add_option("--k", zk, "degree k >= 0")->required();

    // --- signapprox ------------------------------------------------------
    auto* cs = app.add_subcommand("signapprox", "Best R_{k,k} sign approximation error");
    double sa = 1.0, sb = 10.0;
    int sk = 8, sgrid = 100001;
    std::string sout;
    cs->add_option("--a", sa, "inner endpoint")->required();
    cs->add_option("--b", sb, "outer endpoint")->required();
    cs->add_option("--k", sk, "degree")->required();
    cs->add_option("--grid", sgrid, "points per interval for the error scan");
    cs->add_option("--out", sout, "write the error curve CSV here");

    // --- generate ---------------------------------------------------------
    auto* cg = app.add_subcommand("generate", "Generate a structured matrix");
    GenerateArgs gen;
    cg->add_option("--class", gen.cls, "pick|cauchy|loewner|krylov|vandermonde|hankel")
        ->required();
    cg->add_option("--n", gen.n, "columns (square if --m omitted)")->required();
    cg->add_option("--m", gen.m, "rows (defaults to n)");
    cg->add_option("--seed", gen.seed, "ensemble seed");
    cg->add_option("--out", gen.out, "output path (.bin or .csv)")->required();
    cg->add_option("--interval", gen.interval, "node interval a b (pick/krylov/vandermonde)")
        ->expected(2);
    cg->add_option("--x-interval", gen.x_interval, "x-node interval a b")->expected(2);
    cg->add_option("--y-interval", gen.y_interval, "y-node interval c d")->expected(2);
    cg->add_option("--nodes", gen.nodes, "chebyshev|equispaced|random");
    cg->add_option("--measure-json", gen.measure_json, "measure config file (hankel)");
    cg->add_option("--uniform", gen.uniform_measure, "uniform measure a b (hankel)")
        ->expected(2);

    // --- spectrum ----------------------------------------------------------
    auto* cp = app.add_subcommand("spectrum", "Singular values of a saved matrix");
    std::string spec_in, spec_out;
    double trust_flag = 0.0;
    cp->add_option("--in", spec_in, "matrix file (.bin or .csv)")->required();
    cp->add_option("--out", spec_out, "spectrum CSV (stdout if omitted)");
    cp->add_option("--trust", trust_flag, "relative trust threshold override");

    // --- bound -------------------------------------------------------------
    auto* cb = app.add_subcommand("bound", "Emit a decay bound curve as CSV");
    std::string bcls = "pick", bvariant = "mu-tight", bout;
    int bn = 100;
    std::vector<double> binterval{1.0, 10.0}, bx{-8.5, -2.0}, by{3.0, 10.0};
    bool bhilbert = false;
    cb->add_option("--class", bcls, "pick|cauchy|loewner|krylov|vandermonde|hankel")->required();
    cb->add_option("--n", bn, "matrix dimension")->required();
    cb->add_option("--variant", bvariant, "mu-tight|log-weak");
    cb->add_option("--interval", binterval, "pick interval a b")->expected(2);
    cb->add_option("--x-interval", bx, "x interval a b")->expected(2);
    cb->add_option("--y-interval", by, "y interval c d")->expected(2);
    cb->add_flag("--hilbert", bhilbert, "Hilbert-geometry Cauchy specialization");
    cb->add_option("--out", bout, "curve CSV (stdout if omitted)");

    // --- verify -------------------------------------------------------------
    auto* cv = app.add_subcommand("verify", "Run the verification suite for a class");
    std::string vcls = "all", vvariant = "mu-tight", vjson;
    std::uint64_t vseed = 42;
    int vinstances = 20;
    bool vquick = false;
    cv->add_option("--class", vcls, "matrix class or 'all'");
    cv->add_option("--seed", vseed, "ensemble seed");
    cv->add_option("--instances", vinstances, "instances per class");
    cv->add_option("--variant", vvariant, "mu-tight|log-weak");
    cv->add_flag("--quick", vquick, "cap matrix sizes for a fast run");
    cv->add_option("--json", vjson, "write machine-readable summary here");

    // --- adi ----------------------------------------------------------------
    auto* ca = app.add_subcommand("adi", "Factored ADI low-rank approximation");
    std::string acls = "cauchy";
    int ak = 5;
    bool asweep = false;
    std::uint64_t aseed = 42;
    int an = 100;
    std::vector<double> ainterval{1.0, 10.0}, ax{-8.5, -2.0}, ay{3.0, 10.0};
    std::string aout_u, aout_v;
    ca->add_option("--class", acls, "pick|cauchy|loewner")->required();
    ca->add_option("--k", ak, "ADI steps")->required();
    ca->add_flag("--sweep", asweep, "run k = 1..K instead of a single k");
    ca->add_option("--seed", aseed, "ensemble seed");
    ca->add_option("--n", an, "matrix dimension");
    ca->add_option("--interval", ainterval, "pick interval a b")->expected(2);
    ca->add_option("--x-interval", ax, "x interval a b")->expected(2);
    ca->add_option("--y-interval", ay, "y interval c d")->expected(2);
    ca->add_option("--out-u", aout_u, "write the U factor (.bin or .csv)");
    ca->add_option("--out-v", aout_v, "write the V factor (.bin or .csv)");

    // --- figure ---------------------------------------------------------------
    auto* cf = app.add_subcommand("figure", "Write reference figure data as CSV");
    int fid = 1;
    std::uint64_t fseed = 42;
    std::string foutdir = ".", fvariant = "mu-tight";
    cf->add_option("--id", fid, "figure id: 1, 2, or 3")->required();
    cf->add_option("--seed", fseed, "ensemble seed");
    cf->add_option("--outdir", foutdir, "output directory");
    cf->add_option("--variant", fvariant, "mu-tight|log-weak (figure 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        double trust_rel = trust_from_env();

        if (cz->parsed()) {
            if (sym_pair.size() == 2 && gen_pair.empty()) {
                auto ev = zolo::zolotarev_number(
                    zolo::IntervalPair::symmetric(sym_pair[0], sym_pair[1]), zk);
                print_zolotarev_row(ev, false);
            } else if (gen_pair.size() == 4 && sym_pair.empty()) {
                auto ev = zolo::zolotarev_number_general(
                    zolo::IntervalPair::general(gen_pair[0], gen_pair[1], gen_pair[2],
                                                gen_pair[3]),
                    zk);
                print_zolotarev_row(ev, true);
            } else {
                throw zolo::data_error("pass exactly one of --sym a b / --general a b c d");
            }
            return 0;
        }

        if (cs->parsed()) {
            zolo::ExtremalRational r = zolo::extremal_rational(sa, sb, sk);
            auto err = [&](double x) { return r.sign_error(x); };
            double emax = 0.0;
            int clusters_pos = 0, clusters_neg = 0;
            bool alternating = true;
            for (double side : {-1.0, 1.0}) {
                double lo = side < 0 ? -sb : sa, hi = side < 0 ? -sa : sb;
                auto peaks = zolo::refined_abs_peaks(err, lo, hi, std::max(101, sgrid / 10));
                double m = 0.0;
                for (auto& p : peaks) m = std::max(m, std::abs(p.value));
                emax = std::max(emax, m);
                std::vector<double> vals;
                for (auto& p : peaks)
                    if (std::abs(p.value) >= (1.0 - 1e-6) * m) vals.push_back(p.value);
                auto cnt = zolo::count_alternation_clusters(vals);
                (side < 0 ? clusters_neg : clusters_pos) = cnt.clusters;
                alternating = alternating && cnt.alternating;
            }
            double ekk = zolo::sign_minimax_Ekk(sa, sb, sk);
            std::printf("max_error            %.17g\n", emax);
            std::printf("E_kk                 %.17g\n", ekk);
            std::printf("rel_deviation        %.3g\n", std::abs(emax - ekk) / ekk);
            std::printf("alternation_clusters %d (neg) %d (pos), alternating=%s\n",
                        clusters_neg, clusters_pos, alternating ? "yes" : "no");
            if (!sout.empty()) {
                zolo::CsvWriter csv(sout, 0, "n/a");
                csv.header({"x", "sign_error"});
                for (double side : {-1.0, 1.0}) {
                    double lo = side < 0 ? -sb : sa, hi = side < 0 ? -sa : sb;
                    for (int i = 0; i < sgrid; ++i) {
                        double x = lo + (hi - lo) * i / (sgrid - 1.0);
                        csv.row({zolo::csv_num(x), zolo::csv_num(err(x))});
                    }
                }
                std::printf("wrote %s\n", sout.c_str());
            }
            return 0;
        }

        if (cg->parsed()) {
            auto spec = build_spec(gen);
            zolo::DenseMatrix A = zolo::generate(spec);
            save_matrix(A, gen.out);
            std::printf("wrote %dx%d %s matrix to %s (seed %llu)\n", A.rows(), A.cols(),
                        gen.cls.c_str(), gen.out.c_str(),
                        static_cast<unsigned long long>(gen.seed));
            return 0;
        }

        if (cp->parsed()) {
            zolo::DenseMatrix A = load_matrix(spec_in);
            double tr = trust_flag > 0.0 ? trust_flag : trust_rel;
            zolo::SpectrumReport rep = zolo::singular_values(A, tr);
            auto emit = [&](std::FILE* f) {
                std::fprintf(f, "# zolo %s, seed=0, variant=n/a, rng=%s\n", zolo::version_string,
                             zolo::Rng::algorithm_name);
                std::fprintf(f, "index,sigma,sigma_over_sigma1,trusted\n");
                for (std::size_t j = 0; j < rep.sigma.size(); ++j)
                    std::fprintf(f, "%zu,%.17g,%.17g,%d\n", j + 1, rep.sigma[j],
                                 rep.sigma[j] / rep.sigma1(),
                                 static_cast<int>(j) < rep.trusted_count ? 1 : 0);
            };
            if (spec_out.empty()) {
                emit(stdout);
            } else {
                std::FILE* f = std::fopen(spec_out.c_str(), "w");
                if (!f) throw zolo::data_error("cannot open " + spec_out);
                emit(f);
                std::fclose(f);
            }
            return 0;
        }

        if (cb->parsed()) {
            zolo::BoundVariant variant = parse_variant(bvariant);
            zolo::BoundCurve curve;
            if (bhilbert) {
                curve = zolo::hilbert_bound(bn);
            } else {
                switch (parse_class(bcls)) {
                    case zolo::MatrixClass::Pick:
                        curve = zolo::pick_bound(binterval[0], binterval[1], bn, variant);
                        break;
                    case zolo::MatrixClass::Cauchy:
                        curve = zolo::cauchy_bound(bx[0], bx[1], by[0], by[1], bn, bn, variant);
                        break;
                    case zolo::MatrixClass::Loewner:
                        curve = zolo::loewner_bound(bx[0], bx[1], by[0], by[1], bn, variant);
                        break;
                    case zolo::MatrixClass::KrylovHermitian:
                        curve = zolo::krylov_bound(bn, variant);
                        break;
                    case zolo::MatrixClass::VandermondeReal:
                        curve = zolo::vandermonde_bound(bn, variant);
                        break;
                    case zolo::MatrixClass::HankelPSD:
                        curve = zolo::hankel_bound(bn, variant);
                        break;
                }
            }
            auto emit = [&](std::FILE* f) {
                std::fprintf(f, "# zolo %s, seed=0, variant=%s, rng=%s\n", zolo::version_string,
                             zolo::to_string(curve.variant), zolo::Rng::algorithm_name);
                std::fprintf(f, "index,log10_bound,variant\n");
                for (int j = 1; j <= bn; ++j)
                    std::fprintf(f, "%d,%.17g,%s\n", j, curve.log_value(j) / kLn10,
                                 zolo::to_string(curve.variant));
            };
            if (bout.empty()) {
                emit(stdout);
            } else {
                std::FILE* f = std::fopen(bout.c_str(), "w");
                if (!f) throw zolo::data_error("cannot open " + bout);
                emit(f);
                std::fclose(f);
            }
            return 0;
        }

        if (cv->parsed()) {
            zolo::SweepOptions opt;
            opt.seed = vseed;
            opt.instances = vinstances;
            opt.variant = parse_variant(vvariant);
            opt.trust_rel = trust_rel;
            opt.quick = vquick;
            std::vector<zolo::MatrixClass> classes;
            if (vcls == "all") {
                classes = {zolo::MatrixClass::Pick,          zolo::MatrixClass::Cauchy,
                           zolo::MatrixClass::Loewner,       zolo::MatrixClass::KrylovHermitian,
                           zolo::MatrixClass::VandermondeReal, zolo::MatrixClass::HankelPSD};
            } else {
                classes = {parse_class(vcls)};
            }
            nlohmann::json summary = nlohmann::json::array();
            bool all_pass = true;
            for (auto cls : classes) {
                zolo::SweepResult res = zolo::run_class_sweep(cls, opt);
                all_pass = all_pass && res.pass;
                std::printf("%-12s instances=%zu checked=%d violations=%d ratio_violations=%d %s\n",
                            zolo::to_string(cls), res.instances.size(), res.total_checked,
                            res.total_violations, res.total_ratio_violations,
                            res.pass ? "PASS" : "FAIL");
                summary.push_back(sweep_to_json(res, opt));
            }
            if (!vjson.empty()) {
                std::ofstream jf(vjson);
                if (!jf) throw zolo::data_error("cannot open " + vjson);
                nlohmann::json top;
                top["version"] = zolo::version_string;
                top["pass"] = all_pass;
                top["classes"] = summary;
                jf << top.dump(2) << "\n";
            }
            return all_pass ? 0 : 1;
        }

        if (ca->parsed()) {
            zolo::MatrixClass cls = parse_class(acls);
            zolo::Rng rng(aseed);
            zolo::StructuredMatrixSpec spec;
            if (cls == zolo::MatrixClass::Pick) {
                spec = zolo::make_pick_instance(ainterval[0], ainterval[1], an, rng);
            } else if (cls == zolo::MatrixClass::Cauchy) {
                spec = zolo::make_cauchy_instance({ax[0], ax[1], ay[0], ay[1]}, an, rng);
            } else if (cls == zolo::MatrixClass::Loewner) {
                spec = zolo::make_loewner_instance({ax[0], ax[1], ay[0], ay[1]}, an, rng);
            } else {
                throw zolo::capability_error("fADI covers pick, cauchy, loewner");
            }
            std::printf("k,nu,Zk,adi_rel_error,optimal_rel_error,ratio\n");
            int kfrom = asweep ? 1 : ak;
            for (int k = kfrom; k <= ak; ++k) {
                auto cmp = zolo::compare_with_truncated_svd(spec, k);
                std::printf("%d,%d,%.17g,%.17g,%.17g,%.6g\n", cmp.k, cmp.nu, cmp.certified_bound,
                            cmp.adi_error / cmp.sigma1, cmp.optimal_error / cmp.sigma1, cmp.ratio);
            }
            if (!aout_u.empty() || !aout_v.empty()) {
                auto f = zolo::fadi_approximate(spec, ak);
                if (!aout_u.empty()) save_matrix(f.U, aout_u);
                if (!aout_v.empty()) save_matrix(f.V, aout_v);
            }
            return 0;
        }

        if (cf->parsed()) {
            auto files = zolo::write_figure(fid, fseed, foutdir, parse_variant(fvariant));
            for (const auto& f : files) std::printf("wrote %s\n", f.c_str());
            return 0;
        }
    } catch (const zolo::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
