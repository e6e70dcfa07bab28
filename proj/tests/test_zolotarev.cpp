#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "zolo/rng.hpp"
#include "zolo/zolotarev.hpp"

using namespace zolo;

TEST_CASE("interval pair validation") {
    CHECK_THROWS_AS(IntervalPair::symmetric(-1.0, 2.0), geometry_error);
    CHECK_THROWS_AS(IntervalPair::symmetric(2.0, 2.0), geometry_error);
    CHECK_THROWS_AS(IntervalPair::general(0.0, 1.0, 0.5, 2.0), geometry_error);
    // touching intervals: cross-ratio denominator |c-b| = 0
    CHECK_THROWS_AS(IntervalPair::general(0.0, 1.0, 1.0, 2.0), geometry_error);

    auto p = IntervalPair::general(0.0, 1.0, 2.0, 3.0);
    CHECK(p.gamma == Catch::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(p.alpha == Catch::Approx(-1.0 + 8.0 / 3.0 + 2.0 * std::sqrt(16.0 / 9.0 - 4.0 / 3.0))
                         .epsilon(1e-15));
}

TEST_CASE("Z_0 = 1 and sandwich fields") {
    auto ev = zolotarev_number(1.0, 10.0, 0);
    CHECK(ev.Zk == 1.0);
    CHECK(ev.log_Zk == 0.0);

    for (double ba : {1.5, 10.0, 1e4}) {
        for (int k : {1, 2, 5, 17, 40}) {
            auto e = zolotarev_number(1.0, ba, k);
            CHECK(e.log_lower <= e.log_Zk + 1e-12 * std::abs(e.log_Zk));
            CHECK(e.log_Zk <= e.log_upper + 1e-12 * std::abs(e.log_Zk));
            // upper <= 4 rho^{-2k}
            CHECK(e.log_upper <= std::log(4.0) - 2.0 * k * e.log_rho + 1e-12);
        }
    }
}

TEST_CASE("Gonchar envelope is strictly looser than the sandwich") {
    for (double ba : {2.0, 100.0}) {
        for (int k : {1, 3, 9}) {
            auto e = zolotarev_number(1.0, ba, k);
            double log_env_lo = -2.0 * k * e.log_rho;
            double log_env_hi = std::log(16.0) - 2.0 * k * e.log_rho;
            CHECK(log_env_lo < e.log_lower);
            CHECK(e.log_upper < log_env_hi);
            CHECK(log_env_lo <= e.log_Zk);
            CHECK(e.log_Zk <= log_env_hi);
        }
    }
}

TEST_CASE("monotonicity and submultiplicativity in k") {
    for (double ba : {1.1, 10.0, 100.0}) {
        std::vector<double> logz(21);
        for (int k = 0; k <= 20; ++k) logz[k] = zolotarev_number(1.0, ba, k).log_Zk;
        for (int k = 0; k < 20; ++k) CHECK(logz[k + 1] <= logz[k] + 1e-12);
        for (int k1 = 1; k1 <= 10; ++k1)
            for (int k2 = 1; k2 <= 10; ++k2)
                CHECK(logz[k1 + k2] <= logz[k1] + logz[k2] + 1e-12);
    }
}

TEST_CASE("general pair reduces to symmetric for mirrored intervals") {
    // [a,b] = [-b',-a'], [c,d] = [a',b']: gamma satisfies 2 mu(1/sqrt(gamma)) = mu(a'/b')
    for (double ba : {2.0, 10.0, 250.0}) {
        auto gen = IntervalPair::general(-ba, -1.0, 1.0, ba);
        for (int k : {1, 4, 9}) {
            auto eg = zolotarev_number_general(gen, k);
            auto es = zolotarev_number(1.0, ba, k);
            CHECK(eg.log_Zk == Catch::Approx(es.log_Zk).epsilon(1e-12));
        }
        // Gauss transformation route for rho: mu(1/alpha) = 2 mu(1/sqrt(gamma))
        auto m_alpha = ModulusValue::from_lambda(1.0 / gen.alpha);
        auto m_gam = ModulusValue::from_lambda(1.0 / std::sqrt(gen.gamma));
        CHECK(grotzsch_mu(m_alpha) ==
              Catch::Approx(2.0 * grotzsch_mu(m_gam)).epsilon(1e-12));
    }
}

TEST_CASE("Hilbert geometry cross-ratio") {
    for (int n : {5, 100, 1000}) {
        auto p = IntervalPair::general(-n + 0.5, -0.5, 0.5, n - 0.5);
        CHECK(p.gamma == Catch::Approx(static_cast<double>(n) * n / (2.0 * n - 1.0))
                             .epsilon(1e-13));
    }
}

TEST_CASE("Mobius invariance under affine maps of the four points") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        double a = rng.uniform(-3.0, -2.0), b = rng.uniform(-1.5, -0.5);
        double c = rng.uniform(0.0, 1.0), d = rng.uniform(1.5, 3.0);
        double scale = rng.uniform(0.3, 4.0), shift = rng.uniform(-5.0, 5.0);
        auto p1 = IntervalPair::general(a, b, c, d);
        auto p2 = IntervalPair::general(scale * a + shift, scale * b + shift,
                                        scale * c + shift, scale * d + shift);
        for (int k : {1, 5}) {
            CHECK(zolotarev_number_general(p1, k).log_Zk ==
                  Catch::Approx(zolotarev_number_general(p2, k).log_Zk).epsilon(1e-12));
        }
    }
}

TEST_CASE("Blaschke E_k") {
    CHECK(blaschke_Ek(0.3, 0) == 1.0);
    CHECK_THROWS_AS(blaschke_Ek(1.5, 3), domain_error);
    CHECK_THROWS_AS(blaschke_Ek(0.0, 3), domain_error);

    SECTION("E_k = sqrt(Z_k) across a parameter grid") {
        for (double eta : {1e-6, 1e-3, 0.05, 0.3, 0.8, 0.99}) {
            for (int k : {1, 2, 5, 10}) {
                double lhs = log_blaschke_Ek(eta, k);
                double rhs = 0.5 * zolotarev_number(eta, 1.0, k).log_Zk;
                CHECK(lhs == Catch::Approx(rhs).epsilon(1e-13));
            }
        }
    }
    SECTION("two-sided estimate 2 rho^{-k}/(1+rho^{-4k})^2 <= E_k <= 2 rho^{-k}/(1+rho^{-4k})") {
        for (double eta : {0.01, 0.4}) {
            for (int k : {1, 3, 8}) {
                double lr = zolotarev_number(eta, 1.0, 1).log_rho;
                double q = std::exp(-4.0 * k * lr);
                double lo = std::log(2.0) - k * lr - 2.0 * std::log1p(q);
                double hi = std::log(2.0) - k * lr - std::log1p(q);
                double v = log_blaschke_Ek(eta, k);
                CHECK(lo <= v + 1e-12 * std::abs(v));
                CHECK(v <= hi + 1e-12 * std::abs(v));
            }
        }
    }
}

TEST_CASE("sign minimax value E_{k,k}") {
    SECTION("equals 2 sqrt(Z_k)/(1 + Z_k)") {
        for (double ba : {1.5, 10.0, 300.0}) {
            for (int k : {1, 2, 6, 12}) {
                auto z = zolotarev_number(1.0, ba, k);
                double expected = std::log(2.0) + 0.5 * z.log_Zk - std::log1p(z.Zk);
                CHECK(log_sign_minimax_Ekk(1.0, ba, k) ==
                      Catch::Approx(expected).epsilon(1e-13));
            }
        }
    }
    SECTION("sandwich 4 rho^{-k}/(1+rho^{-2k})^4 <= E_kk <= 4 rho^{-k}/(1+rho^{-2k})^2") {
        for (double ba : {1.2, 40.0}) {
            for (int k : {1, 4, 9}) {
                double lr = zolotarev_number(1.0, ba, 1).log_rho;
                double q = std::exp(-2.0 * k * lr);
                double lo = std::log(4.0) - k * lr - 4.0 * std::log1p(q);
                double hi = std::log(4.0) - k * lr - 2.0 * std::log1p(q);
                double v = log_sign_minimax_Ekk(1.0, ba, k);
                CHECK(lo <= v + 1e-12 * std::abs(v));
                CHECK(v <= hi + 1e-12 * std::abs(v));
            }
        }
    }
    CHECK_THROWS_AS(log_sign_minimax_Ekk(1.0, 10.0, 0), domain_error);
}

TEST_CASE("Krylov 2k-step bound") {
    CHECK(krylov_Z2k_bound(8, 0) == 1.0);
    CHECK_THROWS_AS(krylov_Z2k_bound(7, 2), domain_error);

    SECTION("agrees with sign_minimax_Ekk on (l, 1/l)") {
        for (int n : {4, 10, 64}) {
            double ell = std::tan(3.14159265358979323846 / (2.0 * n));
            for (int k : {1, 3, 7}) {
                CHECK(log_krylov_Z2k_bound(n, k) ==
                      Catch::Approx(log_sign_minimax_Ekk(ell, 1.0 / ell, k)).epsilon(1e-15));
            }
        }
    }
    SECTION("weaker closed form 4 rho^{-k} with rho >= exp(pi^2/(4 log(4n/pi)))") {
        const double pi = 3.14159265358979323846;
        for (int n : {10, 100, 1000}) {
            double log_rho_weak = pi * pi / (4.0 * std::log(4.0 * n / pi));
            for (int k : {1, 4, 10}) {
                CHECK(log_krylov_Z2k_bound(n, k) <= std::log(4.0) - k * log_rho_weak + 1e-12);
            }
        }
    }
}
