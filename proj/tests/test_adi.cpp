#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "zolo/adi.hpp"
#include "zolo/ensembles.hpp"

using namespace zolo;

namespace {

StructuredMatrixSpec cauchy_instance(int n, std::uint64_t seed) {
    Rng rng(seed);
    return make_cauchy_instance({-8.5, -2.0, 3.0, 10.0}, n, rng);
}

StructuredMatrixSpec pick_instance(int n, double ba, std::uint64_t seed) {
    Rng rng(seed);
    return StructuredMatrixSpec::pick(equispaced_nodes(1.0, ba, n), gaussian_vector(rng, n),
                                      1.0, ba);
}

StructuredMatrixSpec loewner_instance(int n, std::uint64_t seed) {
    Rng rng(seed);
    return make_loewner_instance({-100.0, -3.0, 3.0, 100.0}, n, rng);
}

} // namespace

TEST_CASE("fADI factored iterate equals the dense ADI double-step recurrence") {
    // dense reference: X_j from
    //   (A - beta_j I) X_{j-1/2} = X_{j-1} (B - beta_j I) + C
    //   X_j (B - alpha_j I) = (A - alpha_j I) X_{j-1/2} - C
    // with diagonal A and B, solved entrywise.
    const int n = 18, k = 4;
    auto spec = cauchy_instance(n, 501);
    DenseMatrix X = generate(spec);
    auto f = fadi_approximate(spec, k);
    DenseMatrix Xk = low_rank_product(f);

    auto pair = IntervalPair::general(-8.5, -2.0, 3.0, 10.0);
    auto sp = adi_shifts(pair, k);
    // C = s t^T
    Rng rng(501);
    auto s = gaussian_vector(rng, n);
    auto t = gaussian_vector(rng, n);
    DenseMatrix C(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) C(i, j) = s[i] * t[j];

    std::vector<double> x = chebyshev_nodes(-8.5, -2.0, n), y = chebyshev_nodes(3.0, 10.0, n);
    DenseMatrix Xd(n, n); // X_0 = 0
    for (int step = 0; step < k; ++step) {
        double alpha = sp.pairs[step].first, beta = sp.pairs[step].second;
        DenseMatrix half(n, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                half(i, j) = (Xd(i, j) * (y[j] - beta) + C(i, j)) / (x[i] - beta);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                Xd(i, j) = ((x[i] - alpha) * half(i, j) - C(i, j)) / (y[j] - alpha);
    }
    double scale = Xd.max_abs();
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            CHECK(std::abs(Xd(i, j) - Xk(i, j)) <= 1e-11 * scale);
}

TEST_CASE("fADI error satisfies the certified bound and Eckart-Young floor") {
    for (int k = 1; k <= 8; ++k) {
        auto cmp = compare_with_truncated_svd(cauchy_instance(60, 77), k);
        CHECK(cmp.adi_error <= cmp.certified_bound * cmp.sigma1 * (1.0 + 1e-8));
        if (cmp.optimal_error > 1e-12 * cmp.sigma1)
            CHECK(cmp.ratio >= 1.0 - 1e-10);
    }
}

TEST_CASE("fADI on Pick and Loewner instances") {
    SECTION("pick: rank exactly 2k in general position") {
        const int n = 24, k = 3;
        auto spec = pick_instance(n, 10.0, 91);
        auto f = fadi_approximate(spec, k);
        CHECK(f.nu == 2);
        auto rep = singular_values(low_rank_product(f));
        CHECK(rep.sigma[2 * k - 1] > 1e-10 * rep.sigma1()); // full rank 2k
        CHECK(rep.sigma[2 * k] <= 1e-12 * rep.sigma1());    // and no more

        auto cmp = compare_with_truncated_svd(spec, k);
        CHECK(cmp.adi_error <= cmp.certified_bound * cmp.sigma1 * (1.0 + 1e-8));
    }
    SECTION("loewner error within the certified bound") {
        for (int k : {1, 3, 5}) {
            auto cmp = compare_with_truncated_svd(loewner_instance(50, 12), k);
            CHECK(cmp.nu == 2);
            CHECK(cmp.adi_error <= cmp.certified_bound * cmp.sigma1 * (1.0 + 1e-8));
            if (cmp.optimal_error > 1e-12 * cmp.sigma1) CHECK(cmp.ratio >= 1.0 - 1e-10);
        }
    }
}

TEST_CASE("monotone decay and doubling") {
    double prev = std::numeric_limits<double>::infinity();
    std::vector<double> logz(11, 0.0);
    auto spec = cauchy_instance(50, 7);
    for (int k = 1; k <= 10; ++k) {
        auto f = fadi_approximate(spec, k);
        logz[k] = f.log_certified_bound;
        DenseMatrix D = generate(spec) - low_rank_product(f);
        double err = spectral_norm(D);
        CHECK(err <= prev * (1.0 + 1e-9));
        prev = err;
    }
    // doubling the steps at least squares the certified bound
    for (int k = 1; k <= 5; ++k) CHECK(logz[2 * k] <= 2.0 * logz[k] + 1e-10);
}

TEST_CASE("fADI capability and geometry errors") {
    Rng rng(3);
    auto kspec = StructuredMatrixSpec::krylov(equispaced_nodes(-1.0, 1.0, 10),
                                              gaussian_vector(rng, 10), 10);
    CHECK_THROWS_AS(fadi_approximate(kspec, 2), capability_error);
    auto hspec = StructuredMatrixSpec::hankel(MeasureSpec::uniform(-1.0, 1.0), 10);
    CHECK_THROWS_AS(fadi_approximate(hspec, 2), capability_error);

    auto overlap = StructuredMatrixSpec::cauchy({0.0, 1.0}, {0.5, 2.0}, {1.0, 1.0}, {1.0, 1.0},
                                                0.0, 1.0, 0.5, 2.0);
    CHECK_THROWS_AS(fadi_approximate(overlap, 2), geometry_error);
    CHECK_THROWS_AS(fadi_approximate(cauchy_instance(10, 1), 0), domain_error);
}

TEST_CASE("certified bound matches the zolotarev evaluation") {
    auto spec = cauchy_instance(30, 5);
    auto pair = IntervalPair::general(-8.5, -2.0, 3.0, 10.0);
    for (int k : {1, 4}) {
        auto f = fadi_approximate(spec, k);
        CHECK(f.log_certified_bound ==
              Catch::Approx(zolotarev_number_general(pair, k).log_Zk).epsilon(1e-14));
    }
    auto p = pick_instance(20, 10.0, 9);
    auto fp = fadi_approximate(p, 3);
    CHECK(fp.log_certified_bound ==
          Catch::Approx(zolotarev_number(1.0, 10.0, 3).log_Zk).epsilon(1e-14));
}
