#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "iom/matcher.hpp"
#include "iom/theory.hpp"
#include "iom/urp.hpp"
#include "test_util.hpp"

using namespace iom;

TEST_SUITE("urp") {

TEST_CASE("hand-evaluated Hadamard product window") {
    // x = (0.5, -0.2, 0.3, 0.1, -0.4), p = 2, k = 3
    // theta1 = (3,1,5,2,4) -> x^1 = (0.3, 0.5, -0.4, -0.2, 0.1)
    // theta2 = (2,4,1,5,3) -> x^2 = (-0.2, 0.1, 0.5, -0.4, 0.3)
    // first-3 products = (-0.06, 0.05, -0.20) -> argmax = 2
    const std::vector<double> x{0.5, -0.2, 0.3, 0.1, -0.4};
    const std::vector<std::vector<std::uint32_t>> perms{{3, 1, 5, 2, 4}, {2, 4, 1, 5, 3}};
    CHECK(argmax_window_product(perms, x, 3) == 2);
}

TEST_CASE("all-equal entries tie-break to index 1") {
    const IomToken token(MasterSeed{11}, UrpParams{16, 4, 2});
    const FeatureVector x(std::vector<double>(10, 0.7));
    const HashedCode code = urp_hash(x, token);
    for (auto t : code.indices()) CHECK(t == 1);
}

TEST_CASE("window and parameter validation") {
    std::mt19937_64 rng(3);
    const FeatureVector x(test::random_values(6, rng));
    CHECK_THROWS_AS(urp_hash(x, IomToken(MasterSeed{1}, UrpParams{4, 8, 2})), Error); // k > d
    CHECK_THROWS_AS(IomToken(MasterSeed{1}, UrpParams{4, 1, 2}), Error);              // k <= 1
    const IomToken grp(MasterSeed{1}, GrpParams{4, 4});
    CHECK_THROWS_AS(urp_hash(x, grp), Error);
}

TEST_CASE("positive scaling leaves the code unchanged") {
    const IomToken token(MasterSeed{900}, UrpParams{100, 8, 2});
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const FeatureVector x(test::random_values(16, rng));
        std::vector<double> scaled(x.values().begin(), x.values().end());
        for (double& v : scaled) v *= 3.0;
        CHECK(urp_hash(x, token) == urp_hash(FeatureVector(scaled), token));
    }
}

TEST_CASE("negation is invisible to even Hadamard orders") {
    const IomToken even(MasterSeed{901}, UrpParams{100, 8, 2});
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const FeatureVector x(test::random_values(16, rng));
        std::vector<double> negated(x.values().begin(), x.values().end());
        for (double& v : negated) v = -v;
        CHECK(urp_hash(x, even) == urp_hash(FeatureVector(negated), even));
    }
}

TEST_CASE("output indices are uniform on [1, k] for iid inputs") {
    const std::uint32_t k = 4;
    const IomToken token(MasterSeed{5150}, UrpParams{10000, k, 2});
    std::mt19937_64 rng(10);
    const FeatureVector x(test::random_values(16, rng));
    const HashedCode code = urp_hash(x, token);
    std::array<double, k> counts{};
    for (auto t : code.indices()) counts[t - 1] += 1.0;
    const double expected = 10000.0 / k;
    double chi2 = 0.0;
    for (double c : counts) chi2 += (c - expected) * (c - expected) / expected;
    CHECK(chi2 < 16.27); // chi-square 99.9% quantile, 3 degrees of freedom
}

TEST_CASE("p = 1 agreement matches the windowed-argmax estimate") {
    // Same permutations on both sides reduce per-hash agreement to the
    // probability that a random k-window has the same argmax coordinate.
    std::mt19937_64 rng(12);
    const std::uint32_t d = 8, k = 3;
    std::vector<double> base = test::random_values(d, rng);
    std::vector<double> noisy = base;
    std::normal_distribution<double> jitter(0.0, 0.35);
    for (double& v : noisy) v += jitter(rng);
    const FeatureVector xe(base), xq(noisy);

    const IomToken token(MasterSeed{6021}, UrpParams{40000, k, 1});
    std::vector<FeatureVector> pair{xe, xq};
    const auto codes = urp_hash_batch(pair, token);
    const double empirical = collision_score(codes[0], codes[1]).score;
    CHECK(std::abs(empirical - po_estimate(xe, xq, k)) < 0.012);
}

} // TEST_SUITE
