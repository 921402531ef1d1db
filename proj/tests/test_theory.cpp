#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "iom/theory.hpp"
#include "test_util.hpp"

using namespace iom;

namespace {

// Independent oracle: enumerate every k-subset of [0, d) and count windows
// whose argmax coordinate agrees in both vectors.
double window_agreement_oracle(const FeatureVector& xe, const FeatureVector& xq, std::uint32_t k) {
    const std::size_t d = xe.dim();
    std::vector<bool> mask(d, false);
    std::fill(mask.begin(), mask.begin() + k, true);
    long agree = 0, total = 0;
    std::vector<std::size_t> window;
    do {
        window.clear();
        for (std::size_t i = 0; i < d; ++i)
            if (mask[i]) window.push_back(i);
        const auto by_e = *std::max_element(window.begin(), window.end(),
                                            [&](std::size_t a, std::size_t b) { return xe[a] < xe[b]; });
        const auto by_q = *std::max_element(window.begin(), window.end(),
                                            [&](std::size_t a, std::size_t b) { return xq[a] < xq[b]; });
        ++total;
        agree += (by_e == by_q);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return static_cast<double>(agree) / static_cast<double>(total);
}

std::vector<double> distinct_values(std::size_t d, std::mt19937_64& rng) {
    std::vector<double> v;
    while (true) {
        v = iom::test::random_values(d, rng);
        std::vector<double> sorted = v;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) return v;
    }
}

} // namespace

TEST_SUITE("theory") {

TEST_CASE("hermite moments of the max order statistic") {
    // closed forms: E[max of 2] = 1/sqrt(pi), E[max of 3] = 3/(2 sqrt(pi))
    CHECK(std::abs(hermite_moment(2, 1) - 0.564190) < 1e-4);
    CHECK(std::abs(hermite_moment(2, 1) - 1.0 / std::sqrt(std::numbers::pi)) < 1e-6);
    CHECK(std::abs(hermite_moment(3, 1) - 1.5 / std::sqrt(std::numbers::pi)) < 1e-6);
    CHECK(std::abs(hermite_moment(2, 2)) < 1e-6); // E[max^2 of 2] = 1 by symmetry
    CHECK_THROWS_AS(hermite_moment(1, 1), Error);
    CHECK_THROWS_AS(hermite_moment(4, 3), Error);
}

TEST_CASE("h1 is strictly increasing in q") {
    double previous = 0.0;
    for (std::uint32_t q : {2u, 4u, 8u, 16u}) {
        const double h = hermite_moment(q, 1);
        CHECK(h > previous);
        previous = h;
    }
}

TEST_CASE("h1(4) against a Monte Carlo oracle") {
    std::mt19937_64 rng(424242);
    std::normal_distribution<double> normal;
    const int trials = 4000000;
    double sum = 0.0;
    for (int i = 0; i < trials; ++i) {
        double best = normal(rng);
        for (int j = 1; j < 4; ++j) best = std::max(best, normal(rng));
        sum += best;
    }
    CHECK(std::abs(hermite_moment(4, 1) - sum / trials) < 2e-3);
}

TEST_CASE("kq series anchors") {
    for (std::uint32_t q : {2u, 3u, 4u, 16u, 64u})
        CHECK(kq_series(q, 0.0) == doctest::Approx(1.0 / q));
    // a2(2) = 0, so the q = 2 series is exactly 0.5 + rho/pi
    for (double rho : {-0.9, -0.3, 0.0, 0.4, 1.0})
        CHECK(std::abs(kq_series(2, rho) - (0.5 + rho / std::numbers::pi)) < 1e-5);
    CHECK(std::abs(kq_series(4, 0.3) - 0.36508) < 1e-3);
    CHECK_THROWS_AS(kq_series(1, 0.0), Error);
    CHECK_THROWS_AS(kq_series(4, 1.5), Error);
}

TEST_CASE("series truncation stays within 0.02 of the exact q = 2 law") {
    for (double rho = -0.5; rho <= 0.5001; rho += 0.05)
        CHECK(std::abs(kq_series(2, rho) - grp_collision_exact2(rho)) <= 0.02);
}

TEST_CASE("exact two-projection collision law") {
    CHECK(grp_collision_exact2(1.0) == doctest::Approx(1.0));
    CHECK(grp_collision_exact2(0.0) == doctest::Approx(0.5));
    CHECK(std::abs(grp_collision_exact2(0.5) - 2.0 / 3.0) < 1e-12);
    CHECK(grp_collision_exact2(-1.0) == doctest::Approx(0.0));
}

TEST_CASE("po estimate: self-agreement is total") {
    std::mt19937_64 rng(31);
    const FeatureVector x(distinct_values(7, rng));
    for (std::uint32_t k : {2u, 3u, 5u, 7u})
        CHECK(po_estimate(x, x, k) == doctest::Approx(1.0));
}

TEST_CASE("po estimate on fixed instances") {
    // Reversed order shares no dominated pairs: no window can agree.
    const FeatureVector inc({1.0, 2.0, 3.0}), dec({3.0, 2.0, 1.0});
    CHECK(po_estimate(inc, dec, 2) == doctest::Approx(0.0));
    CHECK(window_agreement_oracle(inc, dec, 2) == doctest::Approx(0.0));

    const FeatureVector xe({0.31, -0.42, 0.07, 0.88, -0.15, 0.54});
    const FeatureVector xq({0.54, -0.40, 0.12, 0.33, -0.22, 0.61});
    CHECK(po_estimate(xe, xq, 3) == doctest::Approx(13.0 / 20.0)); // enumerated by hand
    CHECK(std::abs(po_estimate(xe, xq, 3) - window_agreement_oracle(xe, xq, 3)) < 1e-12);
}

TEST_CASE("po estimate equals the exhaustive window oracle") {
    std::mt19937_64 rng(57);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t d = 3 + static_cast<std::size_t>(rng() % 6); // 3..8
        const std::uint32_t k = 2 + static_cast<std::uint32_t>(rng() % (d - 1));
        const FeatureVector xe(distinct_values(d, rng)), xq(distinct_values(d, rng));
        CHECK(std::abs(po_estimate(xe, xq, k) - window_agreement_oracle(xe, xq, k)) < 1e-12);
    }
}

TEST_CASE("po estimate input validation") {
    const FeatureVector dup({1.0, 1.0, 2.0}), ok({1.0, 3.0, 2.0});
    CHECK_THROWS_AS(po_estimate(dup, ok, 2), Error);
    CHECK_THROWS_AS(po_estimate(ok, dup, 2), Error);
    CHECK_THROWS_AS(po_estimate(ok, ok, 1), Error);
    CHECK_THROWS_AS(po_estimate(ok, ok, 4), Error);
}

TEST_CASE("brute force bits") {
    CHECK(brute_force_bits(600, 128).bits == doctest::Approx(4200.0));
    CHECK(brute_force_bits(1, 2).bits == doctest::Approx(1.0));
    const double exact = brute_force_bits(300, 150).bits;
    CHECK(exact == doctest::Approx(2168.6456).epsilon(1e-6));
    CHECK(exact > 2100.0); // the conservative 2^7-per-entry bound
}

TEST_CASE("false accept bits") {
    CHECK(false_accept_bits(0.11, 600, 128).bits == doctest::Approx(462.0));
    CHECK(false_accept_bits(0.01, 300, 16).bits == doctest::Approx(12.0));
    CHECK(false_accept_bits(1.0, 5, 2).bits == doctest::Approx(brute_force_bits(5, 2).bits));
    CHECK(false_accept_bits(0.001, 100, 16).degenerate_threshold);
    CHECK(!false_accept_bits(0.11, 600, 128).degenerate_threshold);
    CHECK(false_accept_bits_floored(0.08, 600, 8).bits == doctest::Approx(384.0));
}

TEST_CASE("birthday bits") {
    const double urp_db1 = birthday_bits(0.11, 600, 128).bits;
    CHECK(urp_db1 == doctest::Approx(252.4994).epsilon(1e-5));
    CHECK(std::abs(urp_db1 - 252.0) <= 1.0);
    const double grp_db1 = birthday_bits(0.06, 300, 16).bits;
    CHECK(grp_db1 == doctest::Approx(41.8635).epsilon(1e-5));
    CHECK(std::abs(grp_db1 - 42.0) <= 1.0);
}

TEST_CASE("birthday is the square-root-degree reduction of false accept") {
    const struct { double tau; std::uint32_t m, delta; } rows[] = {
        {0.11, 600, 128}, {0.08, 600, 250}, {0.05, 600, 250},
        {0.10, 600, 50},  {0.06, 600, 250}, {0.06, 400, 250},
        {0.06, 300, 16},  {0.05, 300, 16},
    };
    for (const auto& r : rows) {
        const double fa = r.tau * r.m * std::log2(static_cast<double>(r.delta));
        const double expected = 0.5 * fa + 0.5 * r.tau * r.m * std::log2(std::numbers::pi / 2.0);
        CHECK(std::abs(birthday_bits(r.tau, r.m, r.delta).bits - expected) < 1e-9);
    }
}

TEST_CASE("single-entry birthday readings") {
    const auto [linear, sqrt_reading] = birthday_single_entry_trials(128);
    CHECK(linear == doctest::Approx(std::sqrt(std::numbers::pi / 2.0) * 128.0));
    CHECK(sqrt_reading == doctest::Approx(std::sqrt(std::numbers::pi * 128.0 / 2.0)));
    CHECK(linear > sqrt_reading);
}

TEST_CASE("guess space bits") {
    const auto db1 = guess_space_bits(-0.2504, 0.2132, 0.0001, 1);
    CHECK(db1.count == 4636);
    CHECK(db1.bits == doctest::Approx(std::log2(4636.0)));
    CHECK(db1.bits_pow2_convention == doctest::Approx(12.0));

    const auto full = guess_space_bits(-0.2504, 0.2132, 0.0001, 299);
    CHECK(full.bits_pow2_convention == doctest::Approx(12.0 * 299.0)); // 2^3588 convention
    CHECK(full.bits == doctest::Approx(299.0 * std::log2(4636.0)));

    const auto tiny = guess_space_bits(0.0, 1.0, 0.5, 1);
    CHECK(tiny.count == 2);
    CHECK(tiny.bits == doctest::Approx(1.0));

    CHECK_THROWS_AS(guess_space_bits(0.0, 1.0, 2.0, 1), Error);  // < 2 possibilities
    CHECK_THROWS_AS(guess_space_bits(1.0, 0.0, 0.1, 1), Error);  // max <= min
}

TEST_CASE("single-component guess-space counts across corpora") {
    const struct { double lo, hi; long expected; int bits; } rows[] = {
        {-0.2504, 0.2132, 4636, 12}, {-0.2409, 0.2484, 4893, 12}, {-0.1919, 0.2372, 4291, 12},
        {-0.2487, 0.1748, 4235, 12}, {-0.2357, 0.1950, 4307, 12}, {-0.1947, 0.1796, 3743, 12},
    };
    for (const auto& r : rows) {
        const auto e = guess_space_bits(r.lo, r.hi, 0.0001, 1);
        CHECK(e.count == r.expected);
        CHECK(std::abs(std::log2(static_cast<double>(e.count)) - r.bits) <= 1.0);
    }
}

TEST_CASE("false-accept table rows under per-row alphabet floors") {
    // URP rows: (tau, m, bits-per-entry) -> published exponent
    const struct { double tau; std::uint32_t m, bits; double expected; } urp_rows[] = {
        {0.11, 600, 7, 462}, {0.08, 600, 8, 384}, {0.05, 600, 8, 240},
        {0.10, 600, 5, 300}, {0.06, 600, 8, 288}, {0.06, 400, 8, 192},
    };
    for (const auto& r : urp_rows)
        CHECK(false_accept_bits_floored(r.tau, r.m, r.bits).bits == doctest::Approx(r.expected));

    // GRP rows with exact power-of-two alphabets
    CHECK(false_accept_bits(0.01, 300, 16).bits == doctest::Approx(12.0));
    CHECK(false_accept_bits(0.06, 300, 16).bits == doctest::Approx(72.0));
    CHECK(false_accept_bits(0.05, 300, 16).bits == doctest::Approx(60.0));
    CHECK(false_accept_bits_floored(0.01, 300, 7).bits == doctest::Approx(21.0));
    // The published 1200-matrix row prints 2^91; the formula itself gives
    // ceil(0.01 * 1200) * 7 = 84.
    CHECK(false_accept_bits_floored(0.01, 1200, 7).bits == doctest::Approx(84.0));
}

TEST_CASE("birthday table rows reproduce within a bit") {
    const struct { double tau; std::uint32_t m, delta; double expected; } rows[] = {
        {0.11, 600, 128, 252}, {0.08, 600, 250, 207}, {0.05, 600, 250, 130},
        {0.10, 600, 50, 189},  {0.06, 600, 250, 156}, {0.06, 400, 250, 104},
        {0.06, 300, 16, 42},   {0.05, 300, 16, 35},   {0.10, 300, 16, 70},
    };
    for (const auto& r : rows)
        CHECK(std::abs(birthday_bits(r.tau, r.m, r.delta).bits - r.expected) <= 1.0);
}

TEST_CASE("ordering relations between attack complexities") {
    std::mt19937_64 rng(8080);
    std::uniform_real_distribution<double> taus(0.02, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const double tau = taus(rng);
        const std::uint32_t m = 10 + static_cast<std::uint32_t>(rng() % 800);
        const std::uint32_t delta = 2 + static_cast<std::uint32_t>(rng() % 250);
        CHECK(false_accept_bits(tau, m, delta).bits <= brute_force_bits(m, delta).bits + 1e-9);
        if (delta > 2 && tau * m >= 2.0)
            CHECK(birthday_bits(tau, m, delta).bits < false_accept_bits(tau, m, delta).bits);
    }
}

} // TEST_SUITE
