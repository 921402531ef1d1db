#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "iom/randomness.hpp"

using namespace iom;

TEST_SUITE("randomness") {

TEST_CASE("gaussian matrix is deterministic in its key") {
    const ChildKey key{MasterSeed{0xABCDEF0123456789ULL}, 1, 1};
    const Matrix a = gaussian_matrix(key, 2, 2);
    const Matrix b = gaussian_matrix(key, 2, 2);
    REQUIRE(a.data.size() == 4);
    CHECK(a.data == b.data); // bit-identical
}

TEST_CASE("gaussian matrix entries have standard-normal moments") {
    const ChildKey key{MasterSeed{7}, 3, 1};
    const Matrix w = gaussian_matrix(key, 64, 16);
    double mean = 0.0;
    for (double x : w.data) mean += x;
    mean /= static_cast<double>(w.data.size());
    double var = 0.0;
    for (double x : w.data) var += (x - mean) * (x - mean);
    var /= static_cast<double>(w.data.size() - 1);
    CHECK(std::abs(mean) < 0.15);
    CHECK(std::abs(var - 1.0) < 0.2);
}

TEST_CASE("matrices for distinct hash indices are uncorrelated") {
    const MasterSeed master{42};
    const Matrix a = gaussian_matrix(ChildKey{master, 1, 1}, 64, 16);
    const Matrix b = gaussian_matrix(ChildKey{master, 2, 1}, 64, 16);
    const std::size_t n = a.data.size();
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a.data[i];
        mb += b.data[i];
    }
    ma /= n;
    mb /= n;
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cov += (a.data[i] - ma) * (b.data[i] - mb);
        va += (a.data[i] - ma) * (a.data[i] - ma);
        vb += (b.data[i] - mb) * (b.data[i] - mb);
    }
    CHECK(std::abs(cov / std::sqrt(va * vb)) < 0.1);
}

TEST_CASE("gaussian matrix parameter validation") {
    const ChildKey key{MasterSeed{1}, 1, 1};
    CHECK_THROWS_AS(gaussian_matrix(key, 0, 4), Error);
    CHECK_THROWS_AS(gaussian_matrix(key, 4, 1), Error);
}

TEST_CASE("permutation of a single element") {
    const auto p = permutation(ChildKey{MasterSeed{5}, 1, 1}, 1);
    REQUIRE(p.size() == 1);
    CHECK(p[0] == 1);
}

TEST_CASE("permutations are bijections on [1..d]") {
    for (std::uint32_t i = 1; i <= 20; ++i) {
        const auto p = permutation(ChildKey{MasterSeed{99}, i, 1}, 37);
        std::set<std::uint32_t> seen(p.begin(), p.end());
        CHECK(seen.size() == 37);
        CHECK(*seen.begin() == 1);
        CHECK(*seen.rbegin() == 37);
    }
}

TEST_CASE("permutations at d=3 are uniform over the 6 orders") {
    std::map<std::vector<std::uint32_t>, int> counts;
    const int draws = 6000;
    for (int i = 0; i < draws; ++i)
        counts[permutation(ChildKey{MasterSeed{2024}, static_cast<std::uint32_t>(i + 1), 1}, 3)]++;
    REQUIRE(counts.size() == 6);
    for (const auto& [perm, count] : counts)
        CHECK(std::abs(count / static_cast<double>(draws) - 1.0 / 6.0) < 0.02);
}

TEST_CASE("permutation parameter validation") {
    CHECK_THROWS_AS(permutation(ChildKey{MasterSeed{1}, 1, 1}, 0), Error);
}

TEST_CASE("child streams never alias over an index grid") {
    const MasterSeed master{0xFEED5EED};
    std::set<std::uint64_t> seeds;
    std::set<std::uint64_t> first_outputs;
    for (std::uint32_t i = 1; i <= 50; ++i) {
        for (std::uint32_t l = 1; l <= 10; ++l) {
            const ChildKey key{master, i, l};
            seeds.insert(key.stream_seed());
            first_outputs.insert(SplitMix64(key.stream_seed()).next());
        }
    }
    CHECK(seeds.size() == 500);
    CHECK(first_outputs.size() == 500);
}

TEST_CASE("repeated permutation calls are identical") {
    for (std::uint64_t s : {1ULL, 77ULL, 0xDEADBEEFULL}) {
        const ChildKey key{MasterSeed{s}, 4, 2};
        CHECK(permutation(key, 25) == permutation(key, 25));
    }
}

} // TEST_SUITE
