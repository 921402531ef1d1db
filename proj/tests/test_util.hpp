#ifndef IOM_TESTS_TEST_UTIL_HPP
#define IOM_TESTS_TEST_UTIL_HPP

#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "iom/types.hpp"

namespace iom::test {

inline std::vector<double> random_values(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    std::vector<double> v(d);
    for (double& x : v) x = normal(rng);
    return v;
}

// Two dense unit vectors with exact cosine rho (up to rounding), built by
// Gram-Schmidt on independent Gaussian draws.
inline std::pair<FeatureVector, FeatureVector> cosine_pair(std::size_t d, double rho,
                                                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> a = random_values(d, rng);
    std::vector<double> b = random_values(d, rng);
    double na = 0.0;
    for (double x : a) na += x * x;
    na = std::sqrt(na);
    for (double& x : a) x /= na;
    double ab = 0.0;
    for (std::size_t i = 0; i < d; ++i) ab += a[i] * b[i];
    for (std::size_t i = 0; i < d; ++i) b[i] -= ab * a[i];
    double nb = 0.0;
    for (double x : b) nb += x * x;
    nb = std::sqrt(nb);
    for (double& x : b) x /= nb;

    const double s = std::sqrt(1.0 - rho * rho);
    std::vector<double> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = rho * a[i] + s * b[i];
    return {FeatureVector(std::move(a)), FeatureVector(std::move(v))};
}

} // namespace iom::test

#endif // IOM_TESTS_TEST_UTIL_HPP
