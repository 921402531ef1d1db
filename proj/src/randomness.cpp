#include "iom/randomness.hpp"

#include <cmath>
#include <numbers>

namespace iom {

double GaussianStream::next() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0, 1] keeps log finite; u2 in [0, 1).
    const double u1 = static_cast<double>((rng_.next() >> 11) + 1) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng_.next() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Matrix gaussian_matrix(const ChildKey& key, std::size_t d, std::size_t q) {
    if (d < 1) fail(errc::invalid_parameter, "gaussian_matrix: dimension must be >= 1");
    if (q < 2) fail(errc::invalid_parameter, "gaussian_matrix: projection count must be >= 2");
    Matrix w;
    w.rows = d;
    w.cols = q;
    w.data.resize(d * q);
    GaussianStream stream(key.stream_seed());
    for (double& entry : w.data) entry = stream.next();
    return w;
}

std::vector<std::uint32_t> permutation(const ChildKey& key, std::size_t d) {
    if (d < 1) fail(errc::invalid_parameter, "permutation: dimension must be >= 1");
    std::vector<std::uint32_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = static_cast<std::uint32_t>(i + 1);
    SplitMix64 rng(key.stream_seed());
    for (std::size_t i = d - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

} // namespace iom
