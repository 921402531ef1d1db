#ifndef IOM_RANDOMNESS_HPP
#define IOM_RANDOMNESS_HPP

#include <cstdint>
#include <vector>

#include "iom/errors.hpp"

namespace iom {

// SplitMix64: 64-bit avalanche generator (Steele, Lea, Flood 2014).
// Every random object in the library is a pure function of a seed derived
// through mix64/derive chains, so identical seeds reproduce identical
// matrices, permutations and datasets across runs and platforms.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53 random bits.
    double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), modulo rejection so every value is exactly
    // equally likely.
    std::uint64_t below(std::uint64_t n) noexcept {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % n;
    }

private:
    std::uint64_t state_;
};

// Stateless avalanche of a single word.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Index-addressable child seed: full avalanche between each absorbed word,
// so (base, a, b) triples land on statistically independent streams.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) noexcept {
    return mix64(mix64(mix64(base) ^ a) ^ b);
}

// Domain tags keep unrelated derivation lanes (dataset synthesis, fresh
// evaluation tokens, attack code streams) from aliasing the hash-function
// lanes that ChildKey occupies.
namespace seed_tag {
inline constexpr std::uint64_t dataset_center = 0xA5C1D47E90B3F621ULL;
inline constexpr std::uint64_t dataset_noise = 0x3F8E6B2C5D901A47ULL;
inline constexpr std::uint64_t user_token = 0x7D43A9E15B8C20F6ULL;
inline constexpr std::uint64_t fresh_token = 0xC2E87F5A3190D6B4ULL;
inline constexpr std::uint64_t sample_token = 0x58B0C3F7A62E91DDULL;
inline constexpr std::uint64_t attack_codes = 0x91D6E4A80C72B5F3ULL;
inline constexpr std::uint64_t sweep_rep = 0x6A05F8D2C4B17E39ULL;
} // namespace seed_tag

constexpr std::uint64_t derive_tagged(std::uint64_t base, std::uint64_t tag, std::uint64_t a,
                                      std::uint64_t b) noexcept {
    return derive_seed(mix64(base ^ tag), a, b);
}

// The revocable second factor. Same seed, same everything.
struct MasterSeed {
    std::uint64_t value = 0;
    friend bool operator==(const MasterSeed&, const MasterSeed&) = default;
};

// Addresses one child stream of a token: hash function i (1..m) and
// permutation slot l (1..p; always 1 for GRP).
struct ChildKey {
    MasterSeed master;
    std::uint32_t hash_index = 1;
    std::uint32_t slot_index = 1;

    std::uint64_t stream_seed() const noexcept {
        return derive_seed(master.value, hash_index, slot_index);
    }
};

// Standard normal stream over SplitMix64 via Box-Muller. Chosen over
// ziggurat so that two implementations sharing the seed derivation agree
// bit for bit without sharing lookup tables.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) noexcept : rng_(seed) {}

    double next() noexcept;

private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Column-major d x q matrix; column j is the j-th projection vector.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data; // rows * cols, column-major

    double at(std::size_t r, std::size_t c) const { return data[c * rows + r]; }
    const double* col(std::size_t c) const { return data.data() + c * rows; }
};

// d x q matrix of iid standard normals, deterministic in key.
Matrix gaussian_matrix(const ChildKey& key, std::size_t d, std::size_t q);

// Uniform random permutation of [1..d] (Fisher-Yates over the child
// stream), deterministic in key.
std::vector<std::uint32_t> permutation(const ChildKey& key, std::size_t d);

} // namespace iom

#endif // IOM_RANDOMNESS_HPP
