#ifndef IOM_URP_HPP
#define IOM_URP_HPP

#include <span>
#include <vector>

#include "iom/types.hpp"

namespace iom {

// Index (1-based) of the largest entry of the p-order Hadamard product of
// the permuted copies of x, over the first k positions only; ties go to
// the smallest index. perms holds p full permutations of [1..x.size()].
std::uint32_t argmax_window_product(std::span<const std::vector<std::uint32_t>> perms,
                                    std::span<const double> x, std::uint32_t k);

// Uniformly Random Permutation IoM hashing: each of the m hash functions
// multiplies p independently permuted copies of x element-wise and records
// the argmax over the leading k-size window.
HashedCode urp_hash(const FeatureVector& x, const IomToken& token);

std::vector<HashedCode> urp_hash_batch(std::span<const FeatureVector> xs, const IomToken& token);

// Scheme dispatch used by evaluation protocols and the CLI.
HashedCode hash_with_token(const FeatureVector& x, const IomToken& token);
std::vector<HashedCode> hash_batch(std::span<const FeatureVector> xs, const IomToken& token);

} // namespace iom

#endif // IOM_URP_HPP
