#ifndef IOM_GRP_HPP
#define IOM_GRP_HPP

#include <span>
#include <vector>

#include "iom/types.hpp"

namespace iom {

// Index of the largest projection <w_j, x> over the columns of w, 1-based;
// ties go to the smallest index. The single-hash kernel behind GRP.
std::uint32_t argmax_projection(const Matrix& w, std::span<const double> x);

// Gaussian Random Projection IoM hashing: m independent d x q Gaussian
// matrices drawn from the token seed; entry i is the argmax projection
// index under matrix i.
HashedCode grp_hash(const FeatureVector& x, const IomToken& token);

// Hash many vectors under one token. Each matrix is generated once and
// applied to every vector, so memory stays at one d x q matrix.
std::vector<HashedCode> grp_hash_batch(std::span<const FeatureVector> xs, const IomToken& token);

} // namespace iom

#endif // IOM_GRP_HPP
