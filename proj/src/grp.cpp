#include "iom/grp.hpp"

#include <cmath>

namespace iom {

std::uint32_t argmax_projection(const Matrix& w, std::span<const double> x) {
    std::uint32_t best_index = 1;
    double best = 0.0;
    for (std::size_t j = 0; j < w.cols; ++j) {
        const double* col = w.col(j);
        double dot = 0.0;
        for (std::size_t r = 0; r < w.rows; ++r) dot += col[r] * x[r];
        if (j == 0 || dot > best) {
            best = dot;
            best_index = static_cast<std::uint32_t>(j + 1);
        }
    }
    return best_index;
}

namespace {

void check_grp_input(std::span<const FeatureVector> xs, const IomToken& token) {
    if (token.scheme() != Scheme::grp)
        fail(errc::invalid_token, "grp_hash: token scheme is not GRP");
    for (const FeatureVector& x : xs) {
        if (x.dim() != xs.front().dim())
            fail(errc::invalid_input, "grp_hash: vectors must share one dimension");
    }
}

} // namespace

std::vector<HashedCode> grp_hash_batch(std::span<const FeatureVector> xs, const IomToken& token) {
    if (xs.empty()) return {};
    check_grp_input(xs, token);
    const GrpParams& params = token.grp();
    const std::size_t d = xs.front().dim();

    std::vector<std::vector<std::uint32_t>> indices(xs.size());
    for (auto& v : indices) v.resize(params.m);

    for (std::uint32_t i = 1; i <= params.m; ++i) {
        const Matrix w = gaussian_matrix(ChildKey{token.seed(), i, 1}, d, params.q);
        for (std::size_t n = 0; n < xs.size(); ++n)
            indices[n][i - 1] = argmax_projection(w, xs[n].values());
    }

    std::vector<HashedCode> codes;
    codes.reserve(xs.size());
    for (auto& v : indices) codes.emplace_back(Scheme::grp, params.q, std::move(v));
    return codes;
}

HashedCode grp_hash(const FeatureVector& x, const IomToken& token) {
    return std::move(grp_hash_batch(std::span(&x, 1), token).front());
}

} // namespace iom
