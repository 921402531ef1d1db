#include "iom/urp.hpp"

#include "iom/grp.hpp"

namespace iom {

std::uint32_t argmax_window_product(std::span<const std::vector<std::uint32_t>> perms,
                                    std::span<const double> x, std::uint32_t k) {
    std::uint32_t best_index = 1;
    double best = 0.0;
    for (std::uint32_t j = 0; j < k; ++j) {
        double prod = 1.0;
        for (const auto& perm : perms) prod *= x[perm[j] - 1];
        if (j == 0 || prod > best) {
            best = prod;
            best_index = j + 1;
        }
    }
    return best_index;
}

namespace {

void check_urp_input(std::span<const FeatureVector> xs, const IomToken& token) {
    if (token.scheme() != Scheme::urp)
        fail(errc::invalid_token, "urp_hash: token scheme is not URP");
    const std::size_t d = xs.front().dim();
    for (const FeatureVector& x : xs) {
        if (x.dim() != d) fail(errc::invalid_input, "urp_hash: vectors must share one dimension");
    }
    if (token.urp().k > d)
        fail(errc::invalid_parameter, "urp_hash: window size k exceeds feature dimension");
}

} // namespace

std::vector<HashedCode> urp_hash_batch(std::span<const FeatureVector> xs, const IomToken& token) {
    if (xs.empty()) return {};
    check_urp_input(xs, token);
    const UrpParams& params = token.urp();
    const std::size_t d = xs.front().dim();

    std::vector<std::vector<std::uint32_t>> indices(xs.size());
    for (auto& v : indices) v.resize(params.m);

    std::vector<std::vector<std::uint32_t>> perms(params.p);
    for (std::uint32_t i = 1; i <= params.m; ++i) {
        for (std::uint32_t l = 1; l <= params.p; ++l)
            perms[l - 1] = permutation(ChildKey{token.seed(), i, l}, d);
        for (std::size_t n = 0; n < xs.size(); ++n)
            indices[n][i - 1] = argmax_window_product(perms, xs[n].values(), params.k);
    }

    std::vector<HashedCode> codes;
    codes.reserve(xs.size());
    for (auto& v : indices) codes.emplace_back(Scheme::urp, params.k, std::move(v));
    return codes;
}

HashedCode urp_hash(const FeatureVector& x, const IomToken& token) {
    return std::move(urp_hash_batch(std::span(&x, 1), token).front());
}

HashedCode hash_with_token(const FeatureVector& x, const IomToken& token) {
    return token.scheme() == Scheme::grp ? grp_hash(x, token) : urp_hash(x, token);
}

std::vector<HashedCode> hash_batch(std::span<const FeatureVector> xs, const IomToken& token) {
    return token.scheme() == Scheme::grp ? grp_hash_batch(xs, token) : urp_hash_batch(xs, token);
}

} // namespace iom
