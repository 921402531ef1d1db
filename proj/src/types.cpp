#include "iom/types.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace iom {

FeatureVector::FeatureVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) fail(errc::invalid_input, "feature vector needs dimension >= 2");
    for (double v : values_) {
        if (!std::isfinite(v)) fail(errc::invalid_input, "feature vector entries must be finite");
    }
}

double cosine_similarity(const FeatureVector& u, const FeatureVector& v) {
    if (u.dim() != v.dim())
        fail(errc::invalid_input, "cosine_similarity: dimension mismatch");
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) {
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    if (nu == 0.0 || nv == 0.0)
        fail(errc::undefined_similarity, "cosine_similarity: zero vector");
    const double c = dot / (std::sqrt(nu) * std::sqrt(nv));
    return std::clamp(c, -1.0, 1.0);
}

namespace {

void check_grp(const GrpParams& p) {
    if (p.m < 1) fail(errc::invalid_parameter, "GRP: m must be >= 1");
    if (p.q < 2) fail(errc::invalid_parameter, "GRP: q must be >= 2");
}

void check_urp(const UrpParams& p) {
    if (p.m < 1) fail(errc::invalid_parameter, "URP: m must be >= 1");
    if (p.k < 2) fail(errc::invalid_parameter, "URP: window size k must be > 1");
    if (p.p < 1) fail(errc::invalid_parameter, "URP: Hadamard order p must be >= 1");
}

} // namespace

IomToken::IomToken(MasterSeed seed, GrpParams params) : seed_(seed), params_(params) {
    check_grp(params);
}

IomToken::IomToken(MasterSeed seed, UrpParams params) : seed_(seed), params_(params) {
    check_urp(params);
}

IomToken::IomToken(MasterSeed seed, const SchemeParams& params) : seed_(seed), params_(params) {
    if (const auto* g = std::get_if<GrpParams>(&params_)) check_grp(*g);
    else check_urp(std::get<UrpParams>(params_));
}

Scheme IomToken::scheme() const noexcept {
    return std::holds_alternative<GrpParams>(params_) ? Scheme::grp : Scheme::urp;
}

const GrpParams& IomToken::grp() const {
    if (scheme() != Scheme::grp) fail(errc::invalid_token, "token is not GRP");
    return std::get<GrpParams>(params_);
}

const UrpParams& IomToken::urp() const {
    if (scheme() != Scheme::urp) fail(errc::invalid_token, "token is not URP");
    return std::get<UrpParams>(params_);
}

std::uint32_t IomToken::m() const noexcept {
    return scheme() == Scheme::grp ? std::get<GrpParams>(params_).m : std::get<UrpParams>(params_).m;
}

std::uint32_t IomToken::alphabet() const noexcept {
    return scheme() == Scheme::grp ? std::get<GrpParams>(params_).q : std::get<UrpParams>(params_).k;
}

IomToken IomToken::reissued(std::uint64_t index) const {
    MasterSeed fresh{derive_tagged(seed_.value, seed_tag::fresh_token, index, 0)};
    return IomToken(fresh, params_);
}

HashedCode::HashedCode(Scheme scheme, std::uint32_t alphabet, std::vector<std::uint32_t> indices)
    : scheme_(scheme), alphabet_(alphabet), indices_(std::move(indices)) {
    if (alphabet_ < 2) fail(errc::invalid_parameter, "hashed code alphabet must be >= 2");
    if (indices_.empty()) fail(errc::invalid_input, "hashed code must not be empty");
    for (std::uint32_t t : indices_) {
        if (t < 1 || t > alphabet_)
            fail(errc::invalid_input, "hashed code index outside [1, alphabet]");
    }
}

void Dataset::add(DatasetRecord record) {
    if (records_.empty()) {
        dim_ = record.features.dim();
    } else if (record.features.dim() != dim_) {
        fail(errc::invalid_input, "dataset records must share one dimension");
    }
    for (const DatasetRecord& r : records_) {
        if (r.user_id == record.user_id && r.sample_id == record.sample_id)
            fail(errc::duplicate_key, "duplicate (user, sample) pair in dataset");
    }
    records_.push_back(std::move(record));
}

std::size_t Dataset::user_count() const {
    std::set<std::int64_t> users;
    for (const DatasetRecord& r : records_) users.insert(r.user_id);
    return users.size();
}

std::vector<std::vector<std::size_t>> Dataset::by_user() const {
    std::vector<std::int64_t> order;
    std::map<std::int64_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const std::int64_t u = records_[i].user_id;
        if (!groups.count(u)) order.push_back(u);
        groups[u].push_back(i);
    }
    std::vector<std::vector<std::size_t>> out;
    out.reserve(order.size());
    for (std::int64_t u : order) {
        auto& idx = groups[u];
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return records_[a].sample_id < records_[b].sample_id;
        });
        out.push_back(std::move(idx));
    }
    return out;
}

} // namespace iom
