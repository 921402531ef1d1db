#ifndef IOM_TYPES_HPP
#define IOM_TYPES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "iom/errors.hpp"
#include "iom/randomness.hpp"

namespace iom {

// Real-valued biometric feature vector. Scale is irrelevant to both hashing
// realizations, so no normalization is applied or required.
class FeatureVector {
public:
    explicit FeatureVector(std::vector<double> values);

    std::size_t dim() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;

private:
    std::vector<double> values_;
};

// cos of the angle between u and v; the sole geometric quantity the
// collision theory depends on.
double cosine_similarity(const FeatureVector& u, const FeatureVector& v);

enum class Scheme : std::uint8_t { grp, urp };

inline const char* scheme_name(Scheme s) { return s == Scheme::grp ? "grp" : "urp"; }

struct GrpParams {
    std::uint32_t m = 0; // number of Gaussian random matrices
    std::uint32_t q = 0; // projections per matrix
    friend bool operator==(const GrpParams&, const GrpParams&) = default;
};

struct UrpParams {
    std::uint32_t m = 0; // number of hash functions
    std::uint32_t k = 0; // window size
    std::uint32_t p = 0; // Hadamard product order
    friend bool operator==(const UrpParams&, const UrpParams&) = default;
};

using SchemeParams = std::variant<GrpParams, UrpParams>;

// Scheme tag + master seed + parameters: the revocable second factor.
class IomToken {
public:
    IomToken(MasterSeed seed, GrpParams params);
    IomToken(MasterSeed seed, UrpParams params);
    IomToken(MasterSeed seed, const SchemeParams& params);

    Scheme scheme() const noexcept;
    MasterSeed seed() const noexcept { return seed_; }
    const SchemeParams& params() const noexcept { return params_; }
    const GrpParams& grp() const;
    const UrpParams& urp() const;

    std::uint32_t m() const noexcept;
    // Alphabet size of produced codes: q for GRP, k for URP.
    std::uint32_t alphabet() const noexcept;

    // Same scheme and parameters under a freshly derived seed; the
    // revocation operation.
    IomToken reissued(std::uint64_t index) const;

    friend bool operator==(const IomToken&, const IomToken&) = default;

private:
    MasterSeed seed_;
    SchemeParams params_;
};

// Sequence of m max-indices, each in [1, alphabet].
class HashedCode {
public:
    HashedCode(Scheme scheme, std::uint32_t alphabet, std::vector<std::uint32_t> indices);

    Scheme scheme() const noexcept { return scheme_; }
    std::uint32_t alphabet() const noexcept { return alphabet_; }
    std::span<const std::uint32_t> indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }

    friend bool operator==(const HashedCode&, const HashedCode&) = default;

private:
    Scheme scheme_;
    std::uint32_t alphabet_;
    std::vector<std::uint32_t> indices_;
};

struct DatasetRecord {
    std::int64_t user_id = 0;
    std::int64_t sample_id = 0;
    FeatureVector features;

    friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

// users x samples collection with uniform dimensionality and unique
// (user, sample) keys.
class Dataset {
public:
    Dataset() = default;

    void add(DatasetRecord record);

    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<DatasetRecord>& records() const noexcept { return records_; }
    const DatasetRecord& operator[](std::size_t i) const noexcept { return records_[i]; }

    std::size_t user_count() const;
    // Record indices grouped per user, users in first-seen order; samples
    // within a user in ascending sample_id.
    std::vector<std::vector<std::size_t>> by_user() const;

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::vector<DatasetRecord> records_;
    std::size_t dim_ = 0;
};

} // namespace iom

#endif // IOM_TYPES_HPP
