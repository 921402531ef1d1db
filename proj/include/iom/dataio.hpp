#ifndef IOM_DATAIO_HPP
#define IOM_DATAIO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "iom/types.hpp"

namespace iom {

inline constexpr std::uint32_t kTemplateVersion = 1;

// Synthetic stand-in for a real feature corpus: per user a Gaussian latent
// center, samples perturbed by within_noise. Expected within-user cosine is
// 1/(1 + within_noise^2), cross-user cosine is near 0.
struct SyntheticSpec {
    std::uint32_t users = 1;
    std::uint32_t samples_per_user = 1;
    std::uint32_t dim = 2;
    double within_noise = 0.0;
    MasterSeed seed;
};

Dataset synth_dataset(const SyntheticSpec& spec);

// Feature file: one record per line, `user_id,sample_id,v1,...,vd`,
// optional header (detected by a non-numeric first field on line 1).
// Values are rounded to 4 decimal digits, half away from zero, operating on
// the decimal text so "0.12345" stores as 0.1235.
Dataset load_features(const std::filesystem::path& path);

// Writes the same format back with 4-decimal values, so load(save(ds))
// round-trips datasets whose values already sit on the 1e-4 grid.
void save_features(const Dataset& ds, const std::filesystem::path& path);

// Protected template at rest: token (seed + parameters), enrollment
// dimension and hashed code in one JSON object. The token is stored with
// the code because it is a revocation handle, not a secret.
struct TemplateRecord {
    std::uint32_t version = kTemplateVersion;
    IomToken token;
    std::uint32_t dim = 0;
    HashedCode code;
    std::optional<std::int64_t> user_id;
    std::optional<std::int64_t> sample_id;

    friend bool operator==(const TemplateRecord&, const TemplateRecord&) = default;
};

void save_template(const TemplateRecord& rec, const std::filesystem::path& path);
TemplateRecord load_template(const std::filesystem::path& path);

std::string template_to_json(const TemplateRecord& rec);
TemplateRecord template_from_json(const std::string& text);

// `bin_low,bin_high,count` rows over [0, 1].
void write_histogram_csv(const std::filesystem::path& path, std::span<const double> scores,
                         std::uint32_t bins);

// `threshold,far,frr` rows over the union of observed scores.
void write_roc_csv(const std::filesystem::path& path, std::span<const double> genuine,
                   std::span<const double> imposter);

// Decimal-text parsing helper behind load_features; exposed for tests.
double parse_feature_value(const std::string& token);

} // namespace iom

#endif // IOM_DATAIO_HPP
