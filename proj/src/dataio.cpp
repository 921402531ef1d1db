#include "iom/dataio.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace iom {

namespace {

bool is_blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string trimmed(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool parse_int(const std::string& tok, std::int64_t& out) {
    const std::string t = trimmed(tok);
    if (t.empty()) return false;
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(t.c_str(), &end, 10);
    if (errno != 0 || end != t.c_str() + t.size()) return false;
    out = v;
    return true;
}

bool looks_numeric(const std::string& tok) {
    const std::string t = trimmed(tok);
    if (t.empty()) return false;
    char* end = nullptr;
    std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size();
}

} // namespace

// Rounds the decimal text to 4 fractional digits, half away from zero.
// Operating on the digits rather than the parsed double keeps inputs like
// "0.12345" (binary value slightly below the half) rounding up as their
// decimal form demands.
double parse_feature_value(const std::string& token) {
    const std::string t = trimmed(token);
    std::size_t pos = 0;
    bool negative = false;
    if (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) negative = t[pos++] == '-';

    std::string digits;
    int int_len = 0;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
        digits.push_back(t[pos++]);
        ++int_len;
    }
    if (pos < t.size() && t[pos] == '.') {
        ++pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) digits.push_back(t[pos++]);
    }
    if (digits.empty()) fail(errc::format_error, "not a number: '" + token + "'");

    long exponent = 0;
    if (pos < t.size() && (t[pos] == 'e' || t[pos] == 'E')) {
        const std::string etext = t.substr(pos + 1);
        std::int64_t e = 0;
        if (!parse_int(etext, e) || e > 1000 || e < -1000)
            fail(errc::format_error, "bad exponent: '" + token + "'");
        exponent = static_cast<long>(e);
        pos = t.size();
    }
    if (pos != t.size()) fail(errc::format_error, "not a number: '" + token + "'");

    // Decimal point sits after point_pos digits of `digits`.
    const long point_pos = int_len + exponent;
    if (point_pos > 14) fail(errc::format_error, "feature value out of range: '" + token + "'");

    auto digit_at = [&](long idx) -> int {
        if (idx < 0 || idx >= static_cast<long>(digits.size())) return 0;
        return digits[static_cast<std::size_t>(idx)] - '0';
    };

    std::int64_t scaled = 0; // |value| * 10^4, truncated
    for (long idx = 0; idx < point_pos + 4; ++idx) scaled = scaled * 10 + digit_at(idx);
    if (digit_at(point_pos + 4) >= 5) ++scaled;

    const double magnitude = static_cast<double>(scaled) / 10000.0;
    return negative ? -magnitude : magnitude;
}

Dataset load_features(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open feature file: " + path.string());

    Dataset ds;
    std::string line;
    std::size_t line_no = 0;
    std::size_t expected_fields = 0;
    bool first_content_line = true;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line)) continue;

        const std::vector<std::string> fields = split_csv(line);
        if (first_content_line) {
            first_content_line = false;
            if (!looks_numeric(fields[0])) continue; // header
        }

        const std::string where = " (line " + std::to_string(line_no) + ")";
        if (fields.size() < 4)
            fail(errc::format_error, "record needs user, sample and >= 2 values" + where);
        if (expected_fields == 0) {
            expected_fields = fields.size();
        } else if (fields.size() != expected_fields) {
            fail(errc::format_error, "ragged row: expected " + std::to_string(expected_fields) +
                                         " fields, got " + std::to_string(fields.size()) + where);
        }

        std::int64_t user = 0, sample = 0;
        if (!parse_int(fields[0], user)) fail(errc::format_error, "bad user id" + where);
        if (!parse_int(fields[1], sample)) fail(errc::format_error, "bad sample id" + where);

        std::vector<double> values;
        values.reserve(fields.size() - 2);
        for (std::size_t i = 2; i < fields.size(); ++i) {
            try {
                values.push_back(parse_feature_value(fields[i]));
            } catch (const Error& e) {
                fail(e.code(), std::string(e.what()) + where);
            }
        }
        ds.add(DatasetRecord{user, sample, FeatureVector(std::move(values))});
    }

    if (ds.empty()) fail(errc::format_error, "no records in feature file: " + path.string());
    return ds;
}

void save_features(const Dataset& ds, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail(errc::io_error, "cannot write feature file: " + path.string());
    char buffer[32];
    for (const DatasetRecord& rec : ds.records()) {
        out << rec.user_id << ',' << rec.sample_id;
        for (double v : rec.features.values()) {
            std::snprintf(buffer, sizeof buffer, "%.4f", v);
            out << ',' << buffer;
        }
        out << '\n';
    }
    if (!out) fail(errc::io_error, "failed writing feature file: " + path.string());
}

Dataset synth_dataset(const SyntheticSpec& spec) {
    if (spec.users < 1 || spec.samples_per_user < 1)
        fail(errc::invalid_parameter, "synth_dataset: users and samples must be >= 1");
    if (spec.dim < 2) fail(errc::invalid_parameter, "synth_dataset: dim must be >= 2");
    if (!(spec.within_noise >= 0.0))
        fail(errc::invalid_parameter, "synth_dataset: within_noise must be >= 0");

    Dataset ds;
    std::vector<double> center(spec.dim), values(spec.dim);
    for (std::uint32_t u = 1; u <= spec.users; ++u) {
        GaussianStream center_stream(derive_tagged(spec.seed.value, seed_tag::dataset_center, u, 0));
        for (double& c : center) c = center_stream.next();
        for (std::uint32_t s = 1; s <= spec.samples_per_user; ++s) {
            GaussianStream noise(derive_tagged(spec.seed.value, seed_tag::dataset_noise, u, s));
            for (std::uint32_t i = 0; i < spec.dim; ++i)
                values[i] = center[i] + spec.within_noise * noise.next();
            ds.add(DatasetRecord{u, s, FeatureVector(values)});
        }
    }
    return ds;
}

std::string template_to_json(const TemplateRecord& rec) {
    nlohmann::json j;
    j["version"] = rec.version;
    j["scheme"] = scheme_name(rec.token.scheme());
    j["seed"] = rec.token.seed().value;
    j["dim"] = rec.dim;
    if (rec.token.scheme() == Scheme::grp) {
        j["m"] = rec.token.grp().m;
        j["q"] = rec.token.grp().q;
    } else {
        j["m"] = rec.token.urp().m;
        j["k"] = rec.token.urp().k;
        j["p"] = rec.token.urp().p;
    }
    if (rec.user_id) j["user"] = *rec.user_id;
    if (rec.sample_id) j["sample"] = *rec.sample_id;
    j["indices"] = std::vector<std::uint32_t>(rec.code.indices().begin(), rec.code.indices().end());
    return j.dump(2) + "\n";
}

namespace {

const nlohmann::json& require_field(const nlohmann::json& j, const char* name) {
    if (!j.contains(name))
        fail(errc::corrupt_template, std::string("template missing field '") + name + "'");
    return j.at(name);
}

void forbid_field(const nlohmann::json& j, const char* name, const char* scheme) {
    if (j.contains(name))
        fail(errc::corrupt_template,
             std::string(scheme) + " template carries foreign parameter '" + name + "'");
}

} // namespace

TemplateRecord template_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::corrupt_template, std::string("template is not valid JSON: ") + e.what());
    }

    try {
        const std::uint32_t version = require_field(j, "version").get<std::uint32_t>();
        if (version != kTemplateVersion)
            fail(errc::version_error, "unsupported template version " + std::to_string(version));

        const std::string scheme = require_field(j, "scheme").get<std::string>();
        const MasterSeed seed{require_field(j, "seed").get<std::uint64_t>()};
        const std::uint32_t m = require_field(j, "m").get<std::uint32_t>();
        const std::uint32_t dim = require_field(j, "dim").get<std::uint32_t>();

        SchemeParams params;
        if (scheme == "grp") {
            forbid_field(j, "k", "grp");
            forbid_field(j, "p", "grp");
            params = GrpParams{m, require_field(j, "q").get<std::uint32_t>()};
        } else if (scheme == "urp") {
            forbid_field(j, "q", "urp");
            params = UrpParams{m, require_field(j, "k").get<std::uint32_t>(),
                               require_field(j, "p").get<std::uint32_t>()};
        } else {
            fail(errc::corrupt_template, "unknown scheme '" + scheme + "'");
        }

        IomToken token(seed, params);
        auto indices = require_field(j, "indices").get<std::vector<std::uint32_t>>();
        if (indices.size() != m)
            fail(errc::corrupt_template, "index count disagrees with m");
        for (std::uint32_t t : indices) {
            if (t < 1 || t > token.alphabet())
                fail(errc::corrupt_template, "index outside [1, alphabet]");
        }

        TemplateRecord rec{kTemplateVersion, token, dim,
                           HashedCode(token.scheme(), token.alphabet(), std::move(indices)),
                           std::nullopt, std::nullopt};
        if (j.contains("user")) rec.user_id = j.at("user").get<std::int64_t>();
        if (j.contains("sample")) rec.sample_id = j.at("sample").get<std::int64_t>();
        return rec;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::corrupt_template, std::string("template field has wrong type: ") + e.what());
    }
}

void save_template(const TemplateRecord& rec, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_error, "cannot write template: " + path.string());
    out << template_to_json(rec);
    if (!out) fail(errc::io_error, "failed writing template: " + path.string());
}

TemplateRecord load_template(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_error, "cannot open template: " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return template_from_json(buffer.str());
}

void write_histogram_csv(const std::filesystem::path& path, std::span<const double> scores,
                         std::uint32_t bins) {
    if (bins < 1) fail(errc::invalid_parameter, "histogram needs >= 1 bin");
    std::ofstream out(path);
    if (!out) fail(errc::io_error, "cannot write histogram: " + path.string());
    std::vector<std::size_t> counts(bins, 0);
    for (double s : scores) {
        auto bin = static_cast<std::size_t>(s * bins);
        if (bin >= bins) bin = bins - 1; // s == 1.0
        ++counts[bin];
    }
    out << "bin_low,bin_high,count\n";
    for (std::uint32_t b = 0; b < bins; ++b) {
        out << static_cast<double>(b) / bins << ',' << static_cast<double>(b + 1) / bins << ','
            << counts[b] << '\n';
    }
}

void write_roc_csv(const std::filesystem::path& path, std::span<const double> genuine,
                   std::span<const double> imposter) {
    std::ofstream out(path);
    if (!out) fail(errc::io_error, "cannot write ROC: " + path.string());
    std::vector<double> gen(genuine.begin(), genuine.end());
    std::vector<double> imp(imposter.begin(), imposter.end());
    std::sort(gen.begin(), gen.end());
    std::sort(imp.begin(), imp.end());
    std::vector<double> thresholds;
    thresholds.reserve(gen.size() + imp.size());
    std::merge(gen.begin(), gen.end(), imp.begin(), imp.end(), std::back_inserter(thresholds));
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    out << "threshold,far,frr\n";
    for (double t : thresholds) {
        const auto far_count = imp.end() - std::lower_bound(imp.begin(), imp.end(), t);
        const auto frr_count = std::lower_bound(gen.begin(), gen.end(), t) - gen.begin();
        out << t << ',' << static_cast<double>(far_count) / imp.size() << ','
            << static_cast<double>(frr_count) / gen.size() << '\n';
    }
}

} // namespace iom
