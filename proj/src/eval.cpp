#include "iom/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>

#include "iom/urp.hpp"

namespace iom {

const char* score_label_name(ScoreLabel label) {
    switch (label) {
        case ScoreLabel::genuine: return "genuine";
        case ScoreLabel::imposter: return "imposter";
        case ScoreLabel::pseudo_genuine: return "pseudo_genuine";
        case ScoreLabel::pseudo_imposter: return "pseudo_imposter";
        case ScoreLabel::brute_force_attack: return "brute_force_attack";
    }
    return "unknown";
}

ScoreSet::ScoreSet(ScoreLabel label, std::vector<double> scores)
    : label_(label), scores_(std::move(scores)) {
    if (scores_.empty()) fail(errc::invalid_input, "score set must not be empty");
    for (double s : scores_) {
        if (!(s >= 0.0 && s <= 1.0)) fail(errc::invalid_input, "scores must lie in [0, 1]");
    }
}

double ScoreSet::mean() const noexcept {
    return std::accumulate(scores_.begin(), scores_.end(), 0.0) / static_cast<double>(scores_.size());
}

namespace {

std::vector<FeatureVector> all_features(const Dataset& ds) {
    std::vector<FeatureVector> xs;
    xs.reserve(ds.size());
    for (const DatasetRecord& r : ds.records()) xs.push_back(r.features);
    return xs;
}

void require_pairs_per_user(const Dataset& ds) {
    for (const auto& group : ds.by_user()) {
        if (group.size() < 2)
            fail(errc::protocol_infeasible, "protocol needs >= 2 samples per user");
    }
}

} // namespace

FvcScores fvc_scores(const Dataset& ds, TokenPolicy policy, const IomToken& token) {
    const auto groups = ds.by_user();
    if (groups.size() < 2) fail(errc::protocol_infeasible, "FVC protocol needs >= 2 users");
    require_pairs_per_user(ds);

    // Hash everything first; each sample is hashed exactly once.
    std::vector<HashedCode> codes;
    if (policy == TokenPolicy::shared) {
        codes = hash_batch(all_features(ds), token);
    } else {
        codes.reserve(ds.size());
        std::vector<std::optional<HashedCode>> slots(ds.size());
        for (std::size_t u = 0; u < groups.size(); ++u) {
            IomToken user_token(
                MasterSeed{derive_tagged(token.seed().value, seed_tag::user_token, u + 1, 0)},
                token.params());
            std::vector<FeatureVector> xs;
            xs.reserve(groups[u].size());
            for (std::size_t idx : groups[u]) xs.push_back(ds[idx].features);
            auto hashed = hash_batch(xs, user_token);
            for (std::size_t i = 0; i < groups[u].size(); ++i)
                slots[groups[u][i]] = std::move(hashed[i]);
        }
        for (auto& slot : slots) codes.push_back(std::move(*slot));
    }

    std::vector<double> genuine;
    for (const auto& group : groups) {
        for (std::size_t a = 0; a < group.size(); ++a)
            for (std::size_t b = a + 1; b < group.size(); ++b)
                genuine.push_back(collision_score(codes[group[a]], codes[group[b]]).score);
    }

    std::vector<double> imposter;
    for (std::size_t u = 0; u < groups.size(); ++u) {
        for (std::size_t v = u + 1; v < groups.size(); ++v)
            imposter.push_back(collision_score(codes[groups[u][0]], codes[groups[v][0]]).score);
    }

    return FvcScores{ScoreSet(ScoreLabel::genuine, std::move(genuine)),
                     ScoreSet(ScoreLabel::imposter, std::move(imposter))};
}

EerResult eer(const ScoreSet& genuine, const ScoreSet& imposter) {
    std::vector<double> gen(genuine.scores().begin(), genuine.scores().end());
    std::vector<double> imp(imposter.scores().begin(), imposter.scores().end());
    std::sort(gen.begin(), gen.end());
    std::sort(imp.begin(), imp.end());

    std::vector<double> thresholds;
    thresholds.reserve(gen.size() + imp.size());
    std::merge(gen.begin(), gen.end(), imp.begin(), imp.end(), std::back_inserter(thresholds));
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    EerResult best;
    double best_gap = 2.0;
    for (double t : thresholds) {
        const double far =
            static_cast<double>(imp.end() - std::lower_bound(imp.begin(), imp.end(), t)) /
            static_cast<double>(imp.size());
        const double frr =
            static_cast<double>(std::lower_bound(gen.begin(), gen.end(), t) - gen.begin()) /
            static_cast<double>(gen.size());
        const double gap = std::abs(far - frr);
        if (gap < best_gap) { // strict: ties keep the smaller threshold
            best_gap = gap;
            best = EerResult{0.5 * (far + frr), t};
        }
    }
    return best;
}

std::vector<SweepPoint> parameter_sweep(const Dataset& ds, std::span<const SchemeParams> grid,
                                        MasterSeed seed, std::uint32_t repetitions) {
    if (grid.empty()) fail(errc::invalid_parameter, "parameter_sweep: empty grid");
    if (repetitions < 1) fail(errc::invalid_parameter, "parameter_sweep: repetitions must be >= 1");

    std::vector<SweepPoint> out;
    out.reserve(grid.size());
    for (const SchemeParams& params : grid) {
        SweepPoint point;
        point.params = params;
        for (std::uint32_t r = 1; r <= repetitions; ++r) {
            IomToken token(MasterSeed{derive_tagged(seed.value, seed_tag::sweep_rep, r, 0)}, params);
            const FvcScores scores = fvc_scores(ds, TokenPolicy::shared, token);
            point.eers.push_back(eer(scores.genuine, scores.imposter).eer);
        }
        point.mean_eer = std::accumulate(point.eers.begin(), point.eers.end(), 0.0) /
                         static_cast<double>(point.eers.size());
        out.push_back(std::move(point));
    }
    return out;
}

ScoreSet pseudo_imposter_scores(const Dataset& ds, std::uint32_t n_tokens,
                                const IomToken& reference) {
    if (ds.empty()) fail(errc::protocol_infeasible, "pseudo_imposter_scores: empty dataset");
    if (n_tokens < 2) fail(errc::invalid_parameter, "pseudo_imposter_scores: need >= 2 tokens");

    const auto xs = all_features(ds);
    const auto reference_codes = hash_batch(xs, reference);

    std::vector<double> scores;
    scores.reserve(static_cast<std::size_t>(n_tokens) * ds.size());
    for (std::uint32_t j = 1; j <= n_tokens; ++j) {
        const auto fresh_codes = hash_batch(xs, reference.reissued(j));
        for (std::size_t s = 0; s < xs.size(); ++s)
            scores.push_back(collision_score(reference_codes[s], fresh_codes[s]).score);
    }
    return ScoreSet(ScoreLabel::pseudo_imposter, std::move(scores));
}

ScoreSet pseudo_genuine_scores(const Dataset& ds, const IomToken& base) {
    require_pairs_per_user(ds);

    // One independent token per sample.
    std::vector<HashedCode> codes;
    codes.reserve(ds.size());
    for (std::size_t s = 0; s < ds.size(); ++s) {
        IomToken sample_token(
            MasterSeed{derive_tagged(base.seed().value, seed_tag::sample_token, s + 1, 0)},
            base.params());
        codes.push_back(hash_with_token(ds[s].features, sample_token));
    }

    std::vector<double> scores;
    for (const auto& group : ds.by_user()) {
        for (std::size_t a = 0; a < group.size(); ++a)
            for (std::size_t b = a + 1; b < group.size(); ++b)
                scores.push_back(collision_score(codes[group[a]], codes[group[b]]).score);
    }
    return ScoreSet(ScoreLabel::pseudo_genuine, std::move(scores));
}

ScoreSet brute_force_attack_scores(const Dataset& ds, std::uint32_t n_random_codes,
                                   const IomToken& token, MasterSeed attack_seed) {
    if (ds.empty()) fail(errc::protocol_infeasible, "brute_force_attack_scores: empty dataset");
    if (n_random_codes < 1)
        fail(errc::invalid_parameter, "brute_force_attack_scores: need >= 1 random code");

    const auto enrolled = hash_batch(all_features(ds), token);
    const std::uint32_t m = token.m();
    const std::uint32_t delta = token.alphabet();

    SplitMix64 rng(derive_tagged(attack_seed.value, seed_tag::attack_codes, 0, 0));
    std::vector<double> scores;
    scores.reserve(enrolled.size() * n_random_codes);
    std::vector<std::uint32_t> guess(m);
    for (const HashedCode& code : enrolled) {
        for (std::uint32_t c = 0; c < n_random_codes; ++c) {
            for (std::uint32_t& g : guess) g = static_cast<std::uint32_t>(rng.below(delta)) + 1;
            scores.push_back(
                collision_score(code, HashedCode(token.scheme(), delta, guess)).score);
        }
    }
    return ScoreSet(ScoreLabel::brute_force_attack, std::move(scores));
}

namespace {

// Multiset cancellation: remove common elements from both sides; a
// constraint survives when each residue is a power of a single coordinate,
// a^n > b^n, which under the all-positive assumption orders a above b.
bool cancel_to_pair(std::vector<std::uint32_t> winner, std::vector<std::uint32_t> loser,
                    ArmConstraint& out) {
    for (std::uint32_t& w : winner) {
        auto hit = std::find(loser.begin(), loser.end(), w);
        if (hit != loser.end()) {
            *hit = 0; // consumed
            w = 0;
        }
    }
    std::erase(winner, 0u);
    std::erase(loser, 0u);
    if (winner.empty() || loser.empty()) return false;
    const bool single_w = std::all_of(winner.begin(), winner.end(),
                                      [&](std::uint32_t v) { return v == winner.front(); });
    const bool single_l = std::all_of(loser.begin(), loser.end(),
                                      [&](std::uint32_t v) { return v == loser.front(); });
    if (!single_w || !single_l) return false;
    out = ArmConstraint{winner.front(), loser.front()};
    return true;
}

} // namespace

ArmReport arm_order_attack(std::uint32_t dim,
                           std::span<const std::pair<HashedCode, IomToken>> codes) {
    if (codes.empty()) fail(errc::invalid_input, "arm_order_attack: no codes supplied");
    if (dim < 2) fail(errc::invalid_parameter, "arm_order_attack: dim must be >= 2");
    for (const auto& [code, token] : codes) {
        if (code.scheme() == Scheme::grp || token.scheme() == Scheme::grp)
            fail(errc::unsupported_attack,
                 "arm_order_attack: GRP codes do not decompose into order inequalities");
        if (code.size() != token.m() || code.alphabet() != token.alphabet())
            fail(errc::invalid_input, "arm_order_attack: code does not match its token");
        if (token.urp().k > dim)
            fail(errc::invalid_parameter, "arm_order_attack: window exceeds dimension");
    }

    ArmReport report;
    std::set<ArmConstraint> constraints;

    for (const auto& [code, token] : codes) {
        const UrpParams& params = token.urp();
        std::vector<std::vector<std::uint32_t>> perms(params.p);
        for (std::uint32_t i = 1; i <= params.m; ++i) {
            for (std::uint32_t l = 1; l <= params.p; ++l)
                perms[l - 1] = permutation(ChildKey{token.seed(), i, l}, dim);

            const std::uint32_t winner_pos = code.indices()[i - 1];
            std::vector<std::uint32_t> winner(params.p);
            for (std::uint32_t l = 0; l < params.p; ++l) winner[l] = perms[l][winner_pos - 1];

            std::vector<std::uint32_t> loser(params.p);
            for (std::uint32_t j = 1; j <= params.k; ++j) {
                if (j == winner_pos) continue;
                for (std::uint32_t l = 0; l < params.p; ++l) loser[l] = perms[l][j - 1];
                ++report.inequality_count;
                ArmConstraint c;
                if (cancel_to_pair(winner, loser, c)) constraints.insert(c);
            }
        }
    }

    report.constraints.assign(constraints.begin(), constraints.end());

    // Direct conflicts, then transitive closure for cycles and totality.
    std::vector<std::vector<bool>> gt(dim + 1, std::vector<bool>(dim + 1, false));
    for (const ArmConstraint& c : constraints) gt[c.greater][c.lesser] = true;

    auto name = [](std::uint32_t i) { return "x" + std::to_string(i); };
    for (std::uint32_t a = 1; a <= dim; ++a) {
        for (std::uint32_t b = a + 1; b <= dim; ++b) {
            if (gt[a][b] && gt[b][a])
                report.witnesses.push_back(name(a) + " > " + name(b) + " conflicts with " +
                                           name(b) + " > " + name(a));
        }
    }

    auto closure = gt;
    for (std::uint32_t k = 1; k <= dim; ++k)
        for (std::uint32_t i = 1; i <= dim; ++i) {
            if (!closure[i][k]) continue;
            for (std::uint32_t j = 1; j <= dim; ++j)
                if (closure[k][j]) closure[i][j] = true;
        }

    if (report.witnesses.empty()) {
        for (std::uint32_t v = 1; v <= dim; ++v) {
            if (closure[v][v]) {
                report.witnesses.push_back("derived cycle through " + name(v));
                break;
            }
        }
    }

    if (!report.witnesses.empty()) {
        report.consistency = ArmConsistency::contradiction;
        return report;
    }

    report.consistency = ArmConsistency::consistent;
    bool total = true;
    for (std::uint32_t a = 1; a <= dim && total; ++a)
        for (std::uint32_t b = a + 1; b <= dim && total; ++b)
            if (!closure[a][b] && !closure[b][a]) total = false;

    if (total) {
        std::vector<std::uint32_t> order(dim);
        std::iota(order.begin(), order.end(), 1u);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return closure[a][b]; // a dominates b
        });
        report.recovered_order = std::move(order);
    }
    return report;
}

} // namespace iom
