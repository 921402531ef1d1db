#include "iom/matcher.hpp"

namespace iom {

MatchScore collision_score(const HashedCode& enrolled, const HashedCode& query) {
    if (enrolled.scheme() != query.scheme())
        fail(errc::incomparable_codes, "collision_score: scheme mismatch");
    if (enrolled.size() != query.size())
        fail(errc::incomparable_codes, "collision_score: code length mismatch");
    if (enrolled.alphabet() != query.alphabet())
        fail(errc::incomparable_codes, "collision_score: alphabet mismatch");

    const auto e = enrolled.indices();
    const auto q = query.indices();
    std::uint32_t hits = 0;
    for (std::size_t i = 0; i < e.size(); ++i) hits += (e[i] == q[i]);

    MatchScore s;
    s.collisions = hits;
    s.m = static_cast<std::uint32_t>(e.size());
    s.score = static_cast<double>(hits) / static_cast<double>(s.m);
    return s;
}

Decision decide(const MatchScore& score, double threshold) {
    if (!(threshold >= 0.0 && threshold <= 1.0))
        fail(errc::invalid_threshold, "decide: threshold must lie in [0, 1]");
    return score.score >= threshold ? Decision::accept : Decision::reject;
}

} // namespace iom
