#ifndef IOM_MATCHER_HPP
#define IOM_MATCHER_HPP

#include "iom/types.hpp"

namespace iom {

struct MatchScore {
    std::uint32_t collisions = 0;
    std::uint32_t m = 0;
    double score = 0.0; // collisions / m
};

// Fraction of positions where the two codes agree.
MatchScore collision_score(const HashedCode& enrolled, const HashedCode& query);

enum class Decision : std::uint8_t { accept, reject };

// Accept iff score >= threshold.
Decision decide(const MatchScore& score, double threshold);

} // namespace iom

#endif // IOM_MATCHER_HPP
