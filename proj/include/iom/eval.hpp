#ifndef IOM_EVAL_HPP
#define IOM_EVAL_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "iom/matcher.hpp"
#include "iom/types.hpp"

namespace iom {

// shared = one token for every subject (stolen-token scenario, the
// conservative setting); per_user = independent token per subject.
enum class TokenPolicy : std::uint8_t { shared, per_user };

enum class ScoreLabel : std::uint8_t {
    genuine,
    imposter,
    pseudo_genuine,
    pseudo_imposter,
    brute_force_attack,
};

const char* score_label_name(ScoreLabel label);

class ScoreSet {
public:
    ScoreSet(ScoreLabel label, std::vector<double> scores);

    ScoreLabel label() const noexcept { return label_; }
    std::span<const double> scores() const noexcept { return scores_; }
    std::size_t size() const noexcept { return scores_.size(); }
    double mean() const noexcept;

private:
    ScoreLabel label_;
    std::vector<double> scores_;
};

struct FvcScores {
    ScoreSet genuine;
    ScoreSet imposter;
};

// FVC protocol: genuine = all within-user sample pairs, imposter = all
// cross-user pairs of first samples.
FvcScores fvc_scores(const Dataset& ds, TokenPolicy policy, const IomToken& token);

struct EerResult {
    double eer = 0.0;
    double tau = 0.0;
};

// Sweeps thresholds over the union of observed scores (accept iff
// score >= tau); reports (FAR + FRR)/2 at the |FAR - FRR| minimizer, ties
// resolved toward the smaller threshold.
EerResult eer(const ScoreSet& genuine, const ScoreSet& imposter);

struct SweepPoint {
    SchemeParams params;
    std::vector<double> eers; // one per repetition
    double mean_eer = 0.0;
};

// Mean EER per grid point under the stolen-token FVC protocol, averaged
// over `repetitions` independent token seeds. Repetition r uses the same
// derived seed at every grid point, so per-seed comparisons across the grid
// are paired.
std::vector<SweepPoint> parameter_sweep(const Dataset& ds, std::span<const SchemeParams> grid,
                                        MasterSeed seed, std::uint32_t repetitions);

// Revocability protocol: every sample enrolled under `reference` is matched
// against the same sample hashed under n_tokens freshly derived tokens.
ScoreSet pseudo_imposter_scores(const Dataset& ds, std::uint32_t n_tokens,
                                const IomToken& reference);

// Unlinkability protocol: within-user sample pairs with each side hashed
// under its own independently derived token.
ScoreSet pseudo_genuine_scores(const Dataset& ds, const IomToken& base);

// Empirical brute-force attack: n uniform random codes matched against each
// enrolled code, all scores pooled.
ScoreSet brute_force_attack_scores(const Dataset& ds, std::uint32_t n_random_codes,
                                   const IomToken& token, MasterSeed attack_seed);

enum class ArmConsistency : std::uint8_t { consistent, contradiction };

// x[greater] > x[lesser], coordinates 1-based.
struct ArmConstraint {
    std::uint32_t greater = 0;
    std::uint32_t lesser = 0;
    friend bool operator==(const ArmConstraint&, const ArmConstraint&) = default;
    friend auto operator<=>(const ArmConstraint&, const ArmConstraint&) = default;
};

struct ArmReport {
    std::vector<ArmConstraint> constraints; // deduplicated direct constraints
    ArmConsistency consistency = ArmConsistency::consistent;
    std::vector<std::string> witnesses;          // conflicting pairs / cycles
    std::vector<std::uint32_t> recovered_order;  // coordinates, descending; empty unless total
    std::size_t inequality_count = 0;
};

// Attack via record multiplicity on URP codes with known seeds: each code
// entry yields product inequalities (winner window beats every other
// window); common factors cancel under the all-positive assumption, giving
// pairwise order constraints. Mixed-sign features make the assumption false
// and the constraint set contradictory. GRP codes are rejected: inner
// products over many signed terms do not decompose into such inequalities.
ArmReport arm_order_attack(std::uint32_t dim,
                           std::span<const std::pair<HashedCode, IomToken>> codes);

} // namespace iom

#endif // IOM_EVAL_HPP
