#ifndef IOM_THEORY_HPP
#define IOM_THEORY_HPP

#include <cstdint>
#include <utility>

#include "iom/types.hpp"

namespace iom {

enum class Formula : std::uint8_t { brute_force, false_accept, birthday, guess_space };

inline const char* formula_name(Formula f) {
    switch (f) {
        case Formula::brute_force: return "brute_force";
        case Formula::false_accept: return "false_accept";
        case Formula::birthday: return "birthday";
        case Formula::guess_space: return "guess_space";
    }
    return "unknown";
}

// Attack cost in log2 attempts; counts like 2^4200 are never materialized.
struct ComplexityEstimate {
    double bits = 0.0;
    Formula formula = Formula::brute_force;
    // Echo of the inputs that produced the estimate.
    double tau = 0.0;
    std::uint32_t m = 0;
    std::uint32_t delta = 0;
    std::uint32_t dim = 0;
    std::int64_t count = 0;           // guess-space: per-component possibilities
    double bits_pow2_convention = 0.0; // guess-space: dim * round(log2 count)
    bool degenerate_threshold = false; // false-accept: tau*m < 1
};

// E[phi_order(X_max)] for X_max the maximum of q iid standard normals;
// phi_1(x) = x, phi_2(x) = (x^2 - 1)/sqrt(2). Adaptive quadrature over the
// order-statistic density q*pdf(x)*cdf(x)^(q-1), absolute error <= 1e-6.
double hermite_moment(std::uint32_t q, int order);

// Degree-2 truncation of the collision probability series for two vectors
// at cosine rho under q-column Gaussian argmax hashing:
// a0 + a1*rho + a2*rho^2 with a0 = 1/q, a1 = h1(q)^2/(q-1),
// a2 = q*h2(q)^2/((q-1)(q-2)); a2(2) = 0 (the h2(2)^2 = 0 limit of the
// 0/0 form).
double kq_series(std::uint32_t q, double rho);

// Exact agreement probability for q = 2: the argmax pair agrees iff one
// Gaussian hyperplane leaves both vectors on the same side, so
// 1 - arccos(rho)/pi. Validation oracle for the series and Monte Carlo.
double grp_collision_exact2(double rho);

// Windowed-argmax agreement probability between two feature vectors: the
// chance that a uniformly random k-subset of coordinates has the same
// argmax coordinate in both vectors. Sum_i C(R_i, k-1) / C(d, k) with R_i
// the count of coordinates dominated by i in both vectors; exact
// big-integer binomials.
double po_estimate(const FeatureVector& enrolled, const FeatureVector& query, std::uint32_t k);

// m * log2(delta): guessing an entire m-entry code over alphabet delta.
ComplexityEstimate brute_force_bits(std::uint32_t m, std::uint32_t delta);

// ceil(tau*m) * log2(delta): guessing just enough entries to clear the
// decision threshold.
ComplexityEstimate false_accept_bits(double tau, std::uint32_t m, std::uint32_t delta);

// Same, with the alphabet replaced by a 2^bits_per_entry floor, as the
// published complexity tables do row by row.
ComplexityEstimate false_accept_bits_floored(double tau, std::uint32_t m,
                                             std::uint32_t bits_per_entry);

// (tau*m/2) * log2(delta*pi/2): expected trials to collide tau*m entries
// among many compromised codes.
ComplexityEstimate birthday_bits(double tau, std::uint32_t m, std::uint32_t delta);

// Expected trials to find the first single-entry collision. The source
// formula is typeset ambiguously; both readings are returned
// {sqrt(pi/2)*delta, sqrt(pi*delta/2)}. The multi-entry birthday_bits
// formula is the one the published table uses.
std::pair<double, double> birthday_single_entry_trials(std::uint32_t delta);

// Per-component count round((max-min)/step) and d*log2(count) for guessing
// real-valued features over a bounded range at fixed precision.
ComplexityEstimate guess_space_bits(double min, double max, double step, std::uint32_t dim);

} // namespace iom

#endif // IOM_THEORY_HPP
