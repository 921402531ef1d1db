#include "iom/theory.hpp"

#include <gmpxx.h>

#include <cmath>
#include <functional>
#include <numbers>

namespace iom {

namespace {

double std_normal_pdf(double x) {
    static const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, eps * 0.5, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, eps * 0.5, depth - 1);
}

// Unit-width panels before adapting, so narrow mass never slips between
// the initial probe points of a wide interval.
double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
    const int panels = std::max(8, static_cast<int>(std::ceil(b - a)));
    const double width = (b - a) / panels;
    const double panel_eps = eps / panels;
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double lo = a + i * width, hi = lo + width, mid = 0.5 * (lo + hi);
        const double flo = f(lo), fmid = f(mid), fhi = f(hi);
        total += adaptive_simpson(f, lo, hi, flo, fmid, fhi, simpson(lo, hi, flo, fmid, fhi),
                                  panel_eps, 40);
    }
    return total;
}

// Robust ceil for products like 0.11 * 600 that are integers in exact
// arithmetic but can land a few ulps above in floating point.
double ceil_guarded(double v) { return std::ceil(v - 1e-9); }

} // namespace

double hermite_moment(std::uint32_t q, int order) {
    if (q < 2) fail(errc::invalid_parameter, "hermite_moment: q must be >= 2");
    if (order != 1 && order != 2) fail(errc::invalid_parameter, "hermite_moment: order must be 1 or 2");

    auto integrand = [q, order](double x) {
        const double weight = order == 1 ? x : (x * x - 1.0) / std::numbers::sqrt2;
        return weight * static_cast<double>(q) * std_normal_pdf(x) *
               std::pow(std_normal_cdf(x), static_cast<double>(q - 1));
    };
    // The density mass sits within a few units of sqrt(2 ln q); beyond the
    // cut the integrand is below 1e-30.
    const double cut = 13.0 + std::sqrt(2.0 * std::log(static_cast<double>(q)));
    return integrate(integrand, -cut, cut, 1e-9);
}

double kq_series(std::uint32_t q, double rho) {
    if (q < 2) fail(errc::invalid_parameter, "kq_series: q must be >= 2");
    if (!(rho >= -1.0 && rho <= 1.0)) fail(errc::invalid_parameter, "kq_series: |rho| must be <= 1");

    const double qd = static_cast<double>(q);
    const double a0 = 1.0 / qd;
    const double h1 = hermite_moment(q, 1);
    const double a1 = h1 * h1 / (qd - 1.0);
    double a2 = 0.0;
    if (q > 2) {
        const double h2 = hermite_moment(q, 2);
        a2 = qd * h2 * h2 / ((qd - 1.0) * (qd - 2.0));
    }
    return a0 + a1 * rho + a2 * rho * rho;
}

double grp_collision_exact2(double rho) {
    if (!(rho >= -1.0 && rho <= 1.0))
        fail(errc::invalid_parameter, "grp_collision_exact2: |rho| must be <= 1");
    return 1.0 - std::acos(rho) / std::numbers::pi;
}

double po_estimate(const FeatureVector& enrolled, const FeatureVector& query, std::uint32_t k) {
    const std::size_t d = enrolled.dim();
    if (query.dim() != d) fail(errc::invalid_input, "po_estimate: dimension mismatch");
    if (k <= 1 || k > d) fail(errc::invalid_parameter, "po_estimate: need 1 < k <= d");
    for (const FeatureVector* v : {&enrolled, &query}) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if ((*v)[i] == (*v)[j])
                    fail(errc::ill_defined_ranks, "po_estimate: duplicate values make ranks ill-defined");
    }

    // R_i = |{j : e_i > e_j and q_i > q_j}|; coordinate i is the window
    // argmax in both vectors for exactly C(R_i, k-1) of the C(d, k) windows.
    mpz_class numerator = 0;
    mpz_class binom;
    for (std::size_t i = 0; i < d; ++i) {
        unsigned long common = 0;
        for (std::size_t j = 0; j < d; ++j)
            common += (enrolled[i] > enrolled[j]) && (query[i] > query[j]);
        if (common + 1 >= k) {
            mpz_bin_uiui(binom.get_mpz_t(), common, k - 1);
            numerator += binom;
        }
    }
    mpz_class denominator;
    mpz_bin_uiui(denominator.get_mpz_t(), d, k);
    return mpq_class(numerator, denominator).get_d();
}

ComplexityEstimate brute_force_bits(std::uint32_t m, std::uint32_t delta) {
    if (m < 1) fail(errc::invalid_parameter, "brute_force_bits: m must be >= 1");
    if (delta < 2) fail(errc::invalid_parameter, "brute_force_bits: alphabet must be >= 2");
    ComplexityEstimate e;
    e.formula = Formula::brute_force;
    e.m = m;
    e.delta = delta;
    e.bits = static_cast<double>(m) * std::log2(static_cast<double>(delta));
    return e;
}

ComplexityEstimate false_accept_bits(double tau, std::uint32_t m, std::uint32_t delta) {
    if (!(tau > 0.0 && tau <= 1.0)) fail(errc::invalid_parameter, "false_accept_bits: need 0 < tau <= 1");
    if (delta < 2) fail(errc::invalid_parameter, "false_accept_bits: alphabet must be >= 2");
    ComplexityEstimate e;
    e.formula = Formula::false_accept;
    e.tau = tau;
    e.m = m;
    e.delta = delta;
    const double entries = ceil_guarded(tau * static_cast<double>(m));
    e.degenerate_threshold = tau * static_cast<double>(m) < 1.0;
    e.bits = entries * std::log2(static_cast<double>(delta));
    return e;
}

ComplexityEstimate false_accept_bits_floored(double tau, std::uint32_t m,
                                             std::uint32_t bits_per_entry) {
    if (!(tau > 0.0 && tau <= 1.0))
        fail(errc::invalid_parameter, "false_accept_bits_floored: need 0 < tau <= 1");
    ComplexityEstimate e;
    e.formula = Formula::false_accept;
    e.tau = tau;
    e.m = m;
    e.delta = 1u << bits_per_entry;
    const double entries = ceil_guarded(tau * static_cast<double>(m));
    e.degenerate_threshold = tau * static_cast<double>(m) < 1.0;
    e.bits = entries * static_cast<double>(bits_per_entry);
    return e;
}

ComplexityEstimate birthday_bits(double tau, std::uint32_t m, std::uint32_t delta) {
    if (!(tau > 0.0 && tau <= 1.0)) fail(errc::invalid_parameter, "birthday_bits: need 0 < tau <= 1");
    if (delta < 2) fail(errc::invalid_parameter, "birthday_bits: alphabet must be >= 2");
    ComplexityEstimate e;
    e.formula = Formula::birthday;
    e.tau = tau;
    e.m = m;
    e.delta = delta;
    e.bits = 0.5 * tau * static_cast<double>(m) *
             std::log2(static_cast<double>(delta) * std::numbers::pi / 2.0);
    return e;
}

std::pair<double, double> birthday_single_entry_trials(std::uint32_t delta) {
    if (delta < 2)
        fail(errc::invalid_parameter, "birthday_single_entry_trials: alphabet must be >= 2");
    const double d = static_cast<double>(delta);
    return {std::sqrt(std::numbers::pi / 2.0) * d, std::sqrt(std::numbers::pi * d / 2.0)};
}

ComplexityEstimate guess_space_bits(double min, double max, double step, std::uint32_t dim) {
    if (!(max > min)) fail(errc::invalid_parameter, "guess_space_bits: need max > min");
    if (!(step > 0.0)) fail(errc::invalid_parameter, "guess_space_bits: need step > 0");
    if (dim < 1) fail(errc::invalid_parameter, "guess_space_bits: need dim >= 1");
    ComplexityEstimate e;
    e.formula = Formula::guess_space;
    e.dim = dim;
    e.count = std::llround((max - min) / step);
    if (e.count < 2) fail(errc::degenerate_range, "guess_space_bits: fewer than 2 possibilities");
    const double per_component = std::log2(static_cast<double>(e.count));
    e.bits = static_cast<double>(dim) * per_component;
    e.bits_pow2_convention = static_cast<double>(dim) * std::round(per_component);
    return e;
}

} // namespace iom
