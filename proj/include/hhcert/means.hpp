#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hhcert {

/// Two positive reals; the domain of every mean in this header.
struct PositivePair {
    double a;
    double b;

    PositivePair(double a_, double b_) : a(a_), b(b_) {
        if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
            throw std::invalid_argument("PositivePair: requires finite a > 0 and b > 0");
    }
};

namespace detail {

inline bool pair_degenerate(PositivePair p) {
    return std::abs(p.a - p.b) <= 1e-14 * std::max(p.a, p.b);
}

} // namespace detail

inline double mean_arithmetic(PositivePair p) { return 0.5 * (p.a + p.b); }

inline double mean_geometric(PositivePair p) {
    const double prod = p.a * p.b;
    if (std::isfinite(prod) && prod > 0.0) return std::sqrt(prod);
    return std::sqrt(p.a) * std::sqrt(p.b); // overflow/underflow fallback
}

inline double mean_harmonic(PositivePair p) { return 2.0 * p.a * p.b / (p.a + p.b); }

inline double mean_logarithmic(PositivePair p) {
    if (detail::pair_degenerate(p)) return p.a;
    const double lo = std::min(p.a, p.b);
    const double d = std::max(p.a, p.b) - lo;
    return d / std::log1p(d / lo);
}

/// Identric mean, evaluated in log space to dodge the b^b overflow of the
/// direct power form.
inline double mean_identric(PositivePair p) {
    if (detail::pair_degenerate(p)) return p.a;
    const double lo = std::min(p.a, p.b);
    const double hi = std::max(p.a, p.b);
    const double d = hi - lo;
    const double log_ratio = std::log1p(d / lo);
    return lo * std::exp(hi * log_ratio / d - 1.0);
}

/// p-logarithmic mean L_r. The removable singularities r = 0 and r = -1 are
/// extended by continuity to the identric and logarithmic means.
inline double mean_p_logarithmic(PositivePair p, double r) {
    if (r == 0.0) return mean_identric(p);
    if (r == -1.0) return mean_logarithmic(p);
    if (detail::pair_degenerate(p)) return p.a;
    const double lo = std::min(p.a, p.b);
    const double hi = std::max(p.a, p.b);
    const double d = hi - lo;
    const double m = r + 1.0;
    const double log_ratio = std::log1p(d / lo); // ln(hi/lo) > 0
    // [ (hi^m - lo^m) / (m d) ]^{1/r} via expm1; stable for r near 0 or -1
    const double u = std::expm1(m * log_ratio) / m; // positive for either sign of m
    const double log_mean_pow = m * std::log(lo) + std::log(u) - std::log(d);
    return std::exp(log_mean_pow / r);
}

/// The classical chain H <= G <= L <= I <= A evaluated on one pair.
struct MeansChain {
    double harmonic;
    double geometric;
    double logarithmic;
    double identric;
    double arithmetic;
    bool ordered;
};

inline MeansChain means_chain_check(PositivePair p) {
    MeansChain c{};
    c.harmonic = mean_harmonic(p);
    c.geometric = mean_geometric(p);
    c.logarithmic = mean_logarithmic(p);
    c.identric = mean_identric(p);
    c.arithmetic = mean_arithmetic(p);
    auto leq = [](double x, double y) { return x <= y + 1e-12 * std::max(1.0, std::abs(y)); };
    c.ordered = leq(c.harmonic, c.geometric) && leq(c.geometric, c.logarithmic) &&
                leq(c.logarithmic, c.identric) && leq(c.identric, c.arithmetic);
    return c;
}

} // namespace hhcert
