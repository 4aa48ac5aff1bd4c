#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hhcert {

namespace detail {

// Lanczos approximation, g = 7, 9 terms (Godfrey's coefficients). Relative
// error well below 1e-13 on the positive axis, which is what the Beta
// evaluation budget needs.
inline double lanczos_log_gamma(double x) {
    static constexpr double g = 7.0;
    static constexpr double c[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    const double z = x - 1.0;
    double series = c[0];
    for (int i = 1; i < 9; ++i) series += c[i] / (z + i);
    const double base = z + g + 0.5;
    constexpr double half_log_two_pi = 0.91893853320467274178032973640562;
    return half_log_two_pi + (z + 0.5) * std::log(base) - base + std::log(series);
}

} // namespace detail

/// ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::invalid_argument("log_gamma: requires x > 0");
    if (x < 0.5) {
        // reflection keeps the Lanczos series in its accurate range
        const double pi = std::numbers::pi;
        return std::log(pi) - std::log(std::sin(pi * x)) - detail::lanczos_log_gamma(1.0 - x);
    }
    return detail::lanczos_log_gamma(x);
}

/// Euler Beta function for x, y > 0, evaluated through log-Gamma.
inline double beta(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0))
        throw std::invalid_argument("beta: requires x > 0 and y > 0");
    return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

/// Three closed-form brackets of the best midpoint constant c(s) in
/// c(s) f((a+b)/2) <= mean integral, for s-convex f. lower <= middle <= upper
/// on (0,1]; all three equal 1 at s = 1.
struct JagersBounds {
    double lower;
    double middle;
    double upper;
    double s;
};

inline JagersBounds jagers_bounds(double s) {
    if (!(s > 0.0) || !(s <= 1.0))
        throw std::invalid_argument("jagers_bounds: s must lie in (0,1]");
    JagersBounds jb{};
    jb.s = s;
    jb.lower = (std::pow(2.0, s + 1.0) - 1.0) / (s + 2.0);
    jb.middle = std::pow(2.0, (s - 1.0) / (s + 1.0)) *
                std::pow((std::pow(2.0, s) - 1.0) / s, s / (s + 1.0));
    jb.upper = (std::pow(2.0, s + 1.0) - std::pow(2.0, s - 1.0) - 1.0) / (s + 1.0);
    return jb;
}

} // namespace hhcert
