#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "hhcert/bounds.hpp"
#include "hhcert/functions.hpp"
#include "hhcert/integrate.hpp"
#include "hhcert/interval.hpp"

namespace hhcert {

enum class QuadRule { midpoint, trapezoid };

inline const char* to_string(QuadRule r) {
    return r == QuadRule::midpoint ? "midpoint" : "trapezoid";
}

/// Composite rule value with its a-priori error certificate. `error_bound`
/// is the per-cell cubic form as stated; `error_bound_corrected` is the
/// proof-consistent composite (identical for the trapezoid rule, one power
/// of the cell width weaker for the midpoint rule). `oracle_error` compares
/// against the reference integral.
struct QuadratureResult {
    double value = 0.0;
    double error_bound = 0.0;
    double error_bound_weak = 0.0;
    double error_bound_corrected = 0.0;
    double oracle_error = 0.0;
    QuadRule rule = QuadRule::midpoint;
    bool hypothesis_ok = false;
    std::vector<std::string> notes;
};

/// Midpoint certificate: |f'| s-convex hypothesis,
/// |R| <= (p+1)^{-1/p} (s+1)^{-1/q} Sum (dx^3/2)(|f'(x_m)|+|f'(x_{m+1})|).
inline QuadratureResult midpoint_error_bound(const DifferentiableFunction& f, const Partition& K,
                                             double s, double q) {
    Interval I(K.a(), K.b());
    f.require_interval(I);
    if (f.max_order() < 1) throw std::invalid_argument("midpoint_error_bound: needs f'");
    if (!(s > 0.0) || !(s <= 1.0)) throw std::invalid_argument("midpoint_error_bound: s in (0,1]");
    if (!(q >= 1.0)) throw std::invalid_argument("midpoint_error_bound: q >= 1");

    QuadratureResult r;
    r.rule = QuadRule::midpoint;
    auto fv = [&](double x) { return f.value(x); };
    r.value = composite_midpoint(fv, K);

    const double p = detail::conjugate_p(q);
    const double pref =
        detail::pow_inv_p(1.0 / (p + 1.0), q) * std::pow(1.0 / (s + 1.0), 1.0 / q);
    std::vector<double> cubic(K.cells());
    std::vector<double> quadratic(K.cells());
    for (std::size_t m = 0; m < K.cells(); ++m) {
        const double dx = K.nodes[m + 1] - K.nodes[m];
        const double dsum =
            std::abs(f.derivative(1, K.nodes[m])) + std::abs(f.derivative(1, K.nodes[m + 1]));
        cubic[m] = 0.5 * dx * dx * dx * dsum;
        quadratic[m] = 0.5 * dx * dx * dsum;
    }
    r.error_bound = pref * detail::pairwise_sum(cubic);
    r.error_bound_weak = r.error_bound;
    r.error_bound_corrected = pref * detail::pairwise_sum(quadratic);
    r.notes.push_back("corrected bound uses the proof-consistent dx^2 per-cell normalization");

    const double exact = detail::oracle_integral(f, I);
    r.oracle_error = std::abs(r.value - exact);
    r.hypothesis_ok =
        check_s_convexity(detail::abs_deriv_pow(f, 1, q), I, s, detail::hypothesis_grid).pass;
    if (!r.hypothesis_ok) r.notes.push_back("hypothesis |f'|^q s-convex not verified");
    return r;
}

/// Trapezoid certificate: |f''| s-convex hypothesis,
/// |R| <= 6^{-1/p} ((s+2)(s+3))^{-1/q} Sum (dx^3/2)(|f''(x_m)|^q+|f''(x_{m+1})|^q)^{1/q},
/// plus the weaker absolute-sum form.
inline QuadratureResult trapezoid_error_bound(const DifferentiableFunction& f, const Partition& K,
                                              double s, double q) {
    Interval I(K.a(), K.b());
    f.require_interval(I);
    if (f.max_order() < 2) throw std::invalid_argument("trapezoid_error_bound: needs f''");
    if (!(s > 0.0) || !(s <= 1.0))
        throw std::invalid_argument("trapezoid_error_bound: s in (0,1]");
    if (!(q >= 1.0)) throw std::invalid_argument("trapezoid_error_bound: q >= 1");

    QuadratureResult r;
    r.rule = QuadRule::trapezoid;
    auto fv = [&](double x) { return f.value(x); };
    r.value = composite_trapezoid(fv, K);

    const double pref = detail::pow_inv_p(1.0 / 6.0, q) *
                        std::pow(1.0 / ((s + 2.0) * (s + 3.0)), 1.0 / q);
    std::vector<double> tight(K.cells());
    std::vector<double> weak(K.cells());
    for (std::size_t m = 0; m < K.cells(); ++m) {
        const double dx = K.nodes[m + 1] - K.nodes[m];
        const double dl = std::abs(f.derivative(2, K.nodes[m]));
        const double dr = std::abs(f.derivative(2, K.nodes[m + 1]));
        const double half_dx3 = 0.5 * dx * dx * dx;
        tight[m] = half_dx3 * std::pow(std::pow(dl, q) + std::pow(dr, q), 1.0 / q);
        weak[m] = half_dx3 * (dl + dr);
    }
    r.error_bound = pref * detail::pairwise_sum(tight);
    r.error_bound_weak = pref * detail::pairwise_sum(weak);
    r.error_bound_corrected = r.error_bound;

    const double exact = detail::oracle_integral(f, I);
    r.oracle_error = std::abs(r.value - exact);
    r.hypothesis_ok =
        check_s_convexity(detail::abs_deriv_pow(f, 2, q), I, s, detail::hypothesis_grid).pass;
    if (!r.hypothesis_ok) r.notes.push_back("hypothesis |f''|^q s-convex not verified");
    return r;
}

struct ConvergenceRow {
    int pieces;
    double value;
    double bound;
    double oracle_error;
};

/// Certificate and measured error over a list of uniform refinements.
inline std::vector<ConvergenceRow> convergence_study(const DifferentiableFunction& f, Interval I,
                                                     QuadRule rule, double s, double q,
                                                     std::span<const int> pieces_list) {
    std::vector<ConvergenceRow> rows;
    rows.reserve(pieces_list.size());
    for (int pieces : pieces_list) {
        const Partition K = uniform_partition(I, pieces);
        const QuadratureResult qr = rule == QuadRule::midpoint
                                        ? midpoint_error_bound(f, K, s, q)
                                        : trapezoid_error_bound(f, K, s, q);
        rows.push_back({pieces, qr.value, qr.error_bound, qr.oracle_error});
    }
    return rows;
}

/// Least-squares slope of log(bound) against log(pieces); about -2 for the
/// cubic-per-cell certificates on smooth integrands.
inline double convergence_slope(const std::vector<ConvergenceRow>& rows) {
    if (rows.size() < 2)
        throw std::invalid_argument("convergence_slope: needs at least two rows");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(rows.size());
    for (const auto& row : rows) {
        const double x = std::log(static_cast<double>(row.pieces));
        const double y = std::log(row.bound);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace hhcert
