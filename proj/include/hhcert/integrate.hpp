#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hhcert/interval.hpp"

namespace hhcert {

namespace detail {

// 15-point Gauss-Kronrod pair (QUADPACK dqk15 abscissae/weights). The rule is
// open, so endpoint singularities are never evaluated directly.
struct Gk15 {
    static constexpr double xgk[8] = {
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144838258730,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.000000000000000000000000000000000,
    };
    static constexpr double wgk[8] = {
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    };
    static constexpr double wg[4] = {
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    };
};

struct GkEstimate {
    double value;
    double err;
};

template <class F>
GkEstimate gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    const double fc = f(c);
    double k15 = Gk15::wgk[7] * fc;
    double g7 = Gk15::wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * Gk15::xgk[i];
        const double fsum = f(c - dx) + f(c + dx);
        k15 += Gk15::wgk[i] * fsum;
        if (i % 2 == 1) g7 += Gk15::wg[i / 2] * fsum;
    }
    k15 *= h;
    g7 *= h;
    return {k15, std::abs(k15 - g7)};
}

// Bisection-adaptive GK15 on a smooth (no endpoint singularity) interval.
// The error budget is allotted proportionally to cell width.
template <class F>
double adaptive_gk(const F& f, double a, double b, double abs_budget, int depth_cap) {
    struct Cell {
        double a, b, budget;
        int depth;
    };
    std::vector<Cell> stack;
    stack.push_back({a, b, abs_budget, 0});
    double total = 0.0;
    while (!stack.empty()) {
        const Cell cell = stack.back();
        stack.pop_back();
        const GkEstimate e = gk15(f, cell.a, cell.b);
        if (!std::isfinite(e.value))
            throw std::runtime_error("reference_integral: non-finite integrand sample");
        if (e.err <= cell.budget || cell.b - cell.a <= std::abs(cell.a) * 1e-15) {
            total += e.value;
            continue;
        }
        if (cell.depth >= depth_cap)
            throw std::runtime_error(
                "reference_integral: no convergence after depth cap (singular or non-integrable input?)");
        const double mid = 0.5 * (cell.a + cell.b);
        const double half_budget = 0.5 * cell.budget;
        stack.push_back({cell.a, mid, half_budget, cell.depth + 1});
        stack.push_back({mid, cell.b, half_budget, cell.depth + 1});
    }
    return total;
}

// Integrates over (edge, far] where `edge` carries an integrable singularity:
// geometric shells toward the edge, then a Richardson-style geometric tail
// extrapolation once the shell integrals decay cleanly.
template <class F>
double singular_tail(const F& f, double edge, double far, double abs_budget, int depth_cap) {
    const double w = far - edge; // signed: negative when peeling a right edge
    double total = 0.0;
    double last_val = 0.0;   // most recent shell integral
    double last_mag = -1.0;  // its magnitude (-1: none yet)
    double before_mag = -1.0;
    double outer = far;
    constexpr int max_shells = 4000;
    // Shells narrower than this are no longer well resolved by doubles near
    // a nonzero edge; the remaining mass is closed by extrapolation instead.
    const double stop_width = std::max(std::abs(edge) * 0x1p-41, 1e-280);
    for (int j = 0;; ++j) {
        if (j >= max_shells)
            throw std::runtime_error(
                "reference_integral: endpoint shells did not converge (non-integrable singularity?)");
        const double inner = edge + w * std::pow(0.5, j + 1);
        // The shell series of an integrable power singularity is geometric,
        // so close with the extrapolated tail instead of sampling points
        // that round onto the edge itself.
        if (std::abs(w) * std::pow(0.5, j + 1) < stop_width || inner == edge || inner == outer) {
            if (last_mag == 0.0) break;
            if (last_mag > 0.0 && before_mag > 0.0) {
                const double rho = last_mag / before_mag;
                if (rho > 0.0 && rho < 0.995) {
                    total += last_val * rho / (1.0 - rho);
                    break;
                }
            }
            throw std::runtime_error(
                "reference_integral: endpoint shells hit the representable limit without "
                "converging (non-integrable singularity?)");
        }
        const double shell_budget = 0.3 * abs_budget * 6.0 / ((j + 1.0) * (j + 1.0) * 9.8696044);
        // shell integral in increasing-x orientation
        const double val = (w > 0) ? adaptive_gk(f, inner, outer, shell_budget, depth_cap)
                                   : adaptive_gk(f, outer, inner, shell_budget, depth_cap);
        total += val;
        const double mag = std::abs(val);
        if (j >= 6 && last_mag >= 0.0) {
            if (mag == 0.0 && last_mag == 0.0) break;
            if (last_mag > 0.0) {
                const double rho = mag / last_mag;
                if (rho < 0.98) {
                    const double tail_mag = mag * rho / (1.0 - rho);
                    if (tail_mag <= 0.3 * abs_budget) {
                        // same-sign geometric continuation of the shell series
                        if (last_val != 0.0 && val != 0.0 && (val > 0) == (last_val > 0))
                            total += val * rho / (1.0 - rho);
                        break;
                    }
                }
            }
        }
        before_mag = last_mag;
        last_mag = mag;
        last_val = val;
        outer = inner;
    }
    return (w > 0) ? total : -total;
}

} // namespace detail

/// Adaptive oracle integral of f over I to absolute-plus-relative tolerance
/// `tol` (valid range [1e-13, 1e-6]). Integrable endpoint singularities must
/// be flagged so geometric subdivision can peel them.
inline double reference_integral(const std::function<double(double)>& f, Interval I, double tol,
                                 bool singular_lo = false, bool singular_hi = false) {
    if (!(tol >= 1e-13) || !(tol <= 1e-6))
        throw std::invalid_argument("reference_integral: tol must lie in [1e-13, 1e-6]");
    constexpr int depth_cap = 60;

    auto pass = [&](double scale) {
        const double budget = tol * scale;
        if (!singular_lo && !singular_hi)
            return detail::adaptive_gk(f, I.a, I.b, budget, depth_cap);
        double total = 0.0;
        double lo = I.a;
        double hi = I.b;
        const double mid = I.midpoint();
        if (singular_lo && singular_hi) {
            total += detail::singular_tail(f, I.a, mid, 0.5 * budget, depth_cap);
            total += -detail::singular_tail(f, I.b, mid, 0.5 * budget, depth_cap);
            return total;
        }
        if (singular_lo) {
            total += detail::singular_tail(f, I.a, mid, 0.5 * budget, depth_cap);
            lo = mid;
        }
        if (singular_hi) {
            total += -detail::singular_tail(f, I.b, mid, 0.5 * budget, depth_cap);
            hi = mid;
        }
        total += detail::adaptive_gk(f, lo, hi, 0.5 * budget, depth_cap);
        return total;
    };

    // First pass fixes the scale for the absolute-plus-relative contract; a
    // second pass runs only when the estimate moved the scale significantly.
    double result = pass(1.0);
    const double scale = std::max(1.0, std::abs(result));
    if (scale > 2.0) result = pass(scale);
    return result;
}

/// Composite midpoint rule over a partition.
inline double composite_midpoint(const std::function<double(double)>& f, const Partition& K) {
    std::vector<double> terms(K.cells());
    for (std::size_t m = 0; m < K.cells(); ++m) {
        const double l = K.nodes[m];
        const double r = K.nodes[m + 1];
        terms[m] = f(0.5 * (l + r)) * (r - l);
    }
    return detail::pairwise_sum(terms);
}

/// Composite trapezoidal rule over a partition.
inline double composite_trapezoid(const std::function<double(double)>& f, const Partition& K) {
    std::vector<double> terms(K.cells());
    for (std::size_t m = 0; m < K.cells(); ++m) {
        const double l = K.nodes[m];
        const double r = K.nodes[m + 1];
        terms[m] = 0.5 * (f(l) + f(r)) * (r - l);
    }
    return detail::pairwise_sum(terms);
}

} // namespace hhcert
