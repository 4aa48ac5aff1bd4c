#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "hhcert/interval.hpp"

namespace hhcert {

struct ConvexityWitness {
    double x;
    double y;
    double t;
};

/// Outcome of a lattice check of the defining s-convexity (or s-concavity)
/// inequality. `pass == false` iff `worst_violation` exceeds the tolerance,
/// in which case `witness` reproduces it.
struct ConvexityReport {
    bool pass = true;
    double s = 1.0;
    double worst_violation = 0.0;
    std::optional<ConvexityWitness> witness;
    bool domain_violation = false;
    std::string note;
};

namespace detail {

constexpr double convexity_tolerance = 1e-12;

/// Shared lattice sweep. direction = +1 checks
/// g(t x + (1-t) y) <= t^s g(x) + (1-t)^s g(y); direction = -1 the reverse.
inline ConvexityReport lattice_check(const std::function<double(double)>& g, Interval I,
                                     double s, int grid_n, int direction) {
    if (!(s > 0.0) || !(s <= 1.0))
        throw std::invalid_argument("convexity check: s must lie in (0,1]");
    if (grid_n < 3)
        throw std::invalid_argument("convexity check: grid_n must be >= 3");

    ConvexityReport rep;
    rep.s = s;

    const int n = grid_n;
    std::vector<double> xs(static_cast<std::size_t>(n));
    std::vector<double> gx(static_cast<std::size_t>(n));
    double most_negative = 0.0;
    double neg_where = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = I.a + I.width() * i / (n - 1);
        const double v = g(x);
        if (!std::isfinite(v))
            throw std::runtime_error("convexity check: non-finite evaluation at x=" + std::to_string(x));
        xs[static_cast<std::size_t>(i)] = x;
        gx[static_cast<std::size_t>(i)] = v;
        if (v < most_negative) {
            most_negative = v;
            neg_where = x;
        }
    }

    double worst = 0.0;
    ConvexityWitness at{0, 0, 0};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const double t = static_cast<double>(k) / (n - 1);
                const double mix = t * xs[static_cast<std::size_t>(i)] +
                                   (1.0 - t) * xs[static_cast<std::size_t>(j)];
                const double lhs = g(mix);
                if (!std::isfinite(lhs))
                    throw std::runtime_error("convexity check: non-finite evaluation at x=" +
                                             std::to_string(mix));
                const double rhs = std::pow(t, s) * gx[static_cast<std::size_t>(i)] +
                                   std::pow(1.0 - t, s) * gx[static_cast<std::size_t>(j)];
                const double scale = std::max(1.0, std::abs(rhs));
                const double viol = direction * (lhs - rhs) / scale;
                if (viol > worst) {
                    worst = viol;
                    at = {xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(j)], t};
                }
            }
        }
    }

    const bool negativity = most_negative < -convexity_tolerance;
    if (worst > convexity_tolerance) {
        rep.pass = false;
        rep.worst_violation = worst;
        rep.witness = at;
    } else if (negativity) {
        // The second-sense definition lives on nonnegative values; report a
        // negative sample as a domain violation even if the lattice inequality
        // held everywhere.
        rep.worst_violation = -most_negative;
        rep.witness = ConvexityWitness{neg_where, neg_where, 0.0};
    } else {
        rep.worst_violation = worst;
    }
    if (negativity) {
        rep.pass = false;
        rep.domain_violation = true;
        rep.note = "negative sample of g inside the interval";
    }
    return rep;
}

} // namespace detail

/// Lattice test of s-convexity in the second sense over I x I x [0,1],
/// endpoints included. Pass iff the worst scaled violation is <= 1e-12.
inline ConvexityReport check_s_convexity(const std::function<double(double)>& g, Interval I,
                                         double s, int grid_n) {
    return detail::lattice_check(g, I, s, grid_n, +1);
}

/// Same lattice with the inequality reversed (s = 1 gives ordinary concavity).
inline ConvexityReport check_concavity(const std::function<double(double)>& g, Interval I,
                                       double s, int grid_n) {
    return detail::lattice_check(g, I, s, grid_n, -1);
}

} // namespace hhcert
