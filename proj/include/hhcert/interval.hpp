#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace hhcert {

/// Closed interval [a, b] with a < b.
struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
            throw std::invalid_argument("Interval: requires finite a < b");
    }

    double width() const { return b - a; }
    double midpoint() const { return 0.5 * (a + b); }
    bool contains(double x) const { return a <= x && x <= b; }
};

/// Strictly increasing node sequence x_0 < x_1 < ... < x_n used by the
/// composite rules. At least two nodes.
struct Partition {
    std::vector<double> nodes;

    explicit Partition(std::vector<double> ns) : nodes(std::move(ns)) {
        if (nodes.size() < 2)
            throw std::invalid_argument("Partition: needs at least 2 nodes");
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            if (!(nodes[i] < nodes[i + 1]))
                throw std::invalid_argument("Partition: nodes must be strictly increasing");
        for (double x : nodes)
            if (!std::isfinite(x))
                throw std::invalid_argument("Partition: nodes must be finite");
    }

    double a() const { return nodes.front(); }
    double b() const { return nodes.back(); }
    std::size_t cells() const { return nodes.size() - 1; }
};

inline Partition uniform_partition(Interval I, int pieces) {
    if (pieces < 1)
        throw std::invalid_argument("uniform_partition: pieces must be >= 1");
    std::vector<double> ns(static_cast<std::size_t>(pieces) + 1);
    const double h = I.width() / pieces;
    for (int i = 0; i <= pieces; ++i)
        ns[static_cast<std::size_t>(i)] = I.a + h * i;
    ns.front() = I.a;
    ns.back() = I.b;
    return Partition(std::move(ns));
}

namespace detail {

/// Left-to-right pairwise reduction; fixed association order so concurrent
/// producers still reduce to identical sums.
inline double pairwise_sum(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    if (xs.size() == 1) return xs[0];
    if (xs.size() <= 8) {
        double s = xs[0];
        for (std::size_t i = 1; i < xs.size(); ++i) s += xs[i];
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

inline double pairwise_sum(const std::vector<double>& xs) {
    return pairwise_sum(std::span<const double>(xs.data(), xs.size()));
}

/// x^k for integer k >= 0 by repeated multiplication (keeps signs exact for
/// negative bases).
inline double ipow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

inline double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace detail

} // namespace hhcert
