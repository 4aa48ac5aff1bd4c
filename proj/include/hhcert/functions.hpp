#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hhcert/interval.hpp"

namespace hhcert {

/// Validity region of a catalog function. `lo_open`/`hi_open` mark endpoints
/// where the function value itself blows up; `singular_deriv_lo`/`hi` mark
/// endpoints where the value is fine but derivatives are unbounded (the
/// sqrt family at 0). The reference integrator peels geometric shells off
/// flagged endpoints.
struct FunctionDomain {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = false;
    bool hi_open = false;
    bool singular_deriv_lo = false;
    bool singular_deriv_hi = false;

    bool admits(Interval I) const {
        if (lo_open ? !(I.a > lo) : !(I.a >= lo)) return false;
        if (hi_open ? !(I.b < hi) : !(I.b <= hi)) return false;
        return true;
    }

    bool singular_at_lo(double a, int order) const {
        if (a != lo) return false;
        return lo_open || (order >= 1 && singular_deriv_lo);
    }
    bool singular_at_hi(double b, int order) const {
        if (b != hi) return false;
        return hi_open || (order >= 1 && singular_deriv_hi);
    }
};

/// A function handle bundle: f itself plus closed-form derivative evaluators
/// up to max_order. derivative(0, x) is f(x). Immutable after construction.
class DifferentiableFunction {
public:
    DifferentiableFunction(std::string name, int max_order, FunctionDomain domain,
                           std::function<double(int, double)> deriv)
        : name_(std::move(name)),
          max_order_(max_order),
          domain_(domain),
          deriv_(std::move(deriv)) {
        if (max_order_ < 0) throw std::invalid_argument("DifferentiableFunction: max_order < 0");
        if (!deriv_) throw std::invalid_argument("DifferentiableFunction: null evaluator");
    }

    const std::string& name() const { return name_; }
    int max_order() const { return max_order_; }
    const FunctionDomain& domain() const { return domain_; }

    double value(double x) const { return deriv_(0, x); }

    double derivative(int k, double x) const {
        if (k < 0 || k > max_order_)
            throw std::invalid_argument("derivative: order " + std::to_string(k) +
                                        " outside [0," + std::to_string(max_order_) + "] for " + name_);
        return deriv_(k, x);
    }

    void require_interval(Interval I) const {
        if (!domain_.admits(I)) {
            std::ostringstream os;
            os << name_ << ": interval [" << I.a << "," << I.b << "] outside validity domain";
            throw std::invalid_argument(os.str());
        }
    }

private:
    std::string name_;
    int max_order_;
    FunctionDomain domain_;
    std::function<double(int, double)> deriv_;
};

namespace detail {

// prod_{j=0}^{k-1} (e - j), the falling factorial coefficient of d^k/dx^k x^e.
inline double falling(double e, int k) {
    double c = 1.0;
    for (int j = 0; j < k; ++j) c *= (e - j);
    return c;
}

inline int catalog_default_order() { return 64; }

} // namespace detail

/// Named catalog driving the CLI. Entries: exp, neg_log, sqrt, pow_s,
/// one_minus_x_pow_n, reciprocal, poly (coefficients ascending in degree).
inline DifferentiableFunction catalog_get(const std::string& name,
                                          const std::vector<double>& params = {}) {
    const int M = detail::catalog_default_order();
    const double inf = std::numeric_limits<double>::infinity();

    auto need_params = [&](std::size_t n, const char* what) {
        if (params.size() != n)
            throw std::invalid_argument(name + ": expected " + what);
    };

    if (name == "exp") {
        need_params(0, "no parameters");
        return DifferentiableFunction("exp", M, FunctionDomain{},
                                      [](int, double x) { return std::exp(x); });
    }

    if (name == "neg_log") {
        need_params(0, "no parameters");
        FunctionDomain d;
        d.lo = 0.0;
        d.lo_open = true;
        return DifferentiableFunction("neg_log", M, d, [](int k, double x) {
            if (k == 0) return -std::log(x);
            // f^(k)(x) = (-1)^k (k-1)! x^-k
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            return sign * detail::factorial(k - 1) * std::pow(x, -static_cast<double>(k));
        });
    }

    if (name == "sqrt") {
        need_params(0, "no parameters");
        FunctionDomain d;
        d.lo = 0.0;
        d.singular_deriv_lo = true;
        return DifferentiableFunction("sqrt", M, d, [](int k, double x) {
            if (k == 0) return std::sqrt(x);
            const double c = detail::falling(0.5, k);
            return c * std::pow(x, 0.5 - k);
        });
    }

    if (name == "pow_s") {
        need_params(1, "one parameter s in (0,1]");
        const double s = params[0];
        if (!(s > 0.0) || !(s <= 1.0))
            throw std::invalid_argument("pow_s: s must lie in (0,1]");
        FunctionDomain d;
        d.lo = 0.0;
        d.singular_deriv_lo = (s < 1.0);
        return DifferentiableFunction("pow_s", M, d, [s](int k, double x) {
            if (k == 0) return std::pow(x, s);
            const double c = detail::falling(s, k);
            if (c == 0.0) return 0.0; // s integral: derivative chain terminates
            return c * std::pow(x, s - k);
        });
    }

    if (name == "one_minus_x_pow_n") {
        need_params(1, "one integer parameter n with |n| >= 2");
        const double nr = params[0];
        const int n = static_cast<int>(std::lround(nr));
        if (std::abs(nr - n) > 1e-9 || std::abs(n) < 2)
            throw std::invalid_argument("one_minus_x_pow_n: n must be an integer with |n| >= 2");
        FunctionDomain d;
        if (n < 0) {
            d.hi = 1.0;
            d.hi_open = true;
        }
        return DifferentiableFunction("one_minus_x_pow_n", M, d, [n](int k, double x) {
            if (n > 0 && k > n) return 0.0;
            const double c = detail::falling(static_cast<double>(n), k);
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            return sign * c * std::pow(1.0 - x, static_cast<double>(n - k));
        });
    }

    if (name == "reciprocal") {
        need_params(0, "no parameters");
        FunctionDomain d;
        d.lo = 0.0;
        d.lo_open = true;
        return DifferentiableFunction("reciprocal", M, d, [](int k, double x) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            return sign * detail::factorial(k) * std::pow(x, -static_cast<double>(k + 1));
        });
    }

    if (name == "poly") {
        if (params.empty())
            throw std::invalid_argument("poly: needs at least one coefficient (ascending degree)");
        std::vector<double> cs = params;
        return DifferentiableFunction("poly", M, FunctionDomain{}, [cs](int k, double x) {
            // k-th derivative evaluated by Horner on the shifted coefficients
            const int deg = static_cast<int>(cs.size()) - 1;
            if (k > deg) return 0.0;
            double r = 0.0;
            for (int i = deg; i >= k; --i)
                r = r * x + cs[static_cast<std::size_t>(i)] * detail::falling(i, k);
            return r;
        });
    }

    throw std::invalid_argument("catalog_get: unknown function '" + name + "'");
}

} // namespace hhcert
