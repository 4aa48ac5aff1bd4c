#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hhcert/integrate.hpp"
#include "hhcert/special.hpp"

using namespace hhcert;

TEST_CASE("log_gamma fixed points") {
    CHECK(std::abs(log_gamma(1.0)) <= 1e-14);
    CHECK(std::abs(log_gamma(2.0)) <= 1e-14);
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-12));
    CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-12));
    CHECK_THROWS_AS(log_gamma(0.0), std::invalid_argument);
    CHECK_THROWS_AS(log_gamma(-1.5), std::invalid_argument);
}

TEST_CASE("log_gamma tracks the library implementation") {
    for (double x = 0.05; x < 30.0; x += 0.173) {
        const double ours = log_gamma(x);
        const double ref = std::lgamma(x);
        CHECK(std::abs(ours - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("beta values and symmetry") {
    CHECK(beta(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(beta(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
    CHECK_THROWS_AS(beta(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(beta(1.0, -2.0), std::invalid_argument);

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.05, 20.0);
    for (int i = 0; i < 200; ++i) {
        const double x = u(rng), y = u(rng);
        const double bxy = beta(x, y);
        const double byx = beta(y, x);
        CHECK(std::abs(bxy - byx) <= 1e-12 * std::abs(bxy));
    }
}

TEST_CASE("beta(1, m) = 1/m") {
    for (int m = 1; m <= 20; ++m)
        CHECK(std::abs(beta(1.0, m) - 1.0 / m) <= 1e-13);
}

TEST_CASE("beta matches its defining integral") {
    const double grid[] = {0.5, 1.0, 1.5, 2.0, 3.5};
    for (double x : grid) {
        for (double y : grid) {
            auto integrand = [x, y](double t) {
                return std::pow(t, x - 1.0) * std::pow(1.0 - t, y - 1.0);
            };
            const double quad =
                reference_integral(integrand, Interval(0, 1), 1e-10, x < 1.0, y < 1.0);
            CHECK(std::abs(beta(x, y) - quad) <= 1e-9 * std::max(1.0, std::abs(quad)));
        }
    }
    // the kernel-moment shape that the derivative bounds integrate
    auto k = [](double t) { return std::pow(t, 0.5) * (1 - t) * (1 - t); };
    const double q = reference_integral(k, Interval(0, 1), 1e-10, true, false);
    CHECK(beta(1.5, 3.0) == doctest::Approx(q).epsilon(1e-9));
}

TEST_CASE("jagers bracket") {
    const JagersBounds one = jagers_bounds(1.0);
    CHECK(one.lower == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(one.middle == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(one.upper == doctest::Approx(1.0).epsilon(1e-12));

    const JagersBounds half = jagers_bounds(0.5);
    CHECK(half.lower ==
          doctest::Approx((std::pow(2.0, 1.5) - 1.0) / 2.5).epsilon(1e-14)); // 0.7313708...
    CHECK(half.lower == doctest::Approx(0.73137084989847612).epsilon(1e-12));

    for (int i = 1; i <= 1000; ++i) {
        const double s = i / 1000.0;
        const JagersBounds jb = jagers_bounds(s);
        CHECK(jb.lower <= jb.middle + 1e-12);
        CHECK(jb.middle <= jb.upper + 1e-12);
        // Theorem 1's constant never beats the bracket's lower end
        CHECK(std::pow(2.0, s - 1.0) <= jb.lower + 1e-12);
    }

    CHECK_THROWS_AS(jagers_bounds(0.0), std::invalid_argument);
    CHECK_THROWS_AS(jagers_bounds(1.1), std::invalid_argument);
}
