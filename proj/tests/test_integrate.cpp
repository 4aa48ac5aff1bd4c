#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hhcert/integrate.hpp"
#include "hhcert/special.hpp"

using namespace hhcert;

TEST_CASE("reference integrals of smooth functions") {
    CHECK(reference_integral([](double x) { return std::exp(x); }, Interval(0, 1), 1e-11) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-11));
    CHECK(reference_integral([](double x) { return x * x; }, Interval(0, 1), 1e-11) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(reference_integral([](double x) { return std::sin(x); }, Interval(0, M_PI), 1e-11) ==
          doctest::Approx(2.0).epsilon(1e-11));
}

TEST_CASE("flagged endpoint singularities") {
    // integrable power singularities at the left edge
    CHECK(reference_integral([](double x) { return 1.0 / std::sqrt(x); }, Interval(0, 1), 1e-10,
                             true, false) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(reference_integral([](double x) { return -std::log(x); }, Interval(0, 1), 1e-11, true,
                             false) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(reference_integral([](double x) { return std::pow(x, -0.75); }, Interval(0, 1), 1e-10,
                             true, false) == doctest::Approx(4.0).epsilon(1e-9));
    // right edge and both edges
    CHECK(reference_integral([](double x) { return 1.0 / std::sqrt(1.0 - x); }, Interval(0, 1),
                             1e-10, false, true) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(reference_integral(
              [](double x) { return 1.0 / std::sqrt(x) + 1.0 / std::sqrt(1.0 - x); },
              Interval(0, 1), 1e-10, true, true) == doctest::Approx(4.0).epsilon(1e-9));
    // non-integrable input is reported, not silently mangled
    CHECK_THROWS_AS(reference_integral([](double x) { return 1.0 / x; }, Interval(0, 1), 1e-10,
                                       true, false),
                    std::runtime_error);
}

TEST_CASE("tolerance contract") {
    CHECK_THROWS_AS(
        reference_integral([](double x) { return x; }, Interval(0, 1), 1e-14),
        std::invalid_argument);
    CHECK_THROWS_AS(
        reference_integral([](double x) { return x; }, Interval(0, 1), 1e-3),
        std::invalid_argument);

    const std::vector<std::function<double(double)>> fs = {
        [](double x) { return std::exp(-x * x); },
        [](double x) { return std::cos(7.0 * x) / (1.0 + x * x); },
        [](double x) { return std::sqrt(x + 0.1); },
    };
    for (const auto& f : fs) {
        for (double tol : {1e-7, 1e-9, 1e-11}) {
            const double loose = reference_integral(f, Interval(0, 3), tol);
            const double tight = reference_integral(f, Interval(0, 3), tol / 2);
            CHECK(std::abs(loose - tight) <= tol * std::max(1.0, std::abs(tight)));
        }
    }
}

TEST_CASE("uniform partitions") {
    auto K = uniform_partition(Interval(0, 1), 2);
    REQUIRE(K.nodes.size() == 3);
    CHECK(K.nodes[0] == 0.0);
    CHECK(K.nodes[1] == 0.5);
    CHECK(K.nodes[2] == 1.0);

    auto K1 = uniform_partition(Interval(0, 1), 1);
    CHECK(K1.nodes == std::vector<double>{0.0, 1.0});

    auto K3 = uniform_partition(Interval(2, 8), 3);
    REQUIRE(K3.nodes.size() == 4);
    CHECK(K3.nodes[1] == doctest::Approx(4.0));
    CHECK(K3.nodes[2] == doctest::Approx(6.0));

    CHECK_THROWS_AS(uniform_partition(Interval(0, 1), 0), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0.0, 0.5, 0.4}), std::invalid_argument);
}

TEST_CASE("composite rules") {
    auto sq = [](double x) { return x * x; };
    Partition K({0.0, 0.5, 1.0});
    CHECK(composite_midpoint(sq, K) == doctest::Approx(0.3125).epsilon(1e-15));
    CHECK(composite_trapezoid(sq, K) == doctest::Approx(0.375).epsilon(1e-15));

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> nodes{0.0};
        for (int i = 0; i < 6; ++i) nodes.push_back(nodes.back() + 0.05 + u(rng));
        Partition R(nodes);
        const double w = R.b() - R.a();

        auto constant = [](double) { return 3.25; };
        CHECK(composite_midpoint(constant, R) == doctest::Approx(3.25 * w).epsilon(1e-13));
        CHECK(composite_trapezoid(constant, R) == doctest::Approx(3.25 * w).epsilon(1e-13));

        auto line = [](double x) { return 2.0 * x - 1.0; };
        const double exact = R.b() * R.b() - R.b() - (R.a() * R.a() - R.a());
        CHECK(std::abs(composite_midpoint(line, R) - exact) <= 1e-13 * std::max(1.0, std::abs(exact)));
        CHECK(std::abs(composite_trapezoid(line, R) - exact) <=
              1e-13 * std::max(1.0, std::abs(exact)));
    }
}
