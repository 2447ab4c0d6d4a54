#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "randpoly/analysis.hpp"
#include "randpoly/error.hpp"
#include "randpoly/geometry.hpp"

using namespace randpoly;
namespace an = randpoly::analysis;

namespace {
constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}
}  // namespace

TEST_CASE("gamma sequence start and recurrence") {
    const auto g = an::gamma_seq(25);
    REQUIRE(g.size() == 26);
    CHECK(g[0] == 0.5);
    CHECK(rel_err(g[1], 1.0 / kPi) < 1e-15);
    CHECK(rel_err(g[2], 0.25) < 1e-15);
    for (int k = 0; k + 1 <= 25; ++k) {
        CHECK(std::abs(g[k + 1] * 2.0 * kPi * (k + 1) * g[k] - 1.0) < 1e-12);
    }
}

TEST_CASE("facet constants match the known closed forms") {
    CHECK(rel_err(an::facet_constant(2), 1.0) < 1e-12);
    CHECK(rel_err(an::facet_constant(3), 2.0) < 1e-12);
    CHECK(rel_err(an::facet_constant(4), 24.0 * kPi * kPi / 35.0) < 1e-12);
    CHECK(rel_err(an::facet_constant(5), 286.0 / 9.0) < 1e-12);
    CHECK(rel_err(an::facet_constant(6), 1296000.0 * std::pow(kPi, 4) / 676039.0) < 1e-12);
    CHECK_THROWS_WITH_AS(an::facet_constant(60), doctest::Contains("overflow-guard"), Error);
    CHECK_THROWS_AS(an::facet_constant(1), Error);
}

TEST_CASE("facet survival probability") {
    for (auto [n, m] : {std::pair{2, 10}, std::pair{3, 100}, std::pair{4, 37}}) {
        CHECK(rel_err(an::facet_survival_probability(n, m, 0.0), std::pow(0.5, m - n)) < 1e-12);
        CHECK(an::facet_survival_probability(n, m, 1.0) == 1.0);
    }
    CHECK(rel_err(an::facet_survival_probability(3, 100, 0.9), std::pow(0.95, 97)) < 1e-12);

    // nondecreasing in h, nonincreasing in m
    for (int n : {2, 3, 4}) {
        double prev = -1.0;
        for (int i = 0; i <= 50; ++i) {
            const double p = an::facet_survival_probability(n, 200, i / 50.0);
            CHECK(p >= prev);
            prev = p;
        }
        double prev_m = 2.0;
        for (std::int64_t m : {10, 20, 50, 100, 1000}) {
            if (m <= n) continue;
            const double p = an::facet_survival_probability(n, m, 0.7);
            CHECK(p <= prev_m);
            prev_m = p;
        }
    }
    CHECK_THROWS_AS(an::facet_survival_probability(3, 3, 0.5), Error);
    CHECK_THROWS_AS(an::facet_survival_probability(3, 10, 1.5), Error);
}

TEST_CASE("facet upper bound formula") {
    const double expect = 100.0 * 99.0 * (16.0 * 2.0 * 4.0 * std::log(100.0) / 100.0) + 1.0;
    CHECK(rel_err(an::facet_upper_bound(2, 100), expect) < 1e-12);
    CHECK(rel_err(expect, 58343.0) < 1e-3);  // quoted rounding of the same expression

    // bound / (m (log m)^{n-1} C(m-1, n-1) / m^{n-1}) is constant in m
    const int n = 3;
    std::vector<double> scaled;
    for (std::int64_t m : {100, 1000, 10000}) {
        const double binom = (m - 1.0) * (m - 2.0) / 2.0;
        const double denom = m * binom * std::pow(std::log(static_cast<double>(m)) / m, n - 1);
        scaled.push_back((an::facet_upper_bound(n, m) - 1.0) / denom);
    }
    CHECK(rel_err(scaled[0], scaled[1]) < 1e-12);
    CHECK(rel_err(scaled[1], scaled[2]) < 1e-12);
    CHECK_THROWS_AS(an::facet_upper_bound(3, 5), Error);
}

TEST_CASE("borgwardt pivot bound") {
    const double base = (2.0 * kPi / 5.0) * (1.0 + std::exp(1.0) * kPi / 2.0);
    CHECK(rel_err(an::borgwardt_bound(2, 1), 81.0 * base) < 1e-12);
    CHECK(rel_err(81.0 * base, 536.32) < 1e-3);
    CHECK(rel_err(an::borgwardt_bound(3, 2000) / an::borgwardt_bound(3, 1000), std::sqrt(2.0)) <
          1e-12);
    CHECK_THROWS_AS(an::borgwardt_bound(1, 10), Error);
}

TEST_CASE("threshold property of the delta cap") {
    // With delta chosen so the cap fraction is 2(n+1) log m / m, a hyperplane
    // at distance 1 - delta survives with probability at most m^-(n+1) once
    // m >= 2n. Grid points where the target fraction exceeds 1/2 have no
    // attainable delta and must signal that instead.
    for (int n : {2, 3, 4}) {
        std::vector<std::int64_t> grid;
        for (std::int64_t m = 2 * n; m <= 60; ++m) grid.push_back(m);
        for (double x = 64; x <= 10000.0; x *= 1.5) grid.push_back(static_cast<std::int64_t>(x));
        grid.push_back(10000);
        for (std::int64_t m : grid) {
            const double target = 2.0 * (n + 1) * std::log(static_cast<double>(m)) / m;
            if (target > 0.5) {
                CHECK_THROWS_WITH_AS(geometry::solve_delta(n, m, 2.0 * (n + 1)),
                                     doctest::Contains("threshold-unattainable"), Error);
                continue;
            }
            const double delta = geometry::solve_delta(n, m, 2.0 * (n + 1));
            const double p = an::facet_survival_probability(n, m, 1.0 - delta);
            CHECK(p <= std::pow(static_cast<double>(m), -(n + 1.0)) * (1.0 + 1e-6));
        }
    }
}
