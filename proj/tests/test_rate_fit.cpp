#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "gausswidth/rate_fit.hpp"

using namespace gw;

TEST_SUITE("rate-fit") {

TEST_CASE("exact power law") {
    std::vector<std::pair<double, double>> pts;
    for (double n : {16.0, 32.0, 64.0, 128.0, 256.0})
        pts.emplace_back(n, 5.0 * std::pow(n, -2.0));
    RateFit rf = rate_fit(pts);
    CHECK(rf.slope == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(rf.intercept == doctest::Approx(std::log(5.0)).epsilon(1e-12));
    CHECK(rf.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rf.slope_lo90 <= rf.slope);
    CHECK(rf.slope_hi90 >= rf.slope);
}

TEST_CASE("noise does not move the slope far") {
    std::vector<std::pair<double, double>> pts;
    int i = 0;
    for (double n = 8; n <= 4096; n *= 2, ++i)
        pts.emplace_back(n, 3.0 / n * (1.0 + 0.05 * std::sin(1.7 * i)));
    RateFit rf = rate_fit(pts);
    CHECK(rf.slope >= -1.1);
    CHECK(rf.slope <= -0.9);
    CHECK(rf.r_squared >= 0.95);
    CHECK(rf.slope_lo90 <= rf.slope_hi90);
}

TEST_CASE("flat data has slope near zero") {
    std::vector<std::pair<double, double>> pts;
    for (double n : {10.0, 100.0, 1000.0, 10000.0}) pts.emplace_back(n, 0.4);
    RateFit rf = rate_fit(pts);
    CHECK(std::abs(rf.slope) <= 1e-12);
}

TEST_CASE("bootstrap is deterministic per seed") {
    std::vector<std::pair<double, double>> pts;
    int i = 0;
    for (double n = 16; n <= 1024; n *= 2, ++i)
        pts.emplace_back(n, std::pow(n, -1.5) * (1.0 + 0.1 * std::cos(i)));
    RateFit a = rate_fit(pts, 200, 7);
    RateFit b = rate_fit(pts, 200, 7);
    CHECK(a.slope_lo90 == b.slope_lo90);
    CHECK(a.slope_hi90 == b.slope_hi90);
    RateFit c = rate_fit(pts, 200, 8);
    CHECK((c.slope_lo90 != a.slope_lo90 || c.slope_hi90 != a.slope_hi90));
}

TEST_CASE("errors") {
    std::vector<std::pair<double, double>> three{{1, 1}, {2, 0.5}, {4, 0.25}};
    CHECK_THROWS_AS(rate_fit(three), std::invalid_argument);
    std::vector<std::pair<double, double>> neg{{1, 1}, {2, -0.5}, {4, 0.25}, {8, 0.1}};
    CHECK_THROWS_AS(rate_fit(neg), std::invalid_argument);
    std::vector<std::pair<double, double>> same{{2, 1}, {2, 0.5}, {2, 0.25}, {2, 0.1}};
    CHECK_THROWS_AS(rate_fit(same), std::invalid_argument);
    std::vector<std::pair<double, double>> ok{{1, 1}, {2, 0.5}, {4, 0.25}, {8, 0.125}};
    CHECK_THROWS_AS(rate_fit(ok, 0), std::invalid_argument);
}

} // TEST_SUITE
