#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "gausswidth/hermite.hpp"
#include "gausswidth/quadrature.hpp"

using namespace gw;

TEST_SUITE("hermite") {

TEST_CASE("low-degree closed forms") {
    CHECK(hermite_eval(0, 1.7) == 1.0);
    CHECK(hermite_eval(1, -0.4) == -0.4);
    // H_2 = (x^2-1)/sqrt(2), H_3 = (x^3-3x)/sqrt(6)
    CHECK(std::sqrt(2.0) * hermite_eval(2, 0.3) ==
          doctest::Approx(-0.91).epsilon(1e-14));
    CHECK(hermite_eval(3, 2.0) ==
          doctest::Approx(2.0 / std::sqrt(6.0)).epsilon(1e-14));
    CHECK(hermite_eval(4, 0.0) ==
          doctest::Approx(3.0 / std::sqrt(24.0)).epsilon(1e-14));
}

TEST_CASE("hermite_all matches hermite_eval") {
    for (double x : {-3.7, 0.0, 1.1}) {
        auto all = hermite_all(60, x);
        REQUIRE(all.size() == 61);
        for (int k = 0; k <= 60; ++k)
            CHECK(all[k] == doctest::Approx(hermite_eval(k, x)).epsilon(1e-15));
    }
}

TEST_CASE("orthonormal under gamma") {
    auto rule = gauss_hermite_rule(32);
    for (int j = 0; j <= 12; ++j)
        for (int k = j; k <= 12; ++k) {
            double acc = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                acc += rule.weights[i] * hermite_eval(j, rule.nodes[i]) *
                       hermite_eval(k, rule.nodes[i]);
            // rounding floor: |Hj*Hk| reaches ~1e4 at the outer nodes, so the
            // 32-term sum carries ~1e-11 of noise; a wrong weight shows ~1e-2
            CHECK(std::abs(acc - (j == k ? 1.0 : 0.0)) <= 1e-10);
        }
}

TEST_CASE("high degree stays finite") {
    // normalized recurrence keeps values O(1) where physicists' would overflow
    double v = hermite_eval(500, 1.0);
    CHECK(std::isfinite(v));
    CHECK(std::abs(v) < 10.0);
}

TEST_CASE("tensor product") {
    MultiIndex k{2, 1};
    double x[2] = {0.3, 2.0};
    CHECK(hermite_tensor_eval(k, x) ==
          doctest::Approx(hermite_eval(2, 0.3) * hermite_eval(1, 2.0))
              .epsilon(1e-15));
    MultiIndex k0{0, 0};
    CHECK(hermite_tensor_eval(k0, x) == 1.0);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(hermite_eval(-1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(hermite_all(-2, 0.0), std::invalid_argument);
    MultiIndex k{1, 1};
    double x[1] = {0.0};
    CHECK_THROWS_AS(hermite_tensor_eval(k, {x, 1}), std::invalid_argument);
}

} // TEST_SUITE
