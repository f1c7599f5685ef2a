#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "gausswidth/quadrature.hpp"

using namespace gw;

namespace {
double moment(const QuadratureRule& r, int pow) {
    double acc = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] * std::pow(r.nodes[i], pow);
    return acc;
}
} // namespace

TEST_SUITE("quadrature") {

TEST_CASE("tiny rules are explicit") {
    auto r1 = gauss_hermite_rule(1);
    REQUIRE(r1.nodes.size() == 1);
    CHECK(std::abs(r1.nodes[0]) <= 1e-14);
    CHECK(r1.weights[0] == doctest::Approx(1.0).epsilon(1e-14));

    auto r2 = gauss_hermite_rule(2);
    REQUIRE(r2.nodes.size() == 2);
    CHECK(r2.nodes[0] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(r2.nodes[1] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r2.weights[0] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(r2.weights[1] == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("weights positive, sum to one, nodes symmetric ascending") {
    for (int n : {3, 16, 64, 256}) {
        auto r = gauss_hermite_rule(n);
        REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
        double sum = 0.0;
        for (double w : r.weights) {
            CHECK(w > 0.0);
            sum += w;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
        for (int i = 1; i < n; ++i) CHECK(r.nodes[i] > r.nodes[i - 1]);
        for (int i = 0; i < n; ++i)
            CHECK(std::abs(r.nodes[i] + r.nodes[n - 1 - i]) <= 1e-12);
    }
}

TEST_CASE("gaussian moments") {
    // E x^{2m} = (2m-1)!!, odd moments vanish; n=6 is exact through degree 11
    auto r = gauss_hermite_rule(6);
    CHECK(moment(r, 0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(moment(r, 2) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(moment(r, 4) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(moment(r, 6) == doctest::Approx(15.0).epsilon(1e-12));
    CHECK(moment(r, 8) == doctest::Approx(105.0).epsilon(1e-12));
    CHECK(moment(r, 10) == doctest::Approx(945.0).epsilon(1e-12));
    for (int p : {1, 3, 5, 7, 9, 11}) CHECK(std::abs(moment(r, p)) <= 1e-12);
}

TEST_CASE("exactness stops at degree 2n-1") {
    // any 3-point Gauss rule gives 9 for E x^6 (true value 15)
    auto r = gauss_hermite_rule(3);
    CHECK(moment(r, 6) == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(gauss_hermite_rule(0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_hermite_rule(4097), std::invalid_argument);
}

} // TEST_SUITE
