#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "gausswidth/expansion.hpp"
#include "gausswidth/test_functions.hpp"

using namespace gw;

TEST_SUITE("expansion") {

TEST_CASE("expand x^2") {
    // x^2 = 1 + sqrt(2) H_2
    auto e = expand([](std::span<const double> x) { return x[0] * x[0]; }, 1, 2, 8);
    CHECK(e.coeff({0}) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(e.coeff({1})) <= 1e-13);
    CHECK(e.coeff({2}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("expand/synthesize roundtrip") {
    HermiteExpansion e = hermite_poly_expansion(2);
    auto f = [&e](std::span<const double> x) { return synthesize(e, x); };
    HermiteExpansion back = expand(f, 2, 4, 8);
    for (const auto& [k, c] : e.coeffs)
        CHECK(back.coeff(k) == doctest::Approx(c).epsilon(1e-11));
    // nothing spurious shows up
    for (const auto& [k, c] : back.coeffs)
        if (e.coeffs.find(k) == e.coeffs.end()) CHECK(std::abs(c) <= 1e-11);
}

TEST_CASE("parseval and hs norms") {
    HermiteExpansion e1 = hermite_poly_expansion(1);
    CHECK(parseval_l2_norm(e1) ==
          doctest::Approx(std::sqrt(1.78)).epsilon(1e-14));
    CHECK(hs_norm(e1, 0.0) == doctest::Approx(parseval_l2_norm(e1)).epsilon(1e-14));
    // sum (1+k)^1 c_k^2 = 1 + 2*.49 + 3*.25 + 4*.04 = 2.89
    CHECK(hs_norm(e1, 1.0) == doctest::Approx(1.7).epsilon(1e-13));
    CHECK(hs_norm(e1, 2.0) > hs_norm(e1, 1.0));

    HermiteExpansion e2 = hermite_poly_expansion(2);
    CHECK(parseval_l2_norm(e2) ==
          doctest::Approx(std::sqrt(1.8425)).epsilon(1e-14));
    CHECK(e2.max_total_order() == 3);
    CHECK_THROWS_AS(hs_norm(e1, -0.5), std::invalid_argument);
}

TEST_CASE("coefficient-space derivative") {
    HermiteExpansion h2;
    h2.dim = 1;
    h2.set({2}, 1.0);
    HermiteExpansion d = derivative_expansion(h2, {1});
    CHECK(d.coeff({1}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(std::abs(d.coeff({2})) == 0.0);

    // first derivative of the fixed poly: c'_k = c_{k+1} sqrt(k+1)
    HermiteExpansion e = hermite_poly_expansion(1);
    HermiteExpansion de = derivative_expansion(e, {1});
    CHECK(de.coeff({0}) == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(de.coeff({1}) == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(de.coeff({2}) == doctest::Approx(0.2 * std::sqrt(3.0)).epsilon(1e-14));
    HermiteExpansion d2 = derivative_expansion(e, {2});
    CHECK(d2.coeff({0}) == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(d2.coeff({1}) == doctest::Approx(0.2 * std::sqrt(6.0)).epsilon(1e-14));

    HermiteExpansion m = hermite_poly_expansion(2);
    HermiteExpansion dm = derivative_expansion(m, {1, 0});
    CHECK(dm.coeff({0, 1}) == doctest::Approx(0.25).epsilon(1e-14));

    CHECK_THROWS_AS(derivative_expansion(e, {1, 0}), std::invalid_argument);
}

TEST_CASE("derivative agrees with pointwise slope") {
    HermiteExpansion e = hermite_poly_expansion(1);
    HermiteExpansion de = derivative_expansion(e, {1});
    double x = 0.37, h = 1e-6;
    double xp = x + h, xm = x - h;
    double fd = (synthesize(e, {&xp, 1}) - synthesize(e, {&xm, 1})) / (2 * h);
    CHECK(synthesize(de, {&x, 1}) == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("json roundtrip is byte-stable") {
    HermiteExpansion e = hermite_poly_expansion(2);
    std::string s1 = to_json_string(e);
    HermiteExpansion back = expansion_from_json(s1);
    CHECK(to_json_string(back) == s1);
    CHECK(back.dim == 2);
    CHECK(back.coeff({1, 1}) == 0.25);
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial({3, 2}, {1, 1}) == doctest::Approx(6.0));
    CHECK(falling_factorial({5}, {0}) == doctest::Approx(1.0));
    CHECK(falling_factorial({4}, {4}) == doctest::Approx(24.0));
}

TEST_CASE("index enumeration") {
    auto idx = indices_up_to_order(2, 2);
    CHECK(idx.size() == 6);
    CHECK(order(idx.back()) <= 2);
}

TEST_CASE("errors") {
    auto f = [](std::span<const double>) { return 0.0; };
    CHECK_THROWS_AS(expand(f, 1, 5, 4), std::invalid_argument); // rule too small
    CHECK_THROWS_AS(expand(f, 3, 2, 200), std::invalid_argument); // node cap
    HermiteExpansion e = hermite_poly_expansion(1);
    double x[2] = {0.0, 0.0};
    CHECK_THROWS_AS(synthesize(e, {x, 2}), std::invalid_argument);
    CHECK_THROWS_AS(e.set({-1}, 1.0), std::invalid_argument);
}

} // TEST_SUITE
