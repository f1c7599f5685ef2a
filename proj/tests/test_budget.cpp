#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "gausswidth/budget.hpp"

using namespace gw;

TEST_SUITE("budget") {

TEST_CASE("auxiliary exponents, isotropic") {
    AuxParams a = choose_aux_params(2.0, 1.0, 2.0, 1);
    CHECK(a.q_star == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(a.p_star == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
    CHECK(std::tanh(a.t0 / 2.0) == doctest::Approx(0.125).epsilon(1e-13));
    CHECK(a.exponent1 == doctest::Approx(0.0375).epsilon(1e-12));
    CHECK(a.exponent2 == doctest::Approx(0.1875).epsilon(1e-13));
    CHECK(a.delta == doctest::Approx(0.03375).epsilon(1e-12));
    CHECK(a.a == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(a.b == 0.0);
    CHECK(a.exponent1 > 0.0);

    AuxParams b = choose_aux_params(4.0, 2.0, 1.0, 2);
    CHECK(std::tanh(b.t0 / 2.0) == doctest::Approx(0.125).epsilon(1e-13));
    CHECK(b.a == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("auxiliary exponents, gaussian-gagliardo flavor") {
    // needs q < p/2; the interior points sit inside (q, p/2) and (p/2, p)
    AuxParams g = choose_aux_params(3.0, 1.0, 1.0, 1, SpaceFlavor::GaussGagliardo);
    CHECK(g.q_star == doctest::Approx(7.0 / 6.0).epsilon(1e-14));
    CHECK(g.p_star == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
    CHECK(g.exponent1 == doctest::Approx(3.0 / 56.0).epsilon(1e-12));
    CHECK(g.exponent2 == doctest::Approx(2.0 / 7.0).epsilon(1e-13));
    CHECK(g.delta == doctest::Approx(27.0 / 560.0).epsilon(1e-12));
    CHECK_THROWS_AS(choose_aux_params(2.0, 1.0, 1.0, 1, SpaceFlavor::GaussGagliardo),
                    std::invalid_argument);
}

TEST_CASE("auxiliary exponents, mixed flavor") {
    AuxParams m = choose_aux_params(2.0, 1.0, 1.5, 3, SpaceFlavor::Mixed);
    CHECK(m.a == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(m.b == doctest::Approx(3.0).epsilon(1e-14)); // (d-1)(s + 1/2 - 1/p)
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(choose_aux_params(2.0, 2.0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(choose_aux_params(2.0, 0.5, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(choose_aux_params(1.0, 2.0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(choose_aux_params(2.0, 1.0, 0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(choose_aux_params(2.0, 1.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("normalizer series") {
    // ratio delta/(2a) = 1: denominator 1 + 2 sum_j e^{-j^2}
    CHECK(rho_constant(2.0, 1.0, 1) ==
          doctest::Approx(0.564131226218842).epsilon(1e-12));
    // d=2 shells carry 8j cells each
    CHECK(rho_constant(2.0, 1.0, 2) ==
          doctest::Approx(0.23590184584140989).epsilon(1e-12));
    double r = rho_constant(200.0, 0.5, 1);
    CHECK(r <= 1.0);
    CHECK(r == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_THROWS_AS(rho_constant(0.0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(rho_constant(1.0, -1.0, 1), std::invalid_argument);
}

TEST_CASE("allocation on the worked point") {
    AuxParams a = choose_aux_params(2.0, 1.0, 2.0, 1); // delta=0.03375, a=2
    BudgetAllocation al = allocate(10000, a);
    CHECK(al.xi == doctest::Approx(33.0393083453319).epsilon(1e-10));
    CHECK(al.total <= 10000);
    CHECK(al.total >= 8000); // floors and the shell cap waste only a sliver
    CHECK(al.rho > 0.0);
    CHECK(al.rho <= 1.0);

    // budgets fall off monotonically in |k|
    long long at0 = -1;
    for (const auto& [k, b] : al.cells)
        if (k[0] == 0) at0 = b;
    REQUIRE(at0 >= 0);
    for (const auto& [k, b] : al.cells) {
        CHECK(b <= at0);
        CHECK(b >= 0);
    }
}

TEST_CASE("feasibility sweep") {
    const double ps[3] = {2.0, 3.0, 4.0};
    const double qs[3] = {1.0, 2.0, 1.0};
    for (int i = 0; i < 3; ++i)
        for (int d : {1, 2}) {
            AuxParams a = choose_aux_params(ps[i], qs[i], 1.5, d);
            for (long long n = 2; n <= 1'000'000; n *= 10) {
                BudgetAllocation al = allocate(n, a);
                CHECK(al.total <= n);
                CHECK(!al.cells.empty());
            }
        }
}

TEST_CASE("allocation edge cases") {
    AuxParams a = choose_aux_params(2.0, 1.0, 2.0, 1);
    BudgetAllocation two = allocate(2, a);
    CHECK(two.total <= 2);
    CHECK_THROWS_AS(allocate(1, a), std::invalid_argument);
    AuxParams blank;
    blank.delta = 0.0;
    CHECK_THROWS_AS(allocate(100, blank), std::invalid_argument);
}

} // TEST_SUITE
