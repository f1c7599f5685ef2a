#include <doctest.h>

#include "gausswidth/norms.hpp"
#include "gausswidth/test_functions.hpp"

using namespace gw;

// The kink family |x1 - 0.3|^beta lies in the fractional space iff
// s < beta + d/p.  The detector reads the shell profile of the pair integral:
// a flat-or-rising contribution-per-shell slope means the singular mass keeps
// growing as radii shrink (divergent), a clearly negative slope means the
// integral concentrates and converges.  Power-law divergence (deep inside the
// divergent regime) is flagged reliably on a single run; log-divergence (on
// the membership boundary) concentrates so slowly that single runs can miss
// it, so boundary checks below take the flag OR-ed over a few seeds — the
// false-positive direction was clean over every seed tried, so OR is sound.
// The convergent side close to the boundary (e.g. beta=0.3, s=0.7) is left
// untested: its true shell slope is ~+0.05, indistinguishable from divergence
// at any affordable sample size.

namespace {

bool cube_flag(const char* id, double s, std::uint64_t seed) {
    TestFunction f = test_function(id, 1);
    IntegratorConfig cfg;
    cfg.points = 60000;
    cfg.seed = seed;
    return gagliardo_seminorm_cube(f, s, 2.0, Cube{-1.0, 1.0}, cfg).diverged;
}

bool gauss_flag(const char* id, double s, std::uint64_t seed) {
    TestFunction f = test_function(id, 1);
    IntegratorConfig cfg;
    cfg.points = 60000;
    cfg.seed = seed;
    return gagliardo_seminorm_gauss(f, s, 2.0, cfg).diverged;
}

} // namespace

TEST_SUITE("divergence") {

TEST_CASE("kink-1.5 is in W^{1.8} on the cube") {
    for (std::uint64_t seed : {1, 2, 3}) CHECK(!cube_flag("kink-1.5", 1.8, seed));
}

TEST_CASE("kink-1.5 falls out at s=2.2 on the cube") {
    bool any = false;
    for (std::uint64_t seed : {1, 2, 3}) any = any || cube_flag("kink-1.5", 2.2, seed);
    CHECK(any);
}

TEST_CASE("kink-1.5 is in W^{1.8} against gamma") {
    for (std::uint64_t seed : {1, 2, 3}) CHECK(!gauss_flag("kink-1.5", 1.8, seed));
}

TEST_CASE("kink-1.5 falls out at s=2.2 against gamma") {
    bool any = false;
    for (std::uint64_t seed : {1, 2, 3}) any = any || gauss_flag("kink-1.5", 2.2, seed);
    CHECK(any);
}

TEST_CASE("kink-0.3 diverges at s=0.9, single run") {
    for (std::uint64_t seed : {1, 2}) {
        CHECK(cube_flag("kink-0.3", 0.9, seed));
        CHECK(gauss_flag("kink-0.3", 0.9, seed));
    }
}

TEST_CASE("kink-0.3 converges at s=0.5") {
    CHECK(!cube_flag("kink-0.3", 0.5, 1));
}

TEST_CASE("divergent estimates still carry a profile") {
    TestFunction f = test_function("kink-0.3", 1);
    IntegratorConfig cfg;
    cfg.points = 60000;
    cfg.seed = 1;
    NormEstimate e = gagliardo_seminorm_cube(f, 0.9, 2.0, Cube{-1, 1}, cfg);
    CHECK(e.diverged);
    CHECK(!e.shell_profile.empty());
}

} // TEST_SUITE
