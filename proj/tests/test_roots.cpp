#include "doctest.h"

#include <cmath>

#include "qlc/roots.hpp"

using namespace qlc;

TEST_CASE("bisection locates a simple root to the requested width") {
    auto f = [](double x) { return std::cos(x); };
    const double r = bisect(f, 1.0, 2.0, 1e-13);
    CHECK(r == doctest::Approx(3.14159265358979323846 / 2).epsilon(1e-12));
}

TEST_CASE("bisect throws on an invalid bracket") {
    auto f = [](double x) { return x * x + 1.0; };
    CHECK_THROWS_AS(bisect(f, -1.0, 1.0, 1e-10), LostBracket);
}

TEST_CASE("secant acceleration stays inside the bracket and converges") {
    auto f = [](double x) { return x * x * x - 2.0 * x - 5.0; };  // root ~ 2.0945515
    const double r = bisect_secant(f, 2.0, 3.0, f(2.0), f(3.0), 1e-12);
    CHECK(f(r) == doctest::Approx(0.0).epsilon(0).scale(1e-10));
    CHECK(r == doctest::Approx(2.0945514815423265).epsilon(1e-10));
}

TEST_CASE("outward bracketing finds the first sign change or gives up") {
    auto f = [](double x) { return 1.0 - x * x; };  // roots at +-1
    auto br = bracket_outward(f, 0.0, 0.01, 10.0);
    REQUIRE(br.has_value());
    CHECK(br->lo < 1.0);
    CHECK(br->hi > 1.0);
    CHECK(br->f_lo > 0.0);
    CHECK(br->f_hi < 0.0);

    auto none = bracket_outward([](double) { return 1.0; }, 0.0, 0.01, 5.0);
    CHECK_FALSE(none.has_value());

    // limit on the negative side
    auto brn = bracket_outward(f, 0.0, 0.01, -10.0);
    REQUIRE(brn.has_value());
    CHECK(brn->hi > -1.0);
    CHECK(brn->lo < -1.0);
}
