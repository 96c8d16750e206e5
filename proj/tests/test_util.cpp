#include "doctest.h"

#include "qlc/util.hpp"
#include "qlc/errors.hpp"

using namespace qlc;

TEST_CASE("parse_real accepts decimals and fractions") {
    CHECK(parse_real("0.25") == doctest::Approx(0.25));
    CHECK(parse_real("-1e-3") == doctest::Approx(-1e-3));
    CHECK(parse_real("-30/7") == doctest::Approx(-30.0 / 7).epsilon(1e-16));
    CHECK(parse_real("392/65") == doctest::Approx(392.0 / 65).epsilon(1e-16));
    CHECK_THROWS_AS(parse_real("abc"), Error);
    CHECK_THROWS_AS(parse_real("1/0"), Error);
    CHECK_THROWS_AS(parse_real("1.5x"), Error);
}

TEST_CASE("halton points fill the unit interval deterministically") {
    for (int i = 1; i <= 100; ++i) {
        const double v = halton(i, 2);
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
    CHECK(halton(1, 2) == doctest::Approx(0.5));
    CHECK(halton(2, 2) == doctest::Approx(0.25));
    CHECK(halton(1, 3) == doctest::Approx(1.0 / 3));
}
