#include "doctest.h"

#include "qlc/integrable.hpp"
#include "qlc/model.hpp"

using namespace qlc;

TEST_CASE("validation accepts the benchmark parameter sets") {
    const ReversibleParams a = validate_reversible({-3.0, -8.0 / 3});
    CHECK(a.two_center);
    const ReversibleParams c = validate_reversible({-4.0, -18.0 / 5});
    CHECK(c.two_center);
    const ReversibleParams s = validate_reversible({2.0, 3.0});
    CHECK_FALSE(s.two_center);
}

TEST_CASE("validation rejects the excluded degeneracies by name") {
    CHECK_THROWS_WITH_AS(validate_reversible({-2.0, -1.0}), "a1 = 2*a4",
                         DegenerateParameters);
    CHECK_THROWS_AS(validate_reversible({-3.0, 0.0}), DegenerateParameters);
    CHECK_THROWS_AS(validate_reversible({-3.0, -3.0}), DegenerateParameters);
    CHECK_THROWS_AS(validate_reversible({0.0, 1.0}), DegenerateParameters);
    CHECK_THROWS_AS(validate_reversible({-1.0, 2.0}), DegenerateParameters);
    // tolerance window
    CHECK_THROWS_AS(validate_reversible({-2.0, -1.0 + 1e-13}), DegenerateParameters);
}

TEST_CASE("validation is idempotent") {
    const ReversibleParams p = validate_reversible({-30.0 / 7, -65.0 / 21});
    const ReversibleParams q = validate_reversible(p);
    CHECK(q.a1 == p.a1);
    CHECK(q.a4 == p.a4);
    CHECK(q.two_center == p.two_center);
}

TEST_CASE("level admissibility is enforced against the critical levels") {
    const ReversibleParams p = validate_reversible({-4.0, -18.0 / 5});
    const CriticalLevels cl = critical_levels(p);
    CHECK_NOTHROW(LevelSet(cl.h00 + 0.01, Region::Left, cl));
    CHECK_NOTHROW(LevelSet(cl.h10 - 0.01, Region::Right, cl));
    CHECK_THROWS_AS(LevelSet(cl.h00 - 0.01, Region::Left, cl), NoOval);
    CHECK_THROWS_AS(LevelSet(cl.h00, Region::Left, cl), NoOval);
    CHECK_THROWS_AS(LevelSet(cl.h10 + 0.01, Region::Right, cl), NoOval);
    CHECK_THROWS_AS(LevelSet(cl.h10, Region::Right, cl), NoOval);
}

TEST_CASE("singular abscissa") {
    const ReversibleParams p = validate_reversible({-4.0, -18.0 / 5});
    CHECK(singular_abscissa(p) == doctest::Approx(0.25));
}
