#include "doctest.h"

#include <cmath>
#include <random>

#include "qlc/integrable.hpp"
#include "qlc/roots.hpp"
#include "test_helpers.hpp"

using namespace qlc;

namespace {
const ReversibleParams kCaseA = validate_reversible({-30.0 / 7, -65.0 / 21});
const ReversibleParams kCaseB = validate_reversible({-70.0 / 51, -55.0 / 51});
const ReversibleParams kCaseC = validate_reversible({-4.0, -18.0 / 5});
const ReversibleParams kCaseD = validate_reversible({-4.0 / 3, -6.0 / 5});
const ReversibleParams kCaseE = validate_reversible({-5.0, -4.0});
} // namespace

TEST_CASE("integrating factor spot values") {
    CHECK(gamma_factor(0.0, kCaseC) == doctest::Approx(1.0).epsilon(1e-15));
    // zero exponent: a1 + 2 a4 = 0
    const ReversibleParams z = validate_reversible({-2.0, 1.0});
    CHECK(gamma_factor(0.37, z) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gamma_factor(-1.2, z) == doctest::Approx(1.0).epsilon(1e-15));
    // |0.5|^(-13/5), frozen from a 50-digit evaluation
    CHECK(gamma_factor(0.1, kCaseE) ==
          doctest::Approx(6.062866266041592).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_factor(0.2, kCaseE), SingularLine);
}

TEST_CASE("first integral matches the closed critical values") {
    CHECK(first_integral(0.0, 0.0, kCaseA) ==
          doctest::Approx(-441.0 / 32500).epsilon(1e-14));
    CHECK(first_integral(1.0, 0.0, kCaseE) ==
          doctest::Approx(-std::pow(2.0, -21.0 / 5)).epsilon(1e-14));
}

TEST_CASE("first integral is even in y") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> ux(-0.5, 0.15), uy(-2.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const double x = ux(rng), y = uy(rng);
        CHECK(first_integral(x, y, kCaseC) ==
              doctest::Approx(first_integral(x, -y, kCaseC)).epsilon(1e-15));
    }
}

TEST_CASE("critical levels match the closed forms of the benchmark cases") {
    const CriticalLevels b = critical_levels(kCaseB);
    CHECK(b.h00 == doctest::Approx(7803.0 / 5500).epsilon(1e-14));
    CHECK(b.h10 ==
          doctest::Approx(-44217.0 / 104500 * std::pow(19.0 / 51, 3.0 / 7))
              .epsilon(1e-14));
    const CriticalLevels c = critical_levels(kCaseC);
    CHECK(c.h00 == doctest::Approx(25.0 / 384).epsilon(1e-14));
    CHECK(c.h10 == doctest::Approx(-325.0 / 3456 * std::pow(3.0, 0.2)).epsilon(1e-14));
    const CriticalLevels d = critical_levels(kCaseD);
    CHECK(d.h00 == doctest::Approx(325.0 / 128).epsilon(1e-14));
    CHECK(d.h10 == doctest::Approx(-75.0 / 128 * std::pow(3.0, 0.8)).epsilon(1e-14));
}

TEST_CASE("critical levels agree with the first integral at both centers") {
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        const ReversibleParams p = qlc_test::random_two_center(rng);
        const CriticalLevels cl = critical_levels(p);
        const double h00 = first_integral(0.0, 0.0, p);
        const double h10 = first_integral(1.0, 0.0, p);
        CHECK(std::fabs(cl.h00 - h00) <= 1e-12 * std::max(1.0, std::fabs(h00)));
        CHECK(std::fabs(cl.h10 - h10) <= 1e-12 * std::max(1.0, std::fabs(h10)));
    }
}

TEST_CASE("y_plus vanishes at the centers on their own levels") {
    const CriticalLevels cl = critical_levels(kCaseC);
    CHECK(y_plus_sq(0.0, cl.h00, kCaseC) == doctest::Approx(0.0).scale(1e-14));
    CHECK(y_plus_sq(1.0, cl.h10, kCaseC) == doctest::Approx(0.0).scale(1e-14));
}

TEST_CASE("y_plus inverts the first integral (bisection oracle)") {
    const CriticalLevels cl = critical_levels(kCaseC);
    const LevelSet ls(cl.h00 + 0.01, Region::Left, cl);
    const auto yp = y_plus(0.05, ls, kCaseC);
    REQUIRE(yp.has_value());
    CHECK(*yp > 0.0);
    CHECK(first_integral(0.05, *yp, kCaseC) == doctest::Approx(ls.h).epsilon(1e-10));

    // independent route: solve H(0.05, y) = h for y by bisection
    auto f = [&](double y) { return first_integral(0.05, y, kCaseC) - ls.h; };
    const double y_oracle = bisect(f, 0.0, 1.0, 1e-14);
    CHECK(*yp == doctest::Approx(y_oracle).epsilon(1e-10));

    // far outside the oval the bracket is negative
    CHECK_FALSE(y_plus(-5.0, ls, kCaseC).has_value());
    // wrong side of the singular line
    CHECK_THROWS_AS(y_plus(0.5, ls, kCaseC), SingularLine);
}

TEST_CASE("turning points bracket the enclosed center") {
    const CriticalLevels cl = critical_levels(kCaseC);
    const LevelSet ls(0.1448192224, Region::Left, cl);
    const TurningPoints tp = turning_points(ls, kCaseC);
    CHECK(tp.x_min < 0.0);
    CHECK(tp.x_max > 0.0);
    CHECK(tp.x_max < singular_abscissa(kCaseC));
    // the turning points sit on the level: H(x,0) = h
    CHECK(first_integral(tp.x_min, 0.0, kCaseC) == doctest::Approx(ls.h).epsilon(1e-10));
    CHECK(first_integral(tp.x_max, 0.0, kCaseC) == doctest::Approx(ls.h).epsilon(1e-10));
    // y_plus is positive strictly inside
    const LevelSet lsi = ls;
    CHECK(y_plus(0.5 * (tp.x_min + tp.x_max), lsi, kCaseC).value() > 0.0);
}

TEST_CASE("ovals shrink onto the centers at the critical levels") {
    const CriticalLevels cl = critical_levels(kCaseA);
    {
        const LevelSet ls(cl.h00 + 1e-6, Region::Left, cl);
        const TurningPoints tp = turning_points(ls, kCaseA);
        CHECK(std::fabs(tp.x_min) < 0.01);
        CHECK(std::fabs(tp.x_max) < 0.01);
        CHECK(tp.x_min < 0.0);
        CHECK(tp.x_max > 0.0);
    }
    {
        const LevelSet ls(cl.h10 - 1e-6, Region::Right, cl);
        const TurningPoints tp = turning_points(ls, kCaseA);
        CHECK(std::fabs(tp.x_min - 1.0) < 0.01);
        CHECK(std::fabs(tp.x_max - 1.0) < 0.01);
        CHECK(tp.x_min < 1.0);
        CHECK(tp.x_max > 1.0);
    }
}

TEST_CASE("levels too close to a center are rejected as NoOval") {
    const CriticalLevels cl = critical_levels(kCaseC);
    const LevelSet ls(cl.h00 + 1e-10, Region::Left, cl);
    CHECK_THROWS_AS(turning_points(ls, kCaseC), NoOval);
}

TEST_CASE("transformed field is divergence free away from the singular line") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    for (const ReversibleParams& p : {kCaseA, kCaseC}) {
        const double step = 1e-6;
        double worst = 0.0;
        int used = 0;
        while (used < 1000) {
            const double x = u(rng), y = u(rng);
            if (std::fabs(1.0 + p.a1 * x) < 0.3 ||
                std::fabs(1.0 + p.a1 * (x + step)) < 0.3 ||
                std::fabs(1.0 + p.a1 * (x - step)) < 0.3)
                continue;
            ++used;
            auto P = [&](double xx, double yy) {
                return gamma_factor(xx, p) * yy * (1.0 + p.a1 * xx);
            };
            auto Q = [&](double xx, double yy) {
                return gamma_factor(xx, p) * (-xx + xx * xx + p.a4 * yy * yy);
            };
            const double div = (P(x + step, y) - P(x - step, y)) / (2 * step)
                + (Q(x, y + step) - Q(x, y - step)) / (2 * step);
            worst = std::max(worst, std::fabs(div));
        }
        CHECK(worst <= 1e-6);
    }
}

TEST_CASE("hamiltonian-class first integral") {
    CHECK(first_integral_hamiltonian(0.0, 0.0, -3.0, 0.7) == doctest::Approx(0.0));
    CHECK(first_integral_hamiltonian(1.0, 0.0, -3.0, 0.7) ==
          doctest::Approx(1.0 / 6).epsilon(1e-15));
    // conservation along the class field (RK4 oracle)
    const double a1 = -2.5, a2 = 0.4;
    auto f = [a1, a2](double x, double y) -> std::array<double, 2> {
        return {y + a1 * x * y + a2 * y * y, -x + x * x - 0.5 * a1 * y * y};
    };
    auto F = [a1, a2](double x, double y) {
        return first_integral_hamiltonian(x, y, a1, a2);
    };
    CHECK(qlc_test::conservation_drift(f, F, 0.15, 0.0, 50.0, 500000) <= 1e-9);
}

TEST_CASE("lotka-volterra-class first integral is conserved on both branches") {
    // negative discriminant: a3^2 + 4 (1+a1) < 0
    {
        const double a1 = -2.0, a3 = 0.0;
        auto f = [a1, a3](double x, double y) -> std::array<double, 2> {
            return {y + a1 * x * y, -x + x * x + a3 * x * y - y * y};
        };
        auto F = [a1, a3](double x, double y) {
            return first_integral_lv(x, y, a1, a3);
        };
        CHECK(qlc_test::conservation_drift(f, F, 0.1, 0.0, 20.0, 200000) <= 1e-7);
    }
    // positive discriminant: a3^2 + 4 (1+a1) > 0
    {
        const double a1 = 0.5, a3 = 1.0;
        auto f = [a1, a3](double x, double y) -> std::array<double, 2> {
            return {y + a1 * x * y, -x + x * x + a3 * x * y - y * y};
        };
        auto F = [a1, a3](double x, double y) {
            return first_integral_lv(x, y, a1, a3);
        };
        CHECK(qlc_test::conservation_drift(f, F, 0.1, 0.05, 20.0, 200000) <= 1e-7);
    }
}

TEST_CASE("codimension-4 first integral") {
    CHECK_THROWS_AS(first_integral_q4(0.1, 0.1, 0.0), DivisionByZero);
    for (double a2 : {0.5, 1.0, 2.0}) {
        const double expected = -(1.0 + a2 * a2) / (12.0 * std::pow(a2, 6.0));
        CHECK(first_integral_q4(0.0, 0.0, a2) == doctest::Approx(expected).epsilon(1e-14));
    }
    const double a2 = 1.0;
    auto f = [a2](double x, double y) -> std::array<double, 2> {
        return {y - (1.0 + 6.0 * a2 * a2) * x * y + a2 * y * y,
                -x + x * x + 5.0 * a2 * x * y - 2.0 * (1.0 + a2 * a2) * y * y};
    };
    auto F = [a2](double x, double y) { return first_integral_q4(x, y, a2); };
    CHECK(qlc_test::conservation_drift(f, F, 0.1, 0.0, 20.0, 200000) <= 1e-7);
}
