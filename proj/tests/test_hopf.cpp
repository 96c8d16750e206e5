#include "doctest.h"

#include <cmath>
#include <random>

#include "qlc/cases.hpp"
#include "qlc/hopf.hpp"
#include "test_helpers.hpp"

using namespace qlc;

namespace {

constexpr double kPi = 3.14159265358979323846;

Perturbation case_perturbation(const CaseSpec& c, double a10 = 1.0) {
    Perturbation q;
    q.a10 = a10;
    q.b01 = c.b01_over_a10 * a10;
    q.b11 = c.b11_over_a10 * a10;
    return q;
}

double rel_err(double computed, double expected) {
    return std::fabs(computed - expected) / std::max(std::fabs(expected), 1e-300);
}

} // namespace

TEST_CASE("mu00 vanishes when b01 = -a10") {
    const ReversibleParams p = validate_reversible({-3.0, -8.0 / 3});
    Perturbation q{0.0, 1.0, -1.0, 3.7};
    CHECK(mu_coefficients(p, q).mu0[0] == 0.0);
}

TEST_CASE("coefficient spot values of the benchmark cases") {
    for (const CaseSpec& c : case_table()) {
        const ReversibleParams p = validate_reversible({c.a1, c.a4});
        const MuCoefficients mu = mu_coefficients(p, case_perturbation(c));
        for (const MuSpot& s : c.mu_spots) {
            const double computed = (s.row == 0) ? mu.mu0[s.index] : mu.mu1[s.index];
            INFO("case ", c.label, " ", s.name);
            CHECK(rel_err(computed, s.expected) <= 1e-12);
        }
    }
}

TEST_CASE("linear solves of the expansion chain") {
    CHECK(solve_b01_zero_mu00(1.0) == -1.0);
    CHECK(solve_b01_zero_mu00(0.0) == 0.0);

    const ReversibleParams pa = validate_reversible({-30.0 / 7, -65.0 / 21});
    CHECK(solve_b11_zero_mu01(pa, 1.0) == doctest::Approx(230.0 / 21).epsilon(1e-14));
    const ReversibleParams pc = validate_reversible({-4.0, -18.0 / 5});
    CHECK(solve_b11_zero_mu01(pc, 1.0) == doctest::Approx(392.0 / 65).epsilon(1e-14));
    CHECK_THROWS_AS(solve_b11_zero_mu01(validate_reversible({-3.0, -1.0}), 1.0),
                    DegenerateParameters);

    CHECK(solve_a4_zero_mu02(-30.0 / 7) == doctest::Approx(-65.0 / 21).epsilon(1e-15));
    CHECK(solve_a4_zero_mu12(-70.0 / 51) == doctest::Approx(-55.0 / 51).epsilon(1e-15));

    const ReversibleParams pb = validate_reversible({-70.0 / 51, -55.0 / 51});
    const RightChain cb = solve_chain_right(pb, 1.0);
    CHECK(cb.b11 == doctest::Approx(8670.0 / 361).epsilon(1e-13));
    CHECK(cb.b01 == doctest::Approx(-5611.0 / 361).epsilon(1e-13));
    const ReversibleParams pd = validate_reversible({-4.0 / 3, -6.0 / 5});
    const RightChain cd = solve_chain_right(pd, 1.0);
    CHECK(cd.b11 == doctest::Approx(1176.0 / 65).epsilon(1e-13));
    CHECK(cd.b01 == doctest::Approx(-513.0 / 65).epsilon(1e-13));

    CHECK_THROWS_AS(solve_chain_right(validate_reversible({-2.0, -1.0 + 1e-20}), 1.0),
                    DegenerateParameters);
}

TEST_CASE("the two chains zero their first three coefficients exactly") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> u(-10.0, -1.01);
    const double a10 = 1.75;
    int tested = 0;
    while (tested < 50) {
        const double a1 = u(rng);
        // chain toward three cycles at the origin
        {
            const double a4 = solve_a4_zero_mu02(a1);
            ReversibleParams p;
            try {
                p = validate_reversible({a1, a4});
            } catch (const Error&) {
                continue;
            }
            Perturbation q{0.0, a10, solve_b01_zero_mu00(a10),
                           solve_b11_zero_mu01(p, a10)};
            const MuCoefficients mu = mu_coefficients(p, q);
            CHECK(std::fabs(mu.mu0[0]) <= 1e-12 * a10);
            CHECK(std::fabs(mu.mu0[1]) <= 1e-12 * a10);
            CHECK(std::fabs(mu.mu0[2]) <= 1e-12 * a10);
        }
        // chain toward three cycles at (1,0)
        {
            const double a4 = solve_a4_zero_mu12(a1);
            ReversibleParams p;
            try {
                p = validate_reversible({a1, a4});
            } catch (const Error&) {
                continue;
            }
            const RightChain c = solve_chain_right(p, a10);
            Perturbation q{0.0, a10, c.b01, c.b11};
            const MuCoefficients mu = mu_coefficients(p, q);
            CHECK(std::fabs(mu.mu1[0]) <= 1e-12 * a10);
            CHECK(std::fabs(mu.mu1[1]) <= 1e-12 * a10);
            CHECK(std::fabs(mu.mu1[2]) <= 1e-12 * a10);
        }
        ++tested;
    }
}

TEST_CASE("general coefficients agree with the reduced closed forms") {
    std::mt19937 rng(9);
    for (int i = 0; i < 25; ++i) {
        const ReversibleParams p = qlc_test::random_two_center(rng);
        const double a1 = p.a1, a4 = p.a4, a10 = 2.2;
        // after the first two origin solves
        {
            Perturbation q{0.0, a10, -a10, solve_b11_zero_mu01(p, a10)};
            const MuCoefficients mu = mu_coefficients(p, q);
            const double mu02_red = kPi / 3 * a1 * (a1 - a4) * (a1 + 2 * a4)
                * (a1 - 3 * a4 - 5) * a10;
            const double mu03_red = -kPi / 144 * a1 * (a1 - a4) * (a1 + 2 * a4)
                * (770 + 105 * a1 + 1400 * a4 + 42 * a1 * a1 - 434 * a1 * a4
                   + 1274 * a4 * a4 - 13 * a1 * a1 * a1 + 128 * a1 * a1 * a4
                   - 415 * a1 * a4 * a4 + 444 * a4 * a4 * a4) * a10;
            const double mu10_red = -2 * kPi
                / ((1 + a4) * std::pow(-1.0 - a1, 1.5)) * a1 * (a1 - a4)
                * (a1 + 2 * a4) * a10;
            CHECK(rel_err(mu.mu0[2], mu02_red) <= 1e-12);
            CHECK(rel_err(mu.mu0[3], mu03_red) <= 1e-11);
            CHECK(rel_err(mu.mu1[0], mu10_red) <= 1e-12);
        }
        // after the first two (1,0) solves
        {
            const RightChain c = solve_chain_right(p, a10);
            Perturbation q{0.0, a10, c.b01, c.b11};
            const MuCoefficients mu = mu_coefficients(p, q);
            const double mu12_red = kPi / 3
                * std::pow(-1.0 - a1, -(5 * a1 - 8 * a4) / (2 * a1)) * a1
                * (a1 - a4) * (a1 + 2 * a4) * (6 * a1 - 3 * a4 + 5) * a10;
            const double mu13_red = kPi / 288
                * std::pow(-1.0 - a1, -2 * (a1 - 3 * a4) / a1) * a1 * (a1 - a4)
                * (a1 + 2 * a4)
                * (770 + 2205 * a1 - 1400 * a4 + 2142 * a1 * a1 - 3234 * a1 * a4
                   + 1274 * a4 * a4 - 720 * a1 * a1 * a1 - 1962 * a1 * a1 * a4
                   + 1689 * a1 * a4 * a4 - 444 * a4 * a4 * a4) * a10;
            const double mu00_red = 2 * kPi / ((1 + a1) * (1 + a1) * (a1 - a4 + 1))
                * a1 * (a1 - a4) * (a1 + 2 * a4) * a10;
            CHECK(rel_err(mu.mu1[2], mu12_red) <= 1e-11);
            CHECK(rel_err(mu.mu1[3], mu13_red) <= 1e-11);
            CHECK(rel_err(mu.mu0[0], mu00_red) <= 1e-12);
        }
        // the balanced pair after zeroing both leading coefficients
        {
            Perturbation q{0.0, a10, -a10, (a1 + 2 * a4) / (1 + a1) * a10};
            const MuCoefficients mu = mu_coefficients(p, q);
            const double mu01_red =
                kPi / (1 + a1) * a1 * (a1 - a4) * (a1 + 2 * a4) * a10;
            const double mu11_red = -kPi
                * std::pow(-1.0 - a1, -2 * (a1 - a4) / a1) * a1 * (a1 - a4)
                * (a1 + 2 * a4) * a10;
            CHECK(std::fabs(mu.mu1[0]) <= 1e-12 * a10);
            CHECK(rel_err(mu.mu0[1], mu01_red) <= 1e-12);
            CHECK(rel_err(mu.mu1[1], mu11_red) <= 1e-11);
        }
    }
}

TEST_CASE("shared factor zeroes both rows together") {
    // a1 + 2 a4 = 0 kills the cubic origin coefficient and the leading (1,0)
    // coefficient simultaneously after the origin chain.
    const ReversibleParams p = validate_reversible({-3.0, 1.5});
    const double a10 = 1.0;
    Perturbation q{0.0, a10, -a10, solve_b11_zero_mu01(p, a10)};
    const MuCoefficients mu = mu_coefficients(p, q);
    CHECK(std::fabs(mu.mu0[2]) <= 1e-12);
    CHECK(std::fabs(mu.mu1[0]) <= 1e-12);
    // and at a generic point both are nonzero
    const ReversibleParams g = validate_reversible({-3.0, -1.4});
    Perturbation qg{0.0, a10, -a10, solve_b11_zero_mu01(g, a10)};
    const MuCoefficients mug = mu_coefficients(g, qg);
    CHECK(std::fabs(mug.mu0[2]) > 1e-6);
    CHECK(std::fabs(mug.mu1[0]) > 1e-6);
}

TEST_CASE("coefficients are jointly homogeneous in the perturbation") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        const ReversibleParams p = qlc_test::random_two_center(rng);
        Perturbation q{0.0, u(rng), u(rng), u(rng)};
        Perturbation qs{0.0, 2.5 * q.a10, 2.5 * q.b01, 2.5 * q.b11};
        const MuCoefficients a = mu_coefficients(p, q);
        const MuCoefficients b = mu_coefficients(p, qs);
        for (int k = 0; k < 4; ++k) {
            CHECK(b.mu0[k] == doctest::Approx(2.5 * a.mu0[k]).epsilon(1e-13));
            CHECK(b.mu1[k] == doctest::Approx(2.5 * a.mu1[k]).epsilon(1e-13));
        }
    }
}

TEST_CASE("distribution solves and impossibility") {
    {
        const ReversibleParams p = validate_reversible({-30.0 / 7, -1.0 / 3});
        const Distribution d = distribution(p, {3, 0}, 1.0);
        CHECK(d.possible);
        CHECK(d.a4 == doctest::Approx(-65.0 / 21).epsilon(1e-14));
        CHECK(d.b01 == doctest::Approx(-1.0));
        CHECK(d.b11 == doctest::Approx(230.0 / 21).epsilon(1e-13));
    }
    {
        // 2 a1 + 5 = 0 kills the surviving coefficient of the origin chain
        const ReversibleParams p = validate_reversible({-5.0 / 2, -0.7});
        CHECK_THROWS_AS(distribution(p, {3, 0}, 1.0), DegenerateParameters);
    }
    {
        const ReversibleParams p = validate_reversible({-70.0 / 51, -55.0 / 51});
        const Distribution d = distribution(p, {0, 3}, 1.0);
        CHECK(d.possible);
        CHECK(d.b01 == doctest::Approx(-5611.0 / 361).epsilon(1e-13));
        CHECK(d.b11 == doctest::Approx(8670.0 / 361).epsilon(1e-13));
    }
    for (auto target : {std::pair<int, int>{2, 1}, std::pair<int, int>{1, 2}}) {
        const ReversibleParams p = validate_reversible({-3.0, -2.0});
        const Distribution d = distribution(p, target, 1.0);
        CHECK_FALSE(d.possible);
        CHECK(d.witnesses.count("shared_factor") == 1);
    }
    {
        const ReversibleParams p = validate_reversible({-4.0 / 3, -6.0 / 5});
        const Distribution d = distribution(p, {0, 2}, 1.0);
        CHECK(d.possible);
        CHECK(d.b11 == doctest::Approx(1176.0 / 65).epsilon(1e-13));
    }
    {
        const ReversibleParams p = validate_reversible({-3.0, -2.0});
        const Distribution d = distribution(p, {1, 1}, 1.0);
        CHECK(d.possible);
        CHECK(d.b11 == doctest::Approx((-3.0 - 4.0) / (1.0 - 3.0)).epsilon(1e-14));
        const MuCoefficients mu =
            mu_coefficients(p, {0.0, d.a10, d.b01, d.b11});
        CHECK(std::fabs(mu.mu0[0]) <= 1e-13);
        CHECK(std::fabs(mu.mu1[0]) <= 1e-13);
    }
}

TEST_CASE("the mu1 row is undefined without a second center") {
    const ReversibleParams p = validate_reversible({2.0, 3.0});
    const MuCoefficients mu = mu_coefficients(p, {0.0, 1.0, 0.2, 0.3});
    CHECK(std::isnan(mu.mu1[0]));
    CHECK_FALSE(std::isnan(mu.mu0[0]));
}
