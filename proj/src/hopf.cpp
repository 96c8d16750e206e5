#include "qlc/hopf.hpp"

#include <cmath>
#include <limits>

namespace qlc {

namespace {

constexpr long double kPiL = 3.14159265358979323846264338327950288L;

// The coefficient polynomials cancel heavily along the solve chains; they are
// accumulated in long double so the residue stays below the 1e-12*|a10| bound
// even at a1 ~ -10.
typedef long double ld;

ld mu00_impl(ld, ld, ld a10, ld b01, ld) { return 2.0L * kPiL * (a10 + b01); }

ld mu01_impl(ld a1, ld a4, ld a10, ld b01, ld b11) {
    const ld pa = 10 - 13 * a1 - 14 * a4 + 13 * a1 * a1 + 7 * a1 * a4 - 20 * a4 * a4;
    const ld pb = 10 - a1 + 10 * a4 + a1 * a1 - 5 * a1 * a4 + 4 * a4 * a4;
    return kPiL / 12 * (pa * a10 + pb * b01 + 12 * (1 + a4) * b11);
}

ld mu02_impl(ld a1, ld a4, ld a10, ld b01, ld b11) {
    const ld a12 = a1 * a1, a13 = a12 * a1, a14 = a13 * a1;
    const ld a42 = a4 * a4, a43 = a42 * a4, a44 = a43 * a4;
    const ld pa = 1540 - 980 * a1 - 280 * a4 + 861 * a12 - 1512 * a1 * a4
        - 3948 * a42 - 626 * a13 + 1566 * a12 * a4 + 1620 * a1 * a42 - 4432 * a43
        + 313 * a14 - 1018 * a13 * a4 - 279 * a12 * a42 + 3080 * a1 * a43
        - 2096 * a44;
    const ld pb = 1540 + 700 * a1 + 3080 * a4 + 21 * a12 + 168 * a1 * a4
        + 2772 * a42 - 2 * a13 + 126 * a12 * a4 - 828 * a1 * a42 + 1424 * a43
        + a14 - 58 * a13 * a4 + 369 * a12 * a42 - 712 * a1 * a43 + 400 * a44;
    const ld pc = 24 * (1 + a4)
        * (70 + 35 * a1 + 70 * a4 + a12 - 17 * a1 * a4 + 52 * a42);
    return kPiL / 864 * (pa * a10 + pb * b01 + pc * b11);
}

ld mu03_impl(ld a1, ld a4, ld a10, ld b01, ld b11) {
    const ld a12 = a1 * a1, a13 = a12 * a1, a14 = a13 * a1, a15 = a14 * a1,
             a16 = a15 * a1;
    const ld a42 = a4 * a4, a43 = a42 * a4, a44 = a43 * a4, a45 = a44 * a4,
             a46 = a45 * a4;
    const ld pa = 3403400 - 300300 * a1 + 3003000 * a4 + 690690 * a12
        - 4984980 * a1 * a4 - 7327320 * a42 - 500885 * a13 + 3314850 * a12 * a4
        - 4430580 * a1 * a42 - 17811640 * a43 + 323121 * a14 - 2444439 * a13 * a4
        + 4201218 * a12 * a42 + 5794692 * a1 * a43 - 18033936 * a44
        - 168603 * a15 + 1420500 * a14 * a4 - 3253551 * a13 * a42
        - 1296282 * a12 * a43 + 12107904 * a1 * a44 - 10462368 * a45
        + 56201 * a16 - 520311 * a15 * a4 + 1471287 * a14 * a42
        - 407053 * a13 * a43 - 4589772 * a12 * a44 + 7149264 * a1 * a45
        - 3159616 * a46;
    const ld pb = 3403400 + 3303300 * a1 + 10210200 * a4 + 690690 * a12
        + 5825820 * a1 * a4 + 14294280 * a42 + 11935 * a13 + 404250 * a12 * a4
        + 2721180 * a1 * a42 + 12236840 * a43 - 699 * a14 - 11379 * a13 * a4
        + 262458 * a12 * a42 - 1891308 * a1 * a43 + 6994704 * a44 + 417 * a15
        + 1380 * a14 * a4 - 149091 * a13 * a42 + 1121838 * a12 * a43
        - 2964576 * a1 * a44 + 2670432 * a45 - 139 * a16 - 291 * a15 * a4
        + 46227 * a14 * a42 - 366193 * a13 * a43 + 1076988 * a12 * a44
        - 1335216 * a1 * a45 + 578624 * a46;
    const ld pc = 3603600 + 3603600 * a1 + 10810800 * a4 + 790020 * a12
        + 6597360 * a1 * a4 + 15024240 * a42 + 12600 * a13 + 480060 * a12 * a4
        + 3764880 * a1 * a42 + 12514320 * a43 + 180 * a14 - 10800 * a13 * a4
        + 11340 * a12 * a42 - 618480 * a1 * a43 + 6566400 * a44 + 180 * a14 * a4
        - 23400 * a13 * a42 + 321300 * a12 * a43 - 1389600 * a1 * a44
        + 1869120 * a45;
    return kPiL / 622080 * (pa * a10 + pb * b01 + pc * b11);
}

// The (1,0)-row prefactor exponents; the leading one is -3/2 (the reduced
// case displays pin it, e.g. the (3,0)-line value -10 pi/3 (-1-a1)^(-3/2)
// a1 (2a1+5) a10).
ld mu10_impl(ld a1, ld a4, ld a10, ld b01, ld b11) {
    return 2.0L * kPiL * std::pow(-1.0L - a1, -1.5L)
        * ((1 - 2 * a4) * a10 + (1 + a1) * (b01 + b11));
}

ld mu11_impl(ld a1, ld a4, ld a10, ld b01, ld b11) {
    const ld pa = 10 + 33 * a1 - 6 * a4 + 36 * a1 * a1 - 21 * a1 * a4
        - 24 * a1 * a1 * a4 + 30 * a1 * a4 * a4 - 8 * a4 * a4 * a4;
    const ld pb = (1 + a1)
        * (10 + 21 * a1 - 10 * a4 + 12 * a1 * a1 - 15 * a1 * a4 + 4 * a4 * a4);
    const ld pc = (1 + a1) * (1 + a4) * (2 + 3 * a1 - 4 * a4);
    return kPiL / 12 * std::pow(-1.0L - a1, -2 * (a1 - a4) / a1)
        * (pa * a10 + pb * b01 - pc * b11);
}

ld mu12_impl(ld a1, ld a4, ld a10, ld b01, ld b11) {
    const ld a12 = a1 * a1, a13 = a12 * a1, a14 = a13 * a1;
    const ld a42 = a4 * a4, a43 = a42 * a4, a44 = a43 * a4, a45 = a44 * a4;
    const ld pa = 1540 + 7140 * a1 - 2800 * a4 + 13041 * a12 - 11592 * a1 * a4
        + 2212 * a42 + 11448 * a13 - 18072 * a12 * a4 + 8628 * a1 * a42
        - 1112 * a43 + 752 * a44 - 12024 * a13 * a4 + 12213 * a12 * a42
        - 5232 * a1 * a43 + 4320 * a14 - 1728 * a14 * a4 + 6192 * a13 * a42
        - 7938 * a12 * a43 + 4272 * a1 * a44 - 800 * a45;
    const ld pb = (1 + a1)
        * (1540 + 5460 * a1 - 3080 * a4 + 7161 * a12 - 9072 * a1 * a4 + 2772 * a42
           + 4104 * a13 - 9030 * a12 * a4 + 6372 * a1 * a42 - 1424 * a43
           + 864 * a14 - 3096 * a13 * a4 + 3969 * a12 * a42 - 2136 * a1 * a43
           + 400 * a44);
    const ld pc = (1 + a1) * (1 + a4)
        * (140 + 420 * a1 - 420 * a4 + 423 * a12 - 996 * a1 * a4 + 576 * a42
           + 144 * a13 - 633 * a12 * a4 + 888 * a1 * a42 - 400 * a43);
    return kPiL / 864 * std::pow(-1.0L - a1, -(5 * a1 - 8 * a4) / (2 * a1))
        * (pa * a10 + pb * b01 - pc * b11);
}

ld mu13_impl(ld a1, ld a4, ld a10, ld b01, ld b11) {
    const ld a12 = a1 * a1, a13 = a12 * a1, a14 = a13 * a1, a15 = a14 * a1,
             a16 = a15 * a1;
    const ld a42 = a4 * a4, a43 = a42 * a4, a44 = a43 * a4, a45 = a44 * a4,
             a46 = a45 * a4, a47 = a46 * a4;
    const ld pa = 3403400 + 20720700 * a1 - 9809800 * a4 + 53243190 * a12
        - 54234180 * a1 * a4 + 13093080 * a42 + 74334645 * a13
        - 123735150 * a12 * a4 + 65571660 * a1 * a42 - 10776920 * a43
        + 60023916 * a14 - 147900519 * a13 * a4 + 131934978 * a12 * a42
        - 49682268 * a1 * a43 + 6439744 * a44 + 27002160 * a15
        - 95460120 * a14 * a4 + 132380865 * a13 * a42 - 89408610 * a12 * a43
        + 29027880 * a1 * a44 - 3527040 * a45 + 5443200 * a16
        - 28946160 * a15 * a4 + 63998532 * a14 * a42 - 74879613 * a13 * a43
        + 48498336 * a12 * a44 - 16296336 * a1 * a45 + 2181248 * a46
        - 1555200 * a16 * a4 + 9603360 * a15 * a42 - 24061752 * a14 * a43
        + 31232358 * a13 * a44 - 22072536 * a12 * a45 + 8011296 * a1 * a46
        - 1157248 * a47;
    const ld pb = (1 + a1)
        * (3403400 + 17117100 * a1 - 10210200 * a4 + 35225190 * a12
           - 45225180 * a1 * a4 + 14294280 * a42 + 37785825 * a13
           - 79202970 * a12 * a4 + 54455940 * a1 * a42 - 12236840 * a43
           + 22125636 * a14 - 68371209 * a13 * a4 + 77864598 * a12 * a42
           - 38601828 * a1 * a43 + 6994704 * a44 + 6629040 * a15
           - 28984608 * a14 * a4 + 49687587 * a13 * a42 - 41614974 * a12 * a43
           + 16953984 * a1 * a44 - 2670432 * a45 + 777600 * a16
           - 4801680 * a15 * a4 + 12030876 * a14 * a42 - 15616179 * a13 * a43
           + 11036268 * a12 * a44 - 4005648 * a1 * a45 + 578624 * a46);
    const ld pc = (1 + a1) * (1 + a4)
        * (200200 + 900900 * a1 - 800800 * a4 + 1600830 * a12 - 3132360 * a1 * a4
           + 1530760 * a42 + 1397655 * a13 - 4596480 * a12 * a4
           + 5008500 * a1 * a42 - 1808240 * a43 + 594864 * a14
           - 3001266 * a13 * a4 + 5594022 * a12 * a42 - 4568112 * a1 * a43
           + 1379936 * a44 + 97200 * a15 - 736776 * a14 * a4
           + 2162079 * a13 * a42 - 3080268 * a12 * a43 + 2136528 * a1 * a44
           - 578624 * a45);
    return kPiL / 1244160 * std::pow(-1.0L - a1, -2 * (a1 - 3 * a4) / a1)
        * (pa * a10 + pb * b01 - pc * b11);
}

} // namespace

MuCoefficients mu_coefficients(const ReversibleParams& p, const Perturbation& q) {
    const ld a1 = p.a1, a4 = p.a4, a10 = q.a10, b01 = q.b01, b11 = q.b11;
    MuCoefficients mu;
    mu.mu0[0] = static_cast<double>(mu00_impl(a1, a4, a10, b01, b11));
    mu.mu0[1] = static_cast<double>(mu01_impl(a1, a4, a10, b01, b11));
    mu.mu0[2] = static_cast<double>(mu02_impl(a1, a4, a10, b01, b11));
    mu.mu0[3] = static_cast<double>(mu03_impl(a1, a4, a10, b01, b11));
    if (p.a1 < -1.0) {
        mu.mu1[0] = static_cast<double>(mu10_impl(a1, a4, a10, b01, b11));
        mu.mu1[1] = static_cast<double>(mu11_impl(a1, a4, a10, b01, b11));
        mu.mu1[2] = static_cast<double>(mu12_impl(a1, a4, a10, b01, b11));
        mu.mu1[3] = static_cast<double>(mu13_impl(a1, a4, a10, b01, b11));
    } else {
        mu.mu1.fill(std::numeric_limits<double>::quiet_NaN());
    }
    return mu;
}

double solve_b01_zero_mu00(double a10) { return -a10; }

double solve_b11_zero_mu01(const ReversibleParams& p, double a10) {
    if (std::fabs(p.a4 + 1.0) < kDegeneracyTol)
        throw DegenerateParameters("a4 = -1: the b11 solve for the (0,0) chain is singular");
    return -(p.a1 - 1.0 - p.a4) * (p.a1 + 2.0 * p.a4) / (1.0 + p.a4) * a10;
}

double solve_a4_zero_mu02(double a1) { return (a1 - 5.0) / 3.0; }

double solve_a4_zero_mu12(double a1) { return (6.0 * a1 + 5.0) / 3.0; }

RightChain solve_chain_right(const ReversibleParams& p, double a10) {
    const double a1 = p.a1, a4 = p.a4;
    if (std::fabs(a1 - a4 + 1.0) < kDegeneracyTol)
        throw DegenerateParameters(
            "a1 - a4 + 1 = 0: only a (1,1)-distribution exists on this line");
    RightChain c;
    c.b11 = (a1 + 2.0 * a4) * (2.0 * a1 - a4 + 1.0)
        / ((1.0 + a1) * (1.0 + a1) * (a1 - a4 + 1.0)) * a10;
    c.b01 = -c.b11 + (2.0 * a4 - 1.0) / (1.0 + a1) * a10;
    return c;
}

namespace {

void require_witness(Distribution& d, const std::string& name, double value) {
    d.witnesses[name] = value;
    if (std::fabs(value) < kDegeneracyTol)
        throw DegenerateParameters("witness " + name + " vanishes");
}

} // namespace

Distribution distribution(const ReversibleParams& p, std::pair<int, int> target,
                          double a10) {
    if (!(p.a1 < -1.0))
        throw DegenerateParameters("distributions are classified for a1 < -1");
    const double a1 = p.a1;
    Distribution d;
    d.n0 = target.first;
    d.n1 = target.second;
    d.a1 = a1;
    d.a4 = p.a4;
    d.a10 = a10;

    if ((target.first == 2 && target.second == 1) ||
        (target.first == 1 && target.second == 2)) {
        // Both expansion rows share the factor a1 (a1-a4)(a1+2a4) a10: the
        // cubic coefficient at one center cannot be freed while the leading
        // coefficient at the other stays zero.
        d.possible = false;
        d.witnesses["shared_factor"] =
            a1 * (a1 - p.a4) * (a1 + 2.0 * p.a4) * a10;
        d.note = "(2,1) and (1,2) distributions do not exist";
        return d;
    }

    d.possible = true;
    if (target == std::pair<int, int>{3, 0}) {
        d.a4 = solve_a4_zero_mu02(a1);
        ReversibleParams line = validate_reversible({a1, d.a4});
        d.b01 = solve_b01_zero_mu00(a10);
        d.b11 = solve_b11_zero_mu01(line, a10);
        require_witness(d, "(2a1+5)*a10", (2.0 * a1 + 5.0) * a10);
    } else if (target == std::pair<int, int>{0, 3}) {
        d.a4 = solve_a4_zero_mu12(a1);
        ReversibleParams line = validate_reversible({a1, d.a4});
        const RightChain c = solve_chain_right(line, a10);
        d.b01 = c.b01;
        d.b11 = c.b11;
        require_witness(d, "(3a1+5)*a10", (3.0 * a1 + 5.0) * a10);
    } else if (target == std::pair<int, int>{2, 0}) {
        if (std::fabs(p.a4 + 1.0) < kDegeneracyTol)
            throw DegenerateParameters(
                "a4 = -1: only a (1,1)-distribution exists at this point");
        d.b01 = solve_b01_zero_mu00(a10);
        d.b11 = solve_b11_zero_mu01(p, a10);
        require_witness(d, "a1(a1-a4)(a1+2a4)(a1-3a4-5)*a10",
                        a1 * (a1 - p.a4) * (a1 + 2.0 * p.a4)
                            * (a1 - 3.0 * p.a4 - 5.0) * a10);
    } else if (target == std::pair<int, int>{0, 2}) {
        const RightChain c = solve_chain_right(p, a10);  // throws on a1-a4+1=0
        d.b01 = c.b01;
        d.b11 = c.b11;
        require_witness(d, "a1(a1-a4)(a1+2a4)(6a1-3a4+5)*a10",
                        a1 * (a1 - p.a4) * (a1 + 2.0 * p.a4)
                            * (6.0 * a1 - 3.0 * p.a4 + 5.0) * a10);
    } else if (target == std::pair<int, int>{1, 1}) {
        d.b01 = solve_b01_zero_mu00(a10);
        d.b11 = (a1 + 2.0 * p.a4) / (1.0 + a1) * a10;
        require_witness(d, "a1(a1-a4)(a1+2a4)*a10",
                        a1 * (a1 - p.a4) * (a1 + 2.0 * p.a4) * a10);
    } else if (target == std::pair<int, int>{1, 0}) {
        d.b01 = solve_b01_zero_mu00(a10);
        d.b11 = 0.0;
        require_witness(d, "(a1-1-a4)(a1+2a4)*a10",
                        (a1 - 1.0 - p.a4) * (a1 + 2.0 * p.a4) * a10);
    } else if (target == std::pair<int, int>{0, 1}) {
        d.b11 = 0.0;
        d.b01 = (2.0 * p.a4 - 1.0) / (1.0 + a1) * a10;
        require_witness(d, "(a1+2a4)(2a1-a4+1)*a10",
                        (a1 + 2.0 * p.a4) * (2.0 * a1 - p.a4 + 1.0) * a10);
    } else if (target == std::pair<int, int>{0, 0}) {
        d.b01 = 0.0;
        d.b11 = 0.0;
        require_witness(d, "a10", a10);
    } else {
        throw Error("unsupported distribution target (" +
                    std::to_string(target.first) + "," +
                    std::to_string(target.second) + ")");
    }
    return d;
}

} // namespace qlc
