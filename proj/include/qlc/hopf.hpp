#ifndef QLC_HOPF_HPP
#define QLC_HOPF_HPP

#include <array>
#include <map>
#include <string>
#include <utility>

#include "qlc/model.hpp"

namespace qlc {

// Expansion coefficients of the Melnikov function at the two centers:
//   M ~ mu0[0] (h - h00) + mu0[1] (h - h00)^2 + mu0[2] (h-h00)^3 + mu0[3] (h-h00)^4
// near h00, and the same in powers of (h10 - h) near h10.  Linear
// (jointly homogeneous) in (a10, b01, b11).
struct MuCoefficients {
    std::array<double, 4> mu0{};
    std::array<double, 4> mu1{};
};

// Evaluates the closed-form coefficient polynomials.  The mu1 row is
// meaningful only when (1,0) is a center (a1 < -1); it is NaN otherwise.
MuCoefficients mu_coefficients(const ReversibleParams& p, const Perturbation& q);

// mu0[0] = 0  <=>  b01 = -a10.
double solve_b01_zero_mu00(double a10);

// With b01 = -a10, mu0[1] = 0  <=>  b11 = -(a1-1-a4)(a1+2a4)/(1+a4) a10.
// Requires a4 != -1.
double solve_b11_zero_mu01(const ReversibleParams& p, double a10);

// Lines on which the third solve of each chain closes:
// mu0[2] = 0 on a4 = (a1-5)/3, mu1[2] = 0 on a4 = (6 a1+5)/3.
double solve_a4_zero_mu02(double a1);
double solve_a4_zero_mu12(double a1);

// First two solves of the (1,0)-center chain: mu1[0] = mu1[1] = 0 via
//   b11 = (a1+2a4)(2a1-a4+1) / ((1+a1)^2 (a1-a4+1)) a10,
//   b01 = -b11 + (2a4-1)/(1+a1) a10.
// Requires a1 - a4 + 1 != 0 (otherwise only a (1,1) distribution exists).
struct RightChain {
    double b01 = 0.0;
    double b11 = 0.0;
};
RightChain solve_chain_right(const ReversibleParams& p, double a10);

// A realizable small-limit-cycle distribution (n0 around (0,0), n1 around
// (1,0)) together with the parameter values that realize it and the nonzero
// witnesses that certify the last coefficient.
struct Distribution {
    int n0 = 0, n1 = 0;
    bool possible = false;
    double a1 = 0.0, a4 = 0.0;
    double a10 = 0.0, b01 = 0.0, b11 = 0.0;
    std::map<std::string, double> witnesses;
    std::string note;
};

// Solves the chain for the requested target.  (3,0) and (0,3) pick a4 on the
// corresponding line; (2,0)/(0,2)/(1,1)/(1,0)/(0,1)/(0,0) keep p.a4.  (2,1)
// and (1,2) are impossible: both rows share the factor
// a1 (a1-a4)(a1+2a4) a10, so the leading coefficients vanish together.
Distribution distribution(const ReversibleParams& p, std::pair<int, int> target,
                          double a10 = 1.0);

} // namespace qlc

#endif
