#ifndef QLC_MELNIKOV_HPP
#define QLC_MELNIKOV_HPP

#include <string>
#include <vector>

#include "qlc/integrable.hpp"
#include "qlc/model.hpp"

namespace qlc {

// The three h-dependent building blocks of the Melnikov function,
//   M(h) = (a10 + b01) I0 + b11 I1 + a10 I2.
struct AbelianTriple {
    double I0 = 0.0;
    double I1 = 0.0;
    double I2 = 0.0;
};

struct MelnikovSample {
    double h = 0.0;
    double M = 0.0;
    bool ok = false;
    std::string error;
};

struct ZeroBracket {
    double lo = 0.0, hi = 0.0;
    double M_lo = 0.0, M_hi = 0.0;
};

// Quadrature of the three loop integrals over the oval L_h.  The sqrt
// vanishing of y_+ at the turning points is removed by the substitution
// x = x_min + (x_max - x_min) sin^2(theta); the smooth theta-integrand is
// then refined adaptively (Gauss-Kronrod) to rel_tol.
//
// Signs follow the loop orientation induced by the flow: +2*integral on the
// Left ovals (clockwise around (0,0)), -2*integral on the Right ovals
// (counter-clockwise around (1,0)).  I2 carries the additional factor
// -(a1 + 2 a4) in both regions.
AbelianTriple abelian_integrals(const LevelSet& ls, const ReversibleParams& p,
                                double rel_tol = 1e-11);

double melnikov(const LevelSet& ls, const ReversibleParams& p,
                const Perturbation& q, double rel_tol = 1e-11);

// Samples M on [h_lo, h_hi]: uniform grid, geometrically refined inside the
// strip within 0.1*(h_hi - h_lo) of the region's critical level.  Failed
// samples are flagged, never dropped.  jobs > 1 distributes samples over
// threads; the output order is deterministic either way.
std::vector<MelnikovSample> scan(Region region, double h_lo, double h_hi, int n,
                                 const ReversibleParams& p, const Perturbation& q,
                                 double rel_tol = 1e-11, int jobs = 1);

// Sign-change brackets in a scan (failed samples are skipped).
std::vector<ZeroBracket> sign_changes(const std::vector<MelnikovSample>& samples);

// Bisection with guarded secant acceleration on M(h) until |hi - lo| <= 1e-10
// (at most 80 iterations).  Throws LostBracket on an invalid bracket.
double find_zero(const ZeroBracket& bracket, const ReversibleParams& p,
                 const Perturbation& q, Region region, double rel_tol = 1e-11);

} // namespace qlc

#endif
