#ifndef QLC_MODEL_HPP
#define QLC_MODEL_HPP

#include <complex>

#include "qlc/errors.hpp"

namespace qlc {

// Absolute tolerance for equality tests against the excluded parameter sets.
inline constexpr double kDegeneracyTol = 1e-12;

// Coefficients of the canonical quadratic system
//   x' = y + a1 x y + a2 y^2,  y' = -x + x^2 + a3 x y + a4 y^2,
// with a linear center at (0,0) and a second singular point at (1,0).
struct CanonicalQuadratic {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;
};

// Parameters of the reversible integrable system
//   x' = y (1 + a1 x),  y' = -x + x^2 + a4 y^2.
struct ReversibleParams {
    double a1 = 0.0;
    double a4 = 0.0;
    bool two_center = false;  // set by validate_reversible: a1 < -1 and a4 < 0
};

// Quadratic perturbation (eps, a10, b01, b11) of the reversible system:
//   x' = y (1 + a1 x) + eps a10 x,
//   y' = -x + x^2 + a4 y^2 + eps (b01 y + b11 x y).
struct Perturbation {
    double eps = 0.0;
    double a10 = 0.0;
    double b01 = 0.0;
    double b11 = 0.0;
};

// The singular line 1 + a1 x = 0 splits the plane into two half planes that
// are analyzed independently.  Left: 1 + a1 x > 0 (contains (0,0));
// Right: 1 + a1 x < 0 (contains (1,0) when a1 < -1).
enum class Region { Left, Right };

inline const char* region_name(Region r) { return r == Region::Left ? "left" : "right"; }

// Abscissa of the singular line.
inline double singular_abscissa(const ReversibleParams& p) { return -1.0 / p.a1; }

// Levels of the first integral at the two centers.  h00 is the infimum of
// admissible Left levels, h10 the supremum of admissible Right levels.
struct CriticalLevels {
    double h00 = 0.0;
    double h10 = 0.0;
};

// A level value together with its half-plane; the constructor enforces
// admissibility (Left: h > h00, Right: h < h10) against the critical levels
// of the same parameter set, which the caller must supply.
struct LevelSet {
    double h;
    Region region;

    LevelSet(double h_, Region region_, const CriticalLevels& levels)
        : h(h_), region(region_) {
        if (region == Region::Left && !(h > levels.h00))
            throw NoOval("level h=" + std::to_string(h) +
                         " is not above h00=" + std::to_string(levels.h00));
        if (region == Region::Right && !(h < levels.h10))
            throw NoOval("level h=" + std::to_string(h) +
                         " is not below h10=" + std::to_string(levels.h10));
    }
};

// Real and imaginary parts of the complex-form coefficients in
//   z' = (i + lambda) z + A z^2 + B z conj(z) + C conj(z)^2.
struct ComplexFormParams {
    double lambda = 0.0;
    std::complex<double> A{0.0, 0.0};
    std::complex<double> B{0.0, 0.0};
    std::complex<double> C{0.0, 0.0};
};

// Rejects the degenerate parameter sets (a4 = 0, a1 = a4, a1 = 2 a4, a1 = 0,
// a1 = -1) and tags the two-center configuration.  Idempotent.
ReversibleParams validate_reversible(ReversibleParams p);

} // namespace qlc

#endif
