#ifndef QLC_INTEGRABLE_HPP
#define QLC_INTEGRABLE_HPP

#include <optional>

#include "qlc/model.hpp"

namespace qlc {

// Abscissas where the upper branch y_+ of a level oval meets the x-axis.
struct TurningPoints {
    double x_min = 0.0;
    double x_max = 0.0;
};

// Integrating factor |1 + a1 x|^(-(a1+2a4)/a1) of the reversible system.
// Powers are always taken of the absolute value; the sign is carried
// separately wherever it matters, so fractional exponents of negative bases
// never occur and no rational-exponent condition on (a1+2a4)/a1 is needed
// (the two half planes are analyzed independently).
double gamma_factor(double x, const ReversibleParams& p);

// First integral / Hamiltonian of the transformed system:
//   H = 1/2 sign(1+a1 x) |1+a1 x|^(-2a4/a1)
//       [ y^2 + (1+a1-a4)(1+2a4 x) / (a4 (a1-a4)(a1-2a4)) - x^2/(a1-a4) ].
// Even in y.
double first_integral(double x, double y, const ReversibleParams& p);

// Closed forms of H at the two centers; consistent with first_integral at
// (0,0) and (1,0) to 1e-12 relative.
CriticalLevels critical_levels(const ReversibleParams& p);

// Square of the upper branch on the level h (may be negative outside the
// oval); the region is implied by the sign of 1 + a1 x.
double y_plus_sq(double x, double h, const ReversibleParams& p);

// Nonnegative upper branch of the oval, or nullopt when x lies outside it.
std::optional<double> y_plus(double x, const LevelSet& ls, const ReversibleParams& p);

// Locates x_min < x_center < x_max with y_+ = 0 at both ends, by outward
// marching from the enclosed center and bracketed bisection to 1e-13.
// Levels closer than 1e-9 to the critical level are rejected as NoOval
// (callers use the series expansion there instead).
TurningPoints turning_points(const LevelSet& ls, const ReversibleParams& p);

// First integrals of the three other center classes, used for classification
// cross-checks.

// Hamiltonian of the a3 = a1 + 2 a4 = 0 system:
//   1/2 (x^2+y^2) - x^3/3 + a1 x y^2 / 2 + a2 y^3 / 3.
double first_integral_hamiltonian(double x, double y, double a1, double a2);

// First integral of the Lotka-Volterra class (a2 = 1 + a4 = 0); the branch
// is selected by the sign of a3^2 + 4(1+a1).  Throws LogDomain when a
// logarithm or inverse-function argument leaves its domain.
double first_integral_lv(double x, double y, double a1, double a3);

// First integral of the codimension-4 class, sign(g) |g|^(-3/2) f / (12 a2^6).
double first_integral_q4(double x, double y, double a2);

} // namespace qlc

#endif
