#ifndef QLC_CLASSIFY_HPP
#define QLC_CLASSIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "qlc/model.hpp"

namespace qlc {

enum class CenterLabel { Q3LV, Q3H, Q3R, Q4, None };

const char* label_name(CenterLabel l);

// Classification verdict: the primary label plus every condition residual
// that was evaluated.  A label other than None implies all of its residuals
// are at most 1e-10 in absolute value.
struct CenterClass {
    CenterLabel label = CenterLabel::None;
    std::vector<CenterLabel> all_matches;      // every class whose residuals pass
    std::map<std::string, double> residuals;
    bool via_degenerate_case = false;  // matched through the extra residual triple
                                       // that reduces to the reversible class
    double v1 = 0.0;                   // first focus value (complex input only)
};

// Residual tolerance for class membership.
inline constexpr double kClassifyTol = 1e-10;

// Residual-based test of the four center conditions on the canonical
// coefficients.  Ties resolve with priority Q3H > Q3LV > Q3R > Q4.
CenterClass classify_canonical(const CanonicalQuadratic& c);

// The same on the complex-form coefficients; also reports v1 = -Im(AB).
CenterClass classify_complex(const ComplexFormParams& z);

// Maps complex-form coefficients to the canonical coefficients of the given
// class (second singular point placed on the x-axis).  Throws DegenerateMap
// when the class's denominator vanishes.
CanonicalQuadratic complex_to_canonical(const ComplexFormParams& z, CenterLabel cls);

enum class EquilibriumKind { Center, Saddle, Node, Focus, Degenerate };

struct Equilibrium {
    double x = 0.0, y = 0.0;
    EquilibriumKind kind = EquilibriumKind::Degenerate;
};

struct SingularityLayout {
    std::vector<Equilibrium> equilibria;  // (0,0) first, (1,0) second, then extras
};

// (0,0) is always a center; (1,0)'s kind comes from the Jacobian determinant
// (center iff a1 < -1); two extra saddles at (-1/a1, +-sqrt(-a4(a1+1))/(a1 a4))
// exist iff (a1+1) a4 < 0.
SingularityLayout singularity_layout(const ReversibleParams& p);

// Max absolute central-difference divergence (step 1e-6) of gamma*(P,Q) over
// 500 quasi-random points in [-0.8, 0.8]^2, skipping points where the
// factor's base is within 0.2 of zero.  At most ~1e-5 for a correct factor.
double verify_integrating_factor(CenterLabel cls, const CanonicalQuadratic& c);
double verify_integrating_factor(CenterLabel cls, const ComplexFormParams& z);

} // namespace qlc

#endif
