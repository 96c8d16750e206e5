#include "qlc/model.hpp"

#include <cmath>
#include <string>

namespace qlc {

ReversibleParams validate_reversible(ReversibleParams p) {
    if (!std::isfinite(p.a1) || !std::isfinite(p.a4))
        throw DegenerateParameters("a1, a4 must be finite");
    if (std::fabs(p.a4) < kDegeneracyTol)
        throw DegenerateParameters("a4 = 0");
    if (std::fabs(p.a1 - p.a4) < kDegeneracyTol)
        throw DegenerateParameters("a1 = a4");
    if (std::fabs(p.a1 - 2.0 * p.a4) < kDegeneracyTol)
        throw DegenerateParameters("a1 = 2*a4");
    if (std::fabs(p.a1) < kDegeneracyTol)
        throw DegenerateParameters("a1 = 0 (singular line at infinity)");
    if (std::fabs(p.a1 + 1.0) < kDegeneracyTol)
        throw DegenerateParameters("a1 = -1 (degenerate point at (1,0))");
    p.two_center = (p.a1 < -1.0 && p.a4 < 0.0);
    return p;
}

} // namespace qlc
