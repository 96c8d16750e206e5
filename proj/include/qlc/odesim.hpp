#ifndef QLC_ODESIM_HPP
#define QLC_ODESIM_HPP

#include <array>
#include <vector>

#include "qlc/model.hpp"

namespace qlc {

struct IntegratorStats {
    long steps = 0;
    long rejected = 0;
    double max_error = 0.0;  // largest accepted scaled error estimate
};

enum class StopReason { TimeLimit, SingularLine, Escaped };

struct TrajectorySample {
    double t = 0.0, x = 0.0, y = 0.0;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;  // accepted steps, strictly increasing t
    IntegratorStats stats;
    StopReason stop = StopReason::TimeLimit;
};

// Dormand-Prince 5(4) adaptive integration of the perturbed system from
// (x0,y0) to t_max.  Per-step scaled error <= tol (tol in [1e-13, 1e-6]).
// Terminates early when the state comes within 1e-6 of the singular line
// or escapes |x|+|y| > 1e3.  Throws StepFailure on step underflow.
Trajectory integrate(const ReversibleParams& p, const Perturbation& q, double x0,
                     double y0, double t_max, double tol);

enum class CenterId { Origin, OneZero };

// First return to the section y = 0 with the starting crossing direction,
// i.e. one full revolution around the chosen center.  The crossing time is
// refined until |y| <= 1e-12; returns the crossing abscissa.
double return_map(const ReversibleParams& p, const Perturbation& q, double x_start,
                  CenterId center, double tol = 1e-12);

enum class Stability { Attracting, Repelling, Undetermined };

struct CycleReport {
    CenterId center = CenterId::Origin;
    double x_cross = 0.0;   // fixed point of the return map on y = 0
    double period = 0.0;
    Stability stability = Stability::Undetermined;
    double h_assoc = 0.0;   // H(x_cross, 0)
};

// Brackets the sign change of the return-map displacement around the section
// abscissa of the level h_hint, bisects to |displacement| <= 1e-9, and
// classifies stability from the displacement signs on both sides.
// Throws NoSignChange when no bracketing displacement pair is found.
CycleReport locate_cycle(const ReversibleParams& p, const Perturbation& q,
                         CenterId center, double h_hint);

// Section abscissa for a level: the intersection of L_h with y = 0 on the
// side of the center away from the singular line (x < 0 for the origin,
// x > 1 for (1,0)).
double section_abscissa(const ReversibleParams& p, CenterId center, double h);

} // namespace qlc

#endif
