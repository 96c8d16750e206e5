#include "qlc/odesim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlc/integrable.hpp"
#include "qlc/roots.hpp"
#include "qlc/util.hpp"

namespace qlc {

namespace {

struct State {
    double t = 0.0, x = 0.0, y = 0.0;
};

struct Deriv {
    double dx = 0.0, dy = 0.0;
};

Deriv field(const ReversibleParams& p, const Perturbation& q, double x, double y) {
    Deriv d;
    d.dx = y * (1.0 + p.a1 * x) + q.eps * q.a10 * x;
    d.dy = -x + x * x + p.a4 * y * y + q.eps * (q.b01 * y + q.b11 * x * y);
    return d;
}

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187,
                 A53 = 64448.0 / 6561, A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192,
                 B5 = -2187.0 / 6784, B6 = 11.0 / 84;
constexpr double E1 = 35.0 / 384 - 5179.0 / 57600, E3 = 500.0 / 1113 - 7571.0 / 16695,
                 E4 = 125.0 / 192 - 393.0 / 640,
                 E5 = -2187.0 / 6784 + 92097.0 / 339200,
                 E6 = 11.0 / 84 - 187.0 / 2100, E7 = -1.0 / 40;

class Dopri5 {
public:
    Dopri5(const ReversibleParams& p, const Perturbation& q, double tol)
        : p_(p), q_(q), tol_(tol) {
        if (!(tol >= 1e-13 && tol <= 1e-6))
            throw Error("integration tolerance must lie in [1e-13, 1e-6]");
    }

    // Advances s by one accepted step of size at most h_max; returns the
    // step actually taken.
    double step(State& s, double h_max) {
        Deriv k1 = field(p_, q_, s.x, s.y);
        double h = std::min(h_, h_max);
        for (int attempt = 0; attempt < 60; ++attempt) {
            if (h < 1e-14 * std::max(1.0, std::fabs(s.t)))
                throw StepFailure("step size underflow at t=" + std::to_string(s.t));
            const double x = s.x, y = s.y;
            Deriv k2 = field(p_, q_, x + h * A21 * k1.dx, y + h * A21 * k1.dy);
            Deriv k3 = field(p_, q_, x + h * (A31 * k1.dx + A32 * k2.dx),
                             y + h * (A31 * k1.dy + A32 * k2.dy));
            Deriv k4 = field(p_, q_,
                             x + h * (A41 * k1.dx + A42 * k2.dx + A43 * k3.dx),
                             y + h * (A41 * k1.dy + A42 * k2.dy + A43 * k3.dy));
            Deriv k5 = field(p_, q_,
                             x + h * (A51 * k1.dx + A52 * k2.dx + A53 * k3.dx
                                      + A54 * k4.dx),
                             y + h * (A51 * k1.dy + A52 * k2.dy + A53 * k3.dy
                                      + A54 * k4.dy));
            Deriv k6 = field(p_, q_,
                             x + h * (A61 * k1.dx + A62 * k2.dx + A63 * k3.dx
                                      + A64 * k4.dx + A65 * k5.dx),
                             y + h * (A61 * k1.dy + A62 * k2.dy + A63 * k3.dy
                                      + A64 * k4.dy + A65 * k5.dy));
            const double xn = x + h * (B1 * k1.dx + B3 * k3.dx + B4 * k4.dx
                                       + B5 * k5.dx + B6 * k6.dx);
            const double yn = y + h * (B1 * k1.dy + B3 * k3.dy + B4 * k4.dy
                                       + B5 * k5.dy + B6 * k6.dy);
            Deriv k7 = field(p_, q_, xn, yn);
            const double ex = h * (E1 * k1.dx + E3 * k3.dx + E4 * k4.dx
                                   + E5 * k5.dx + E6 * k6.dx + E7 * k7.dx);
            const double ey = h * (E1 * k1.dy + E3 * k3.dy + E4 * k4.dy
                                   + E5 * k5.dy + E6 * k6.dy + E7 * k7.dy);
            const double scx = 1e-14 + tol_ * std::max(std::fabs(x), std::fabs(xn));
            const double scy = 1e-14 + tol_ * std::max(std::fabs(y), std::fabs(yn));
            const double err = std::sqrt(0.5 * ((ex / scx) * (ex / scx)
                                                + (ey / scy) * (ey / scy)));
            if (err <= 1.0) {
                s.t += h;
                s.x = xn;
                s.y = yn;
                stats.steps++;
                stats.max_error = std::max(stats.max_error, err);
                const double grow = (err == 0.0)
                    ? 5.0
                    : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
                h_ = std::min(h * grow, 1.0);
                return h;
            }
            stats.rejected++;
            h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.5);
        }
        throw StepFailure("no acceptable step at t=" + std::to_string(s.t));
    }

    IntegratorStats stats;

private:
    ReversibleParams p_;
    Perturbation q_;
    double tol_;
    double h_ = 1e-4;
};

bool near_singular_line(const ReversibleParams& p, double x) {
    return std::fabs(x - singular_abscissa(p)) < 1e-6;
}

bool escaped(double x, double y) { return std::fabs(x) + std::fabs(y) > 1e3; }

} // namespace

Trajectory integrate(const ReversibleParams& p, const Perturbation& q, double x0,
                     double y0, double t_max, double tol) {
    if (near_singular_line(p, x0))
        throw SingularLine("initial point on the singular line");
    Dopri5 stepper(p, q, tol);
    Trajectory traj;
    State s{0.0, x0, y0};
    traj.samples.push_back({s.t, s.x, s.y});
    traj.stop = StopReason::TimeLimit;
    while (t_max - s.t > 1e-12 * std::max(1.0, t_max)) {
        stepper.step(s, t_max - s.t);
        traj.samples.push_back({s.t, s.x, s.y});
        if (near_singular_line(p, s.x)) {
            traj.stop = StopReason::SingularLine;
            break;
        }
        if (escaped(s.x, s.y)) {
            traj.stop = StopReason::Escaped;
            break;
        }
    }
    traj.stats = stepper.stats;
    return traj;
}

namespace {

struct ReturnResult {
    double x = 0.0;
    double t = 0.0;  // elapsed time (period of the revolution)
};

// Integrates from (x_start, 0) until the second crossing of y = 0, i.e. one
// full revolution, then refines the crossing time by bisection on re-runs
// from the last pre-crossing state.
ReturnResult return_full(const ReversibleParams& p, const Perturbation& q,
                         double x_start, CenterId center, double tol) {
    const double xc = (center == CenterId::Origin) ? 0.0 : 1.0;
    if (near_singular_line(p, x_start))
        throw SingularLineHit("section point on the singular line");
    const bool left_region = (1.0 + p.a1 * x_start) > 0.0;
    if ((center == CenterId::Origin) != left_region)
        throw EscapedAnnulus("section point x=" + std::to_string(x_start) +
                             " is not in the annulus of the chosen center");
    if (std::fabs(x_start - xc) < 1e-12)
        throw EscapedAnnulus("section point coincides with the center");

    Dopri5 stepper(p, q, tol);
    State s{0.0, x_start, 0.0};
    int crossings = 0;
    State before = s;
    const double t_cap = 5e3;
    while (s.t < t_cap) {
        State prev = s;
        stepper.step(s, t_cap - s.t);
        if (near_singular_line(p, s.x))
            throw SingularLineHit("trajectory reached the singular line at t=" +
                                  std::to_string(s.t));
        if (escaped(s.x, s.y))
            throw EscapedAnnulus("trajectory escaped at t=" + std::to_string(s.t));
        if (prev.y == 0.0 && s.t > 0.0 && prev.t == 0.0) continue;  // leaving the section
        if ((prev.y < 0.0) != (s.y < 0.0) || s.y == 0.0) {
            ++crossings;
            if (crossings == 2) {
                before = prev;
                break;
            }
        }
    }
    if (crossings < 2)
        throw EscapedAnnulus("no return to the section within t=" +
                             std::to_string(t_cap));

    // Refine the crossing time within [before.t, s.t] on re-integrations from
    // the pre-crossing state.
    auto y_at = [&](double dt) {
        if (dt <= 0.0) return before;
        Dopri5 fine(p, q, tol);
        State u = before;
        const double target = before.t + dt;
        while (target - u.t > 1e-14 * std::max(1.0, std::fabs(target)))
            fine.step(u, target - u.t);
        return u;
    };
    double lo = 0.0, hi = s.t - before.t;
    double y_lo = before.y;
    State result = s;
    for (int i = 0; i < 90; ++i) {
        const double mid = 0.5 * (lo + hi);
        const State m = y_at(mid);
        if (std::fabs(m.y) <= 1e-12) {
            result = m;
            break;
        }
        if ((m.y < 0.0) == (y_lo < 0.0)) {
            lo = mid;
            y_lo = m.y;
        } else {
            hi = mid;
        }
        result = m;
    }
    return {result.x, result.t};
}

} // namespace

double return_map(const ReversibleParams& p, const Perturbation& q, double x_start,
                  CenterId center, double tol) {
    return return_full(p, q, x_start, center, tol).x;
}

double section_abscissa(const ReversibleParams& p, CenterId center, double h) {
    const CriticalLevels cl = critical_levels(p);
    if (center == CenterId::Origin) {
        if (!(h > cl.h00)) throw NoOval("level below h00");
        auto f = [&](double x) { return first_integral(x, 0.0, p) - h; };
        auto br = bracket_outward(f, -1e-9, 1e-4, -1e9);
        if (!br) throw NoOval("no section abscissa on x < 0 for this level");
        return bisect(f, br->lo, br->hi, br->f_lo, br->f_hi, 1e-14);
    }
    if (!(h < cl.h10)) throw NoOval("level above h10");
    auto f = [&](double x) { return first_integral(x, 0.0, p) - h; };
    auto br = bracket_outward(f, 1.0 + 1e-9, 1e-4, 1e9);
    if (!br) throw NoOval("no section abscissa on x > 1 for this level");
    return bisect(f, br->lo, br->hi, br->f_lo, br->f_hi, 1e-14);
}

CycleReport locate_cycle(const ReversibleParams& p, const Perturbation& q,
                         CenterId center, double h_hint) {
    if (!(q.eps > 0.0)) throw NoSignChange("eps = 0: every orbit is closed");
    const double x_hint = section_abscissa(p, center, h_hint);
    const double xc = (center == CenterId::Origin) ? 0.0 : 1.0;
    const double tol = 1e-12;
    // Displacements below this floor are integrator noise, not a signal.
    const double noise_floor = 1e-10;

    auto displacement = [&](double x) { return return_map(p, q, x, center, tol) - x; };

    const double dx0 = 0.02 * std::fabs(x_hint - xc);
    std::string profile;
    double x_lo = 0.0, x_hi = 0.0, d_lo = 0.0;
    bool have = false;
    double x_prev = 0.0, d_prev = 0.0;
    bool first = true;
    for (int k = -5; k <= 5 && !have; ++k) {
        const double x = x_hint + k * dx0;
        double d;
        try {
            d = displacement(x);
        } catch (const Error& e) {
            profile += "x=" + std::to_string(x) + ": " + e.what() + "\n";
            first = true;
            continue;
        }
        profile += "x=" + std::to_string(x) + " d=" + std::to_string(d) + "\n";
        if (!first && std::fabs(d) > noise_floor && std::fabs(d_prev) > noise_floor &&
            (d < 0.0) != (d_prev < 0.0)) {
            x_lo = x_prev;
            x_hi = x;
            d_lo = d_prev;
            have = true;
        }
        x_prev = x;
        d_prev = d;
        first = false;
    }
    if (!have)
        throw NoSignChange("no displacement sign change near the hinted level;"
                           " sampled profile:\n" + profile);

    double x_cycle = 0.5 * (x_lo + x_hi);
    for (int i = 0; i < 100; ++i) {
        x_cycle = 0.5 * (x_lo + x_hi);
        const double d = displacement(x_cycle);
        if (std::fabs(d) <= 1e-9) break;
        if ((d < 0.0) == (d_lo < 0.0)) {
            x_lo = x_cycle;
            d_lo = d;
        } else {
            x_hi = x_cycle;
        }
    }

    CycleReport rep;
    rep.center = center;
    rep.x_cross = x_cycle;
    const ReturnResult rr = return_full(p, q, x_cycle, center, tol);
    rep.period = rr.t;
    rep.h_assoc = first_integral(x_cycle, 0.0, p);

    // Stability from the radial displacement (r = |h - critical level|
    // grows outward in both regions) on both sides of the cycle.
    const CriticalLevels cl = critical_levels(p);
    const double hc = (center == CenterId::Origin) ? cl.h00 : cl.h10;
    auto radial_disp = [&](double x) {
        const double h_before = first_integral(x, 0.0, p);
        const double h_after = first_integral(return_map(p, q, x, center, tol), 0.0, p);
        return std::fabs(h_after - hc) - std::fabs(h_before - hc);
    };
    const double sigma = std::max(std::fabs(x_hi - x_lo), 1e-5 * std::fabs(x_hint - xc));
    // x offsets map to opposite radial sides depending on the section branch;
    // identify inner/outer by the level values.
    const double xa = x_cycle - sigma, xb = x_cycle + sigma;
    const double ra = std::fabs(first_integral(xa, 0.0, p) - hc);
    const double rb = std::fabs(first_integral(xb, 0.0, p) - hc);
    const double x_inner = (ra < rb) ? xa : xb;
    const double x_outer = (ra < rb) ? xb : xa;
    try {
        const double di = radial_disp(x_inner);
        const double dout = radial_disp(x_outer);
        if (di > noise_floor && dout < -noise_floor)
            rep.stability = Stability::Attracting;
        else if (di < -noise_floor && dout > noise_floor)
            rep.stability = Stability::Repelling;
        else
            rep.stability = Stability::Undetermined;
    } catch (const Error&) {
        rep.stability = Stability::Undetermined;
    }
    return rep;
}

} // namespace qlc
