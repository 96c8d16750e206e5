#ifndef QLC_ROOTS_HPP
#define QLC_ROOTS_HPP

#include <cmath>
#include <optional>

#include "qlc/errors.hpp"

namespace qlc {

struct Bracket {
    double lo = 0.0, hi = 0.0;
    double f_lo = 0.0, f_hi = 0.0;
};

// Bisection to absolute width xtol.  f(lo) and f(hi) must have opposite signs.
template <class F>
double bisect(F&& f, double lo, double hi, double f_lo, double f_hi,
              double xtol, int max_iter = 200) {
    if (!(f_lo == 0.0 || f_hi == 0.0 || (f_lo < 0.0) != (f_hi < 0.0)))
        throw LostBracket("bisect: endpoints do not bracket a sign change");
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    for (int i = 0; i < max_iter && hi - lo > xtol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
            f_hi = fm;
        }
    }
    return 0.5 * (lo + hi);
}

template <class F>
double bisect(F&& f, double lo, double hi, double xtol, int max_iter = 200) {
    const double f_lo = f(lo), f_hi = f(hi);
    return bisect(f, lo, hi, f_lo, f_hi, xtol, max_iter);
}

// Bisection with one guarded secant step per iteration.  Keeps the bracket
// valid at all times; the secant proposal is used only when it falls well
// inside the current bracket, so convergence is never worse than bisection.
template <class F>
double bisect_secant(F&& f, double lo, double hi, double f_lo, double f_hi,
                     double xtol, int max_iter = 80) {
    if (!(f_lo == 0.0 || f_hi == 0.0 || (f_lo < 0.0) != (f_hi < 0.0)))
        throw LostBracket("bisect_secant: endpoints do not bracket a sign change");
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    for (int i = 0; i < max_iter && hi - lo > xtol; ++i) {
        double cand = 0.5 * (lo + hi);
        const double denom = f_hi - f_lo;
        if (denom != 0.0) {
            const double sec = lo - f_lo * (hi - lo) / denom;
            const double margin = 0.01 * (hi - lo);
            if (sec > lo + margin && sec < hi - margin) cand = sec;
        }
        const double fc = f(cand);
        if (fc == 0.0) return cand;
        if ((fc < 0.0) == (f_lo < 0.0)) {
            lo = cand;
            f_lo = fc;
        } else {
            hi = cand;
            f_hi = fc;
        }
    }
    return 0.5 * (lo + hi);
}

// Marches from `start` in the given direction (step doubling by `grow`)
// until f changes sign or `limit` is passed; returns the bracketing step
// or nullopt if the sign never changes before the limit.
template <class F>
std::optional<Bracket> bracket_outward(F&& f, double start, double step0,
                                       double limit, double grow = 1.5) {
    const double dir = (limit > start) ? 1.0 : -1.0;
    double x0 = start;
    double f0 = f(x0);
    double step = step0;
    for (int i = 0; i < 400; ++i) {
        double x1 = x0 + dir * step;
        bool clipped = false;
        if ((dir > 0 && x1 >= limit) || (dir < 0 && x1 <= limit)) {
            x1 = limit;
            clipped = true;
        }
        const double f1 = f(x1);
        if (f1 == 0.0 || (f0 < 0.0) != (f1 < 0.0)) {
            Bracket b;
            b.lo = std::min(x0, x1);
            b.hi = std::max(x0, x1);
            b.f_lo = (x0 < x1) ? f0 : f1;
            b.f_hi = (x0 < x1) ? f1 : f0;
            return b;
        }
        if (clipped) return std::nullopt;
        x0 = x1;
        f0 = f1;
        step *= grow;
    }
    return std::nullopt;
}

} // namespace qlc

#endif
