#include "qlc/integrable.hpp"

#include <cmath>
#include <string>

#include "qlc/roots.hpp"

namespace qlc {

namespace {

constexpr double kSingularTol = 1e-14;

double signed_base(double x, double a1) {
    const double u = 1.0 + a1 * x;
    if (std::fabs(u) < kSingularTol)
        throw SingularLine("evaluation at the singular line 1 + a1 x = 0, x=" +
                           std::to_string(x));
    return u;
}

} // namespace

double gamma_factor(double x, const ReversibleParams& p) {
    const double u = signed_base(x, p.a1);
    const double expo = -(p.a1 + 2.0 * p.a4) / p.a1;
    return std::pow(std::fabs(u), expo);
}

double first_integral(double x, double y, const ReversibleParams& p) {
    const double a1 = p.a1, a4 = p.a4;
    const double u = signed_base(x, a1);
    const double s = (u > 0.0) ? 1.0 : -1.0;
    const double denom = a4 * (a1 - a4) * (a1 - 2.0 * a4);
    const double bracket = y * y
        + (1.0 + a1 - a4) * (1.0 + 2.0 * a4 * x) / denom
        - x * x / (a1 - a4);
    return 0.5 * s * std::pow(std::fabs(u), -2.0 * a4 / a1) * bracket;
}

CriticalLevels critical_levels(const ReversibleParams& p) {
    const double a1 = p.a1, a4 = p.a4;
    const double denom = 2.0 * a4 * (a1 - a4) * (a1 - 2.0 * a4);
    CriticalLevels cl;
    cl.h00 = (1.0 + a1 - a4) / denom;
    // H(1,0) = sign(1+a1) |1+a1|^(-2a4/a1) (1+a1)(1+a4) / denom; for the
    // two-center range a1 < -1 this is the printed
    // -(a1+1)(a4+1) (-1-a1)^(-2a4/a1) / denom.
    const double u = 1.0 + a1;
    const double s = (u > 0.0) ? 1.0 : -1.0;
    cl.h10 = s * std::pow(std::fabs(u), -2.0 * a4 / a1) * u * (1.0 + a4) / denom;
    return cl;
}

double y_plus_sq(double x, double h, const ReversibleParams& p) {
    const double a1 = p.a1, a4 = p.a4;
    const double u = signed_base(x, a1);
    const double s = (u > 0.0) ? 1.0 : -1.0;
    const double denom = a4 * (a1 - a4) * (a1 - 2.0 * a4);
    return x * x / (a1 - a4)
        - (1.0 + a1 - a4) * (1.0 + 2.0 * a4 * x) / denom
        + 2.0 * h * s * std::pow(std::fabs(u), 2.0 * a4 / a1);
}

std::optional<double> y_plus(double x, const LevelSet& ls, const ReversibleParams& p) {
    const double u = signed_base(x, p.a1);
    if ((ls.region == Region::Left) != (u > 0.0))
        throw SingularLine("x=" + std::to_string(x) + " lies on the wrong side of the singular line for the " +
                           region_name(ls.region) + " region");
    const double b = y_plus_sq(x, ls.h, p);
    if (b < 0.0) return std::nullopt;
    return std::sqrt(b);
}

TurningPoints turning_points(const LevelSet& ls, const ReversibleParams& p) {
    if (!p.two_center)
        throw DegenerateParameters(
            "turning points require the two-center configuration (a1 < -1, a4 < 0)");
    const CriticalLevels cl = critical_levels(p);
    const double margin = (ls.region == Region::Left) ? ls.h - cl.h00 : cl.h10 - ls.h;
    if (margin < 1e-9)
        throw NoOval("level too close to the critical level (margin " +
                     std::to_string(margin) + ")");

    const double xs = singular_abscissa(p);
    const double xc = (ls.region == Region::Left) ? 0.0 : 1.0;
    const double f_center = y_plus_sq(xc, ls.h, p);
    if (f_center <= 0.0)
        throw NoOval("level does not enclose the center at x=" + std::to_string(xc));

    auto f = [&](double x) { return y_plus_sq(x, ls.h, p); };

    // Never step onto the singular line; leave a guard of 1e-13 around it.
    auto locate = [&](double limit, bool toward_singular) {
        const double step0 = 1e-3 * std::min(1.0, std::fabs(xc - xs));
        auto br = bracket_outward(f, xc, step0, limit);
        if (!br) {
            if (toward_singular)
                throw SingularLine("oval bracket reaches the singular line x=" +
                                   std::to_string(xs));
            throw NoOval("no turning point found toward x=" + std::to_string(limit));
        }
        return bisect(f, br->lo, br->hi, br->f_lo, br->f_hi, 1e-13);
    };

    TurningPoints tp;
    if (ls.region == Region::Left) {
        // Left half plane is x < xs for a1 < 0.
        tp.x_max = locate(xs - 1e-13, true);
        tp.x_min = locate(-1e9, false);
    } else {
        tp.x_min = locate(xs + 1e-13, true);
        tp.x_max = locate(1e9, false);
    }
    return tp;
}

double first_integral_hamiltonian(double x, double y, double a1, double a2) {
    return 0.5 * (x * x + y * y) - x * x * x / 3.0 + 0.5 * a1 * x * y * y
        + a2 * y * y * y / 3.0;
}

double first_integral_lv(double x, double y, double a1, double a3) {
    const double disc = a3 * a3 + 4.0 * (1.0 + a1);
    const double xm1 = x - 1.0;
    const double u = 1.0 + a1 * x;
    const double quad = (1.0 + a1) * y * y - a3 * y * xm1 - xm1 * xm1;
    if (std::fabs(u) < kSingularTol || std::fabs(quad) < 1e-300)
        throw LogDomain("logarithm argument vanishes");
    const double pref_denom = 2.0 * a1 * (1.0 + a1);
    if (std::fabs(pref_denom) < kDegeneracyTol)
        throw DegenerateParameters("a1 in {0, -1} in the Lotka-Volterra integral");

    if (disc > 0.0) {
        const double root = std::sqrt(disc * xm1 * xm1);
        if (root < 1e-300) throw LogDomain("x = 1 annihilates the inverse-tanh term");
        const double z = (a3 * xm1 - 2.0 * (1.0 + a1) * y) / root;
        if (std::fabs(z) >= 1.0)
            throw LogDomain("tanh^-1 argument |z| >= 1, z=" + std::to_string(z));
        const double atanh_z = 0.5 * std::log((1.0 + z) / (1.0 - z));
        const double g = u * ((xm1 * xm1) + a3 * xm1 * y - (1.0 + a1) * y * y);
        const double sg = (g >= 0.0) ? 1.0 : -1.0;
        return -sg / pref_denom
            * (2.0 * std::log(std::fabs(u)) + a1 * std::log(std::fabs(quad))
               + 2.0 * a1 * a3 * xm1 / root * atanh_z);
    }
    const double root = std::sqrt(-disc * xm1 * xm1);
    if (root < 1e-300) throw LogDomain("x = 1 annihilates the arctangent term");
    const double z = (a3 * xm1 - 2.0 * (1.0 + a1) * y) / root;
    const double su = (u > 0.0) ? 1.0 : -1.0;
    return -su / pref_denom
        * (2.0 * std::log(std::fabs(u)) + a1 * std::log(std::fabs(quad))
           - 2.0 * a1 * a3 * xm1 / root * std::atan(z));
}

double first_integral_q4(double x, double y, double a2) {
    if (std::fabs(a2) < kDegeneracyTol)
        throw DivisionByZero("a2 = 0 in the codimension-4 integral");
    const double a2sq = a2 * a2;
    const double w = x + a2 * y;
    const double g = 1.0 - 2.0 * (1.0 + 2.0 * a2sq) * x - 2.0 * a2 * y
        + (1.0 + 4.0 * a2sq) * w * w;
    if (std::fabs(g) < 1e-300) throw DivisionByZero("g(x,y) = 0");
    const double f = -(1.0 + a2sq)
        + 3.0 * (w + 2.0 * a2sq * x) * (1.0 + a2sq - (1.0 + 3.0 * a2sq) * w)
        + (1.0 + 3.0 * a2sq) * (1.0 + 4.0 * a2sq) * w * w * w;
    const double sg = (g >= 0.0) ? 1.0 : -1.0;
    const double a2_6 = a2sq * a2sq * a2sq;
    return sg * std::pow(std::fabs(g), -1.5) * f / (12.0 * a2_6);
}

} // namespace qlc
