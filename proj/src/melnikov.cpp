#include "qlc/melnikov.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "qlc/quadrature.hpp"
#include "qlc/roots.hpp"

namespace qlc {

namespace {

constexpr double kPi = 3.14159265358979323846;

double checked(const QuadResult& r, const char* which, double rel_tol) {
    if (!r.converged)
        throw QuadratureFailure(std::string(which) + ": error estimate " +
                                std::to_string(r.error) + " above tolerance after " +
                                std::to_string(r.intervals) + " refinements (rel_tol " +
                                std::to_string(rel_tol) + ")");
    return r.value;
}

} // namespace

AbelianTriple abelian_integrals(const LevelSet& ls, const ReversibleParams& p,
                                double rel_tol) {
    const TurningPoints tp = turning_points(ls, p);
    const double xs = singular_abscissa(p);
    if (std::fabs(tp.x_min - xs) < 1e-6 || std::fabs(tp.x_max - xs) < 1e-6)
        throw QuadratureFailure("oval endpoint within 1e-6 of the singular line");

    const double a1 = p.a1, a4 = p.a4;
    const double w = tp.x_max - tp.x_min;
    const double e0 = -(a1 + 2.0 * a4) / a1;
    const double e2 = -2.0 * (a1 + a4) / a1;

    // x = x_min + w sin^2(theta); y_+ vanishes like sin(theta)*cos(theta),
    // so the integrands below are smooth on [0, pi/2].
    auto point = [&](double theta, double& x, double& yp, double& jac) {
        const double s = std::sin(theta), c = std::cos(theta);
        x = tp.x_min + w * s * s;
        const double b = y_plus_sq(x, ls.h, p);
        yp = b > 0.0 ? std::sqrt(b) : 0.0;
        jac = 2.0 * w * s * c;
    };

    auto f0 = [&](double theta) {
        double x, yp, jac;
        point(theta, x, yp, jac);
        return std::pow(std::fabs(1.0 + a1 * x), e0) * yp * jac;
    };
    auto f1 = [&](double theta) {
        double x, yp, jac;
        point(theta, x, yp, jac);
        return std::pow(std::fabs(1.0 + a1 * x), e0) * x * yp * jac;
    };
    auto f2 = [&](double theta) {
        double x, yp, jac;
        point(theta, x, yp, jac);
        return std::pow(std::fabs(1.0 + a1 * x), e2) * x * yp * jac;
    };

    const QuadResult r0 = integrate_gk15(f0, 0.0, kPi / 2.0, rel_tol);
    const QuadResult r1 = integrate_gk15(f1, 0.0, kPi / 2.0, rel_tol);
    const QuadResult r2 = integrate_gk15(f2, 0.0, kPi / 2.0, rel_tol);

    // Loop orientation: the flow runs clockwise around (0,0) and
    // counter-clockwise around (1,0), so the oint over y dx is +2/-2 times
    // the one-sided integral on the Left/Right ovals respectively.
    const double orient = (ls.region == Region::Left) ? 2.0 : -2.0;
    AbelianTriple t;
    t.I0 = orient * checked(r0, "I0", rel_tol);
    t.I1 = orient * checked(r1, "I1", rel_tol);
    t.I2 = -(a1 + 2.0 * a4) * orient * checked(r2, "I2", rel_tol);
    return t;
}

double melnikov(const LevelSet& ls, const ReversibleParams& p,
                const Perturbation& q, double rel_tol) {
    const AbelianTriple t = abelian_integrals(ls, p, rel_tol);
    return (q.a10 + q.b01) * t.I0 + q.b11 * t.I1 + q.a10 * t.I2;
}

std::vector<MelnikovSample> scan(Region region, double h_lo, double h_hi, int n,
                                 const ReversibleParams& p, const Perturbation& q,
                                 double rel_tol, int jobs) {
    if (n < 2) throw Error("scan needs n >= 2");
    if (!(h_lo < h_hi)) throw Error("scan needs h_lo < h_hi");
    const CriticalLevels cl = critical_levels(p);
    const double hc = (region == Region::Left) ? cl.h00 : cl.h10;
    const double width = h_hi - h_lo;
    const double zone = 0.1 * width;

    // Grid: uniform over the interval, but points that fall inside the strip
    // adjacent to the critical level are respaced geometrically toward it.
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i)
        grid[i] = h_lo + width * static_cast<double>(i) / (n - 1);
    const bool lo_near = std::fabs(h_lo - hc) < zone;
    const bool hi_near = std::fabs(h_hi - hc) < zone;
    if (lo_near || hi_near) {
        const double edge = lo_near ? h_lo : h_hi;       // grid end nearest hc
        const double inner = lo_near ? h_lo + zone : h_hi - zone;
        const double d_far = std::fabs(inner - hc);
        const double d_min = std::fabs(edge - hc);
        int k = 0;
        for (double g : grid)
            if (std::fabs(g - hc) < d_far) ++k;
        if (k >= 2 && d_min > 0.0 && d_far > d_min) {
            const double ratio = std::pow(d_min / d_far, 1.0 / (k - 1));
            int j = 0;
            for (int i = 0; i < n; ++i) {
                if (std::fabs(grid[i] - hc) < d_far) {
                    const double d = d_far * std::pow(ratio, lo_near ? (k - 1 - j) : j);
                    grid[i] = lo_near ? hc + d : hc - d;
                    ++j;
                }
            }
        }
    }
    std::sort(grid.begin(), grid.end());

    std::vector<MelnikovSample> out(n);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n) return;
            MelnikovSample s;
            s.h = grid[i];
            try {
                LevelSet ls(grid[i], region, cl);
                s.M = melnikov(ls, p, q, rel_tol);
                s.ok = true;
            } catch (const Error& e) {
                s.ok = false;
                s.error = e.what();
            }
            out[i] = s;
        }
    };
    const int nw = std::max(1, std::min(jobs, n));
    if (nw == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nw);
        for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

std::vector<ZeroBracket> sign_changes(const std::vector<MelnikovSample>& samples) {
    std::vector<ZeroBracket> out;
    const MelnikovSample* prev = nullptr;
    for (const auto& s : samples) {
        if (!s.ok) continue;
        if (prev && prev->M != 0.0 && s.M != 0.0 &&
            (prev->M < 0.0) != (s.M < 0.0)) {
            out.push_back({prev->h, s.h, prev->M, s.M});
        }
        prev = &s;
    }
    return out;
}

double find_zero(const ZeroBracket& bracket, const ReversibleParams& p,
                 const Perturbation& q, Region region, double rel_tol) {
    if (!(bracket.lo < bracket.hi) || !(bracket.M_lo * bracket.M_hi < 0.0))
        throw LostBracket("find_zero: endpoints do not bracket a sign change");
    const CriticalLevels cl = critical_levels(p);
    auto f = [&](double h) {
        LevelSet ls(h, region, cl);
        return melnikov(ls, p, q, rel_tol);
    };
    return bisect_secant(f, bracket.lo, bracket.hi, bracket.M_lo, bracket.M_hi,
                         1e-10, 80);
}

} // namespace qlc
