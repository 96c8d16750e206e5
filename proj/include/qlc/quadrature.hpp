#ifndef QLC_QUADRATURE_HPP
#define QLC_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace qlc {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // estimated absolute error
    double resabs = 0.0;  // integral of |f|
    int intervals = 0;
    bool converged = false;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair on [-1,1] (QUADPACK dqk15 constants).
inline constexpr double kGK15Nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kGK15KronrodW[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
inline constexpr double kGK15GaussW[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

template <class F>
inline void gk15(const F& f, double a, double b, double& kronrod,
                 double& err, double& resabs) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - hw * kGK15Nodes[i]);
        fv[14 - i] = f(c + hw * kGK15Nodes[i]);
    }
    fv[7] = f(c);
    double gauss = 0.0;
    for (int i = 0; i < 3; ++i)
        gauss += kGK15GaussW[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    gauss += kGK15GaussW[3] * fv[7];
    double kr = 0.0, ra = 0.0;
    for (int i = 0; i < 7; ++i) {
        kr += kGK15KronrodW[i] * (fv[i] + fv[14 - i]);
        ra += kGK15KronrodW[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
    }
    kr += kGK15KronrodW[7] * fv[7];
    ra += kGK15KronrodW[7] * std::fabs(fv[7]);
    kronrod = kr * hw;
    resabs = ra * std::fabs(hw);
    err = std::fabs((kr - gauss) * hw);
}

} // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over [a,b]: the interval
// with the largest error estimate is bisected until
//   sum(err) <= max(abs_tol, rel_tol * |value|, 50 eps * resabs)
// or max_intervals is reached (converged=false in that case).
template <class F>
QuadResult integrate_gk15(const F& f, double a, double b, double rel_tol,
                          double abs_tol = 0.0, int max_intervals = 4000) {
    struct Interval {
        double a, b, value, error, resabs;
    };
    std::vector<Interval> segs;
    segs.reserve(64);
    Interval first{a, b, 0, 0, 0};
    detail::gk15(f, a, b, first.value, first.error, first.resabs);
    segs.push_back(first);

    QuadResult out;
    const double eps_floor = 50.0 * 2.220446049250313e-16;
    for (;;) {
        double total = 0.0, err = 0.0, resabs = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            err += segs[i].error;
            resabs += segs[i].resabs;
            if (segs[i].error > segs[worst].error) worst = i;
        }
        out.value = total;
        out.error = err;
        out.resabs = resabs;
        out.intervals = static_cast<int>(segs.size());
        const double target = std::max({abs_tol, rel_tol * std::fabs(total),
                                        eps_floor * resabs});
        if (err <= target) {
            out.converged = true;
            return out;
        }
        if (static_cast<int>(segs.size()) >= max_intervals) {
            out.converged = false;
            return out;
        }
        Interval w = segs[worst];
        const double mid = 0.5 * (w.a + w.b);
        if (mid <= w.a || mid >= w.b) {  // interval exhausted at machine precision
            out.converged = err <= std::max(abs_tol, 10.0 * rel_tol * std::fabs(total));
            return out;
        }
        Interval left{w.a, mid, 0, 0, 0}, right{mid, w.b, 0, 0, 0};
        detail::gk15(f, left.a, left.b, left.value, left.error, left.resabs);
        detail::gk15(f, right.a, right.b, right.value, right.error, right.resabs);
        segs[worst] = left;
        segs.push_back(right);
    }
}

} // namespace qlc

#endif
