#ifndef QLC_TEST_HELPERS_HPP
#define QLC_TEST_HELPERS_HPP

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "qlc/model.hpp"

namespace qlc_test {

// Classic fixed-step RK4, used as an independent conservation oracle for
// first integrals of arbitrary planar fields.
inline std::array<double, 2> rk4_integrate(
    const std::function<std::array<double, 2>(double, double)>& f, double x0,
    double y0, double t_end, int steps) {
    double x = x0, y = y0;
    const double h = t_end / steps;
    for (int i = 0; i < steps; ++i) {
        const auto k1 = f(x, y);
        const auto k2 = f(x + 0.5 * h * k1[0], y + 0.5 * h * k1[1]);
        const auto k3 = f(x + 0.5 * h * k2[0], y + 0.5 * h * k2[1]);
        const auto k4 = f(x + h * k3[0], y + h * k3[1]);
        x += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
        y += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    }
    return {x, y};
}

// Largest |F(x(t),y(t)) - F(x0,y0)| sampled along an RK4 trajectory.
inline double conservation_drift(
    const std::function<std::array<double, 2>(double, double)>& f,
    const std::function<double(double, double)>& F, double x0, double y0,
    double t_end, int steps, int checkpoints = 50) {
    const double F0 = F(x0, y0);
    double x = x0, y = y0, worst = 0.0;
    for (int c = 0; c < checkpoints; ++c) {
        const auto s = rk4_integrate(f, x, y, t_end / checkpoints, steps / checkpoints);
        x = s[0];
        y = s[1];
        worst = std::max(worst, std::fabs(F(x, y) - F0));
    }
    return worst;
}

// Solves the n x n system A z = b in place by Gaussian elimination with
// partial pivoting (plenty for the 4 x 4 least-squares normal equations).
inline std::vector<double> gauss_solve(std::vector<std::vector<double>> A,
                                       std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
        std::swap(A[col], A[piv]);
        std::swap(b[col], b[piv]);
        for (int r = col + 1; r < n; ++r) {
            const double m = A[r][col] / A[col][col];
            for (int c = col; c < n; ++c) A[r][c] -= m * A[col][c];
            b[r] -= m * b[col];
        }
    }
    std::vector<double> z(n);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[r];
        for (int c = r + 1; c < n; ++c) s -= A[r][c] * z[c];
        z[r] = s / A[r][r];
    }
    return z;
}

// Least-squares fit of c1 d + c2 d^2 + c3 d^3 + c4 d^4 through samples
// (d_i, v_i); returns (c1..c4).  Columns are scaled by max(d) powers to keep
// the normal equations well conditioned.
inline std::array<double, 4> fit_quartic_no_constant(const std::vector<double>& d,
                                                     const std::vector<double>& v) {
    double dmax = 0.0;
    for (double x : d) dmax = std::max(dmax, std::fabs(x));
    std::vector<std::vector<double>> A(4, std::vector<double>(4, 0.0));
    std::vector<double> b(4, 0.0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        double phi[4];
        const double u = d[i] / dmax;
        phi[0] = u;
        phi[1] = u * u;
        phi[2] = u * u * u;
        phi[3] = u * u * u * u;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) A[r][c] += phi[r] * phi[c];
            b[r] += phi[r] * v[i];
        }
    }
    const auto z = gauss_solve(A, b);
    std::array<double, 4> out{};
    double scale = dmax;
    for (int k = 0; k < 4; ++k) {
        out[k] = z[k] / scale;
        scale *= dmax;
    }
    return out;
}

// Random validated two-center parameters with bounded exponents.
inline qlc::ReversibleParams random_two_center(std::mt19937& rng) {
    std::uniform_real_distribution<double> u1(-5.0, -1.2), u4(-3.8, -0.2);
    for (;;) {
        qlc::ReversibleParams p{u1(rng), u4(rng), false};
        try {
            return qlc::validate_reversible(p);
        } catch (const qlc::Error&) {
        }
    }
}

} // namespace qlc_test

#endif
