#include "qlc/classify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include "qlc/util.hpp"

namespace qlc {

const char* label_name(CenterLabel l) {
    switch (l) {
        case CenterLabel::Q3LV: return "Q3LV";
        case CenterLabel::Q3H: return "Q3H";
        case CenterLabel::Q3R: return "Q3R";
        case CenterLabel::Q4: return "Q4";
        case CenterLabel::None: return "None";
    }
    return "?";
}

namespace {

bool all_below(const std::map<std::string, double>& res,
               std::initializer_list<const char*> keys, double tol) {
    for (const char* k : keys)
        if (std::fabs(res.at(k)) > tol) return false;
    return true;
}

// Priority Q3H > Q3LV > Q3R > Q4 for the primary label on ties.
void pick_label(CenterClass& out, bool h, bool lv, bool r, bool q4) {
    if (h) out.all_matches.push_back(CenterLabel::Q3H);
    if (lv) out.all_matches.push_back(CenterLabel::Q3LV);
    if (r) out.all_matches.push_back(CenterLabel::Q3R);
    if (q4) out.all_matches.push_back(CenterLabel::Q4);
    out.label = out.all_matches.empty() ? CenterLabel::None : out.all_matches.front();
}

} // namespace

CenterClass classify_canonical(const CanonicalQuadratic& c) {
    CenterClass out;
    auto& r = out.residuals;
    r["Q3R.a3"] = c.a3;
    r["Q3R.a2"] = c.a2;
    r["Q3H.a3"] = c.a3;
    r["Q3H.a1+2a4"] = c.a1 + 2.0 * c.a4;
    r["Q3LV.a2"] = c.a2;
    r["Q3LV.1+a4"] = 1.0 + c.a4;
    r["Q4.a3-5a2"] = c.a3 - 5.0 * c.a2;
    r["Q4.a1-5-3a4"] = c.a1 - (5.0 + 3.0 * c.a4);
    r["Q4.a4+2(1+a2^2)"] = c.a4 + 2.0 * (1.0 + c.a2 * c.a2);
    // Extra condition triple sharing the first two Q4 residuals; it reduces
    // to the reversible class in the original coefficients.
    r["deg.3(a4+2)(a4+1)^2-(5a4+6)a2^2"] =
        3.0 * (c.a4 + 2.0) * (c.a4 + 1.0) * (c.a4 + 1.0)
        - (5.0 * c.a4 + 6.0) * c.a2 * c.a2;

    const bool is_r = all_below(r, {"Q3R.a3", "Q3R.a2"}, kClassifyTol);
    const bool is_h = all_below(r, {"Q3H.a3", "Q3H.a1+2a4"}, kClassifyTol);
    const bool is_lv = all_below(r, {"Q3LV.a2", "Q3LV.1+a4"}, kClassifyTol);
    const bool is_q4 =
        all_below(r, {"Q4.a3-5a2", "Q4.a1-5-3a4", "Q4.a4+2(1+a2^2)"}, kClassifyTol);
    const bool is_deg = all_below(
        r, {"Q4.a3-5a2", "Q4.a1-5-3a4", "deg.3(a4+2)(a4+1)^2-(5a4+6)a2^2"},
        kClassifyTol);

    out.via_degenerate_case = is_deg && !is_r;
    pick_label(out, is_h, is_lv, is_r || is_deg, is_q4);
    return out;
}

CenterClass classify_complex(const ComplexFormParams& z) {
    using std::imag;
    const std::complex<double> A = z.A, B = z.B, C = z.C;
    CenterClass out;
    auto& r = out.residuals;
    out.v1 = -imag(A * B);
    r["lambda"] = z.lambda;
    r["Q3LV.|B|"] = std::abs(B);
    r["Q3H.|2A+conj(B)|"] = std::abs(2.0 * A + std::conj(B));
    r["Q3R.Im(AB)"] = imag(A * B);
    r["Q3R.Im(conj(B)^3 C)"] = imag(std::conj(B) * std::conj(B) * std::conj(B) * C);
    r["Q3R.Im(A^3 C)"] = imag(A * A * A * C);
    r["Q4.|A-2conj(B)|"] = std::abs(A - 2.0 * std::conj(B));
    r["Q4.|C|-|B|"] = std::abs(C) - std::abs(B);

    const bool lam = std::fabs(z.lambda) <= kClassifyTol;
    const bool is_lv = lam && all_below(r, {"Q3LV.|B|"}, kClassifyTol);
    const bool is_h = lam && all_below(r, {"Q3H.|2A+conj(B)|"}, kClassifyTol);
    const bool is_r = lam &&
        all_below(r, {"Q3R.Im(AB)", "Q3R.Im(conj(B)^3 C)", "Q3R.Im(A^3 C)"},
                  kClassifyTol);
    const bool is_q4 =
        lam && all_below(r, {"Q4.|A-2conj(B)|", "Q4.|C|-|B|"}, kClassifyTol);
    pick_label(out, is_h, is_lv, is_r, is_q4);
    return out;
}

CanonicalQuadratic complex_to_canonical(const ComplexFormParams& z, CenterLabel cls) {
    const double A1 = z.A.real(), A2 = z.A.imag();
    const double B1 = z.B.real(), B2 = z.B.imag();
    const double C1 = z.C.real(), C2 = z.C.imag();
    auto checked_div = [](double num, double den, const char* what) {
        if (std::fabs(den) < 1e-12)
            throw DegenerateMap(std::string("vanishing denominator ") + what);
        return num / den;
    };
    CanonicalQuadratic c;
    switch (cls) {
        case CenterLabel::Q3LV:
            c.a1 = checked_div(-2.0 * (A2 - C2), A2 + C2, "A2+C2");
            c.a3 = checked_div(-4.0 * A1, A2 + C2, "A2+C2");
            c.a2 = 0.0;
            c.a4 = -1.0;
            return c;
        case CenterLabel::Q3H:
            c.a1 = checked_div(-2.0 * (A2 - C2), 3.0 * A2 + C2, "3A2+C2");
            c.a2 = checked_div(4.0 * A1, 3.0 * A2 + C2, "3A2+C2");
            c.a3 = 0.0;
            c.a4 = -0.5 * c.a1;
            return c;
        case CenterLabel::Q3R:
            c.a1 = checked_div(2.0 * (A1 - C1), B1 - A1 - C1, "B1-A1-C1");
            c.a4 = checked_div(A1 + B1 + C1, B1 - A1 - C1, "B1-A1-C1");
            c.a2 = 0.0;
            c.a3 = 0.0;
            return c;
        case CenterLabel::Q4:
            c.a1 = checked_div(-2.0 * (2.0 * B2 + C2), B2 - C2, "B2-C2");
            c.a2 = checked_div(2.0 * B1, B2 - C2, "B2-C2");
            c.a3 = checked_div(10.0 * B1, B2 - C2, "B2-C2");
            c.a4 = checked_div(-(3.0 * B2 - C2), B2 - C2, "B2-C2");
            return c;
        case CenterLabel::None:
            break;
    }
    throw DegenerateMap("no canonical map for label None");
}

SingularityLayout singularity_layout(const ReversibleParams& p) {
    SingularityLayout out;
    out.equilibria.push_back({0.0, 0.0, EquilibriumKind::Center});
    // Jacobian at (1,0) is [[0, 1+a1],[1, 0]]: det = -(1+a1).
    const double det10 = -(1.0 + p.a1);
    out.equilibria.push_back(
        {1.0, 0.0, det10 > 0.0 ? EquilibriumKind::Center : EquilibriumKind::Saddle});
    if ((p.a1 + 1.0) * p.a4 < 0.0) {
        const double ys = std::sqrt(-p.a4 * (p.a1 + 1.0)) / (p.a1 * p.a4);
        out.equilibria.push_back({-1.0 / p.a1, ys, EquilibriumKind::Saddle});
        out.equilibria.push_back({-1.0 / p.a1, -ys, EquilibriumKind::Saddle});
    }
    return out;
}

namespace {

struct Field {
    std::function<double(double, double)> P, Q;      // the vector field
    std::function<double(double, double)> base;      // zero set of the factor
    std::function<double(double, double)> factor;    // integrating factor
};

double max_divergence(const Field& f) {
    const double step = 1e-6;
    const double skip = 0.2;  // exclusion radius around the factor's zero set
    double worst = 0.0;
    int used = 0;
    for (int i = 0; used < 500 && i < 5000; ++i) {
        const double x = -0.8 + 1.6 * halton(i + 1, 2);
        const double y = -0.8 + 1.6 * halton(i + 1, 3);
        if (std::fabs(f.base(x, y)) < skip) continue;
        // keep the whole finite-difference stencil clear of the zero set
        if (std::fabs(f.base(x + step, y)) < skip ||
            std::fabs(f.base(x - step, y)) < skip ||
            std::fabs(f.base(x, y + step)) < skip ||
            std::fabs(f.base(x, y - step)) < skip)
            continue;
        ++used;
        const double div =
            (f.factor(x + step, y) * f.P(x + step, y) -
             f.factor(x - step, y) * f.P(x - step, y)) / (2.0 * step) +
            (f.factor(x, y + step) * f.Q(x, y + step) -
             f.factor(x, y - step) * f.Q(x, y - step)) / (2.0 * step);
        worst = std::max(worst, std::fabs(div));
    }
    return worst;
}

} // namespace

double verify_integrating_factor(CenterLabel cls, const CanonicalQuadratic& c) {
    Field f;
    f.P = [c](double x, double y) {
        return y + c.a1 * x * y + c.a2 * y * y;
    };
    f.Q = [c](double x, double y) {
        return -x + x * x + c.a3 * x * y + c.a4 * y * y;
    };
    switch (cls) {
        case CenterLabel::Q3H:
            f.base = [](double, double) { return 1.0; };
            f.factor = [](double, double) { return 1.0; };
            break;
        case CenterLabel::Q3R: {
            const double expo = -(c.a1 + 2.0 * c.a4) / c.a1;
            f.base = [c](double x, double) { return 1.0 + c.a1 * x; };
            f.factor = [c, expo](double x, double) {
                return std::pow(std::fabs(1.0 + c.a1 * x), expo);
            };
            break;
        }
        case CenterLabel::Q3LV: {
            auto g = [c](double x, double y) {
                const double xm1 = x - 1.0;
                return (1.0 + c.a1 * x)
                    * (xm1 * xm1 + c.a3 * xm1 * y - (1.0 + c.a1) * y * y);
            };
            f.base = g;
            f.factor = [g](double x, double y) { return 1.0 / std::fabs(g(x, y)); };
            break;
        }
        case CenterLabel::Q4: {
            const double a2 = c.a2;
            auto g = [a2](double x, double y) {
                const double w = x + a2 * y;
                return 1.0 - 2.0 * (1.0 + 2.0 * a2 * a2) * x - 2.0 * a2 * y
                    + (1.0 + 4.0 * a2 * a2) * w * w;
            };
            f.base = g;
            f.factor = [g](double x, double y) {
                return std::pow(std::fabs(g(x, y)), -2.5);
            };
            break;
        }
        case CenterLabel::None:
            throw Error("verify_integrating_factor: label must not be None");
    }
    return max_divergence(f);
}

double verify_integrating_factor(CenterLabel cls, const ComplexFormParams& z) {
    const double A1 = z.A.real(), A2 = z.A.imag();
    const double B1 = z.B.real(), B2 = z.B.imag();
    const double C1 = z.C.real(), C2 = z.C.imag();
    Field f;
    // Real form of the complex system (with y -> -y), lambda = 0.
    f.P = [=](double x, double y) {
        return y + (A1 + B1 + C1) * x * x + 2.0 * (A2 - C2) * x * y
            - (A1 - B1 + C1) * y * y;
    };
    f.Q = [=](double x, double y) {
        return -x - (A2 + B2 + C2) * x * x + 2.0 * (A1 - C1) * x * y
            + (A2 - B2 + C2) * y * y;
    };
    switch (cls) {
        case CenterLabel::Q3H:
            f.base = [](double, double) { return 1.0; };
            f.factor = [](double, double) { return 1.0; };
            break;
        case CenterLabel::Q3R: {
            if (std::fabs(A1 - C1) < 1e-12)
                throw DegenerateMap("A1 = C1 in the reversible factor exponent");
            const double expo = -(2.0 * A1 + B1) / (A1 - C1);
            f.base = [=](double, double y) { return 1.0 - 2.0 * (A1 - C1) * y; };
            f.factor = [=](double, double y) {
                return std::pow(std::fabs(1.0 - 2.0 * (A1 - C1) * y), expo);
            };
            break;
        }
        case CenterLabel::Q3LV: {
            auto g = [=](double x, double y) {
                return 1.0 + 4.0 * (A2 * x - A1 * y)
                    + 4.0 * (A1 * C2 + A2 * C1 - 2.0 * A1 * A2) * x * y
                    + ((A1 + C1) * (A1 - 3.0 * C1)
                       + (A2 + C2) * (5.0 * A2 - 3.0 * C2)) * x * x
                    + ((A2 + C2) * (A2 - 3.0 * C2)
                       + (A1 + C1) * (5.0 * A1 - 3.0 * C1)) * y * y
                    + 2.0 * (A1 * A1 + A2 * A2 - C1 * C1 - C2 * C2)
                        * ((A2 + C2) * x * x * x - (A1 + C1) * y * y * y
                           - (A1 - 3.0 * C1) * x * x * y
                           + (A2 - 3.0 * C2) * x * y * y);
            };
            f.base = g;
            f.factor = [g](double x, double y) { return 1.0 / std::fabs(g(x, y)); };
            break;
        }
        case CenterLabel::Q4: {
            auto g = [=](double x, double y) {
                return 1.0 - 4.0 * (B2 * x + B1 * y)
                    + 2.0 * (B1 * B1 + B2 * B2) * (x * x + y * y)
                    + 2.0 * (B1 * C1 + B2 * C2) * (x * x - y * y)
                    + 4.0 * (B1 * C2 - B2 * C1) * x * y;
            };
            f.base = g;
            f.factor = [g](double x, double y) {
                return std::pow(std::fabs(g(x, y)), -2.5);
            };
            break;
        }
        case CenterLabel::None:
            throw Error("verify_integrating_factor: label must not be None");
    }
    return max_divergence(f);
}

} // namespace qlc
