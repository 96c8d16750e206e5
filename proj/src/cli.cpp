#include "qlc/cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"

#include "qlc/classify.hpp"
#include "qlc/hopf.hpp"
#include "qlc/integrable.hpp"
#include "qlc/melnikov.hpp"
#include "qlc/model.hpp"
#include "qlc/odesim.hpp"
#include "qlc/util.hpp"

namespace qlc::cli {

using nlohmann::json;

namespace {

std::complex<double> parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {parse_real(text), 0.0};
    return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

Region parse_region(const std::string& text) {
    if (text == "left") return Region::Left;
    if (text == "right") return Region::Right;
    throw Error("--region must be 'left' or 'right'");
}

void write_text(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + path + "'");
    out << content;
}

std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json layout_json(const SingularityLayout& layout) {
    json arr = json::array();
    for (const auto& e : layout.equilibria) {
        const char* kind = "degenerate";
        switch (e.kind) {
            case EquilibriumKind::Center: kind = "center"; break;
            case EquilibriumKind::Saddle: kind = "saddle"; break;
            case EquilibriumKind::Node: kind = "node"; break;
            case EquilibriumKind::Focus: kind = "focus"; break;
            case EquilibriumKind::Degenerate: kind = "degenerate"; break;
        }
        arr.push_back({{"x", e.x}, {"y", e.y}, {"kind", kind}});
    }
    return arr;
}

json class_json(const CenterClass& cc, bool complex_input) {
    json doc;
    doc["label"] = label_name(cc.label);
    json matches = json::array();
    for (auto m : cc.all_matches) matches.push_back(label_name(m));
    doc["all_matches"] = matches;
    doc["residuals"] = json(cc.residuals);
    if (complex_input) doc["v1"] = cc.v1;
    if (cc.via_degenerate_case)
        doc["note"] = "matched through the degenerate condition triple, which "
                      "reduces to the reversible class";
    return doc;
}

struct NumberOpt {
    std::string text;
    bool given = false;
    double value(const char* name) const {
        if (!given) throw Error(std::string("missing required option ") + name);
        return parse_real(text);
    }
    double value_or(double fallback) const {
        return given ? parse_real(text) : fallback;
    }
};

void add_number(CLI::App* cmd, const char* flag, NumberOpt& slot, const char* desc) {
    cmd->add_option_function<std::string>(
           flag,
           [&slot](const std::string& v) {
               slot.text = v;
               slot.given = true;
           },
           desc)
        ->type_name("NUM");
}

} // namespace

json reproduce_case(const CaseSpec& spec, bool with_cycles, double rel_tol,
                    int jobs, std::string& text, bool& all_pass) {
    json checks = json::array();
    all_pass = true;
    auto record = [&](const std::string& status, const std::string& name,
                      double expected, double computed, double err,
                      const std::string& note = "") {
        json c{{"name", name}, {"status", status}, {"expected", expected},
               {"computed", computed}, {"err", err}};
        if (!note.empty()) c["note"] = note;
        checks.push_back(c);
        text += status + "  " + name + "  expected=" + fmt_g17(expected) +
                " computed=" + fmt_g17(computed) + " err=" + fmt_g17(err);
        if (!note.empty()) text += "  (" + note + ")";
        text += "\n";
        if (status == "FAIL") all_pass = false;
    };
    auto rel_check = [&](const std::string& name, double expected, double computed,
                         double tol) {
        const double scale = std::max(std::fabs(expected), 1e-15);
        const double err = std::fabs(computed - expected) / scale;
        record(err <= tol ? "PASS" : "FAIL", name, expected, computed, err);
    };

    const ReversibleParams p = validate_reversible({spec.a1, spec.a4});
    const CriticalLevels cl = critical_levels(p);
    rel_check("levels.h00", spec.h00, cl.h00, 1e-12);
    rel_check("levels.h10", spec.h10, cl.h10, 1e-12);

    Perturbation q;
    q.a10 = 1.0;
    q.b01 = spec.b01_over_a10;
    q.b11 = spec.b11_over_a10;
    const MuCoefficients mu = mu_coefficients(p, q);
    for (const auto& s : spec.mu_spots) {
        const double computed = (s.row == 0) ? mu.mu0[s.index] : mu.mu1[s.index];
        rel_check(std::string("mu.") + s.name, s.expected, computed, 1e-12);
        if (s.info_only) {
            record("INFO", std::string("mu.") + s.name + ".source-figure",
                   s.conflicting_value, computed,
                   std::fabs(computed - s.conflicting_value),
                   "the source figure disagrees with the closed form; the closed "
                   "form is asserted");
        }
    }

    for (const auto& m : spec.melnikov_spots) {
        LevelSet ls(m.h, m.region, cl);
        const double computed = melnikov(ls, p, q, rel_tol);
        const double err = std::fabs(computed - m.expected);
        record(err <= m.abs_tol ? "PASS" : "FAIL",
               std::string("melnikov.") + region_name(m.region) + "@h=" +
                   fmt_g17(m.h),
               m.expected, computed, err);
    }

    json zeros = json::array();
    for (const auto& zs : spec.zeros) {
        const std::string zname =
            std::string("zero.") + region_name(zs.region) + "[" +
            fmt_g17(zs.expect_lo) + "," + fmt_g17(zs.expect_hi) + "]";
        auto samples = scan(zs.region, zs.scan_lo, zs.scan_hi, 200, p, q, rel_tol, jobs);
        auto brackets = sign_changes(samples);
        if (brackets.empty()) {
            record("FAIL", zname, 0.5 * (zs.expect_lo + zs.expect_hi),
                   std::nan(""), std::nan(""), "no sign change in the scan window");
            continue;
        }
        std::optional<double> found;
        for (const auto& br : brackets) {
            const double z = find_zero(br, p, q, zs.region, rel_tol);
            zeros.push_back({{"region", region_name(zs.region)},
                             {"lo", br.lo},
                             {"hi", br.hi},
                             {"h_star", z}});
            if (z > zs.expect_lo && z < zs.expect_hi) found = z;
        }
        if (zs.tight) {
            const double mid = 0.5 * (zs.expect_lo + zs.expect_hi);
            if (brackets.size() != 1) {
                record("FAIL", zname, mid, std::nan(""),
                       static_cast<double>(brackets.size()),
                       "expected exactly one sign change in the scan window");
                continue;
            }
            const double z = zeros.back()["h_star"].get<double>();
            const double err = std::fabs(z - mid);
            record(err <= 1e-6 ? "PASS" : "FAIL", zname, mid, z, err);
            if (found)
                record("INFO", zname + ".inside-box", mid, z, err,
                       "landed inside the reference interval");
        } else {
            if (found)
                record("PASS", zname, 0.5 * (zs.expect_lo + zs.expect_hi), *found,
                       0.0);
            else
                record("FAIL", zname, 0.5 * (zs.expect_lo + zs.expect_hi),
                       brackets.empty() ? std::nan("")
                                        : zeros.back()["h_star"].get<double>(),
                       std::nan(""), "no zero inside the expected interval");
        }
    }

    json cycles = json::array();
    if (with_cycles) {
        Perturbation qe = q;
        qe.eps = 1e-3;
        for (const auto& z : zeros) {
            const double h_star = z["h_star"].get<double>();
            const CenterId center = (z["region"].get<std::string>() ==
                                     std::string(region_name(Region::Left)))
                ? CenterId::Origin
                : CenterId::OneZero;
            const std::string cname = std::string("cycle@h=") + fmt_g17(h_star);
            try {
                const CycleReport rep = locate_cycle(p, qe, center, h_star);
                const double err = std::fabs(rep.h_assoc - h_star);
                record(err <= 0.05 ? "PASS" : "FAIL", cname, h_star, rep.h_assoc,
                       err);
                cycles.push_back({{"center", center == CenterId::Origin
                                                 ? "origin" : "one_zero"},
                                  {"x_cross", rep.x_cross},
                                  {"period", rep.period},
                                  {"h_assoc", rep.h_assoc}});
            } catch (const Error& e) {
                record("FAIL", cname, h_star, std::nan(""), std::nan(""), e.what());
            }
        }
    }

    json doc;
    doc["case"] = std::string(1, spec.label);
    doc["a1"] = spec.a1;
    doc["a4"] = spec.a4;
    doc["checks"] = checks;
    doc["zeros"] = zeros;
    if (with_cycles) doc["cycles"] = cycles;
    doc["pass"] = all_pass;
    return doc;
}

namespace {

std::string csv_from_scan(const std::vector<MelnikovSample>& samples) {
    std::string out = "h,M,ok\n";
    for (const auto& s : samples) {
        out += fmt_g17(s.h);
        out += ',';
        out += s.ok ? fmt_g17(s.M) : "nan";
        out += ',';
        out += s.ok ? '1' : '0';
        out += '\n';
    }
    return out;
}

int run_impl(int argc, const char* const* argv) {
    CLI::App app{"numerical laboratory for limit cycles of perturbed quadratic "
                 "integrable systems"};
    app.require_subcommand(1);

    NumberOpt a1, a2, a3, a4, a10, b01, b11, eps, lambda, x0, y0, tmax, h_lo, h_hi,
        h_at, h_hint, tol_opt;
    std::string A_s, B_s, C_s, region_s = "left", out_path, center_s = "origin",
                case_s, distribution_s;
    int n = 200;
    int jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs <= 0) jobs = 1;
    bool with_cycles = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        add_number(cmd, "--tol", tol_opt, "relative quadrature tolerance");
        cmd->add_option("--jobs", jobs, "worker threads for scans");
    };

    CLI::App* c_classify = app.add_subcommand("classify", "center classification");
    add_number(c_classify, "--a1", a1, "canonical coefficient a1");
    add_number(c_classify, "--a2", a2, "canonical coefficient a2");
    add_number(c_classify, "--a3", a3, "canonical coefficient a3");
    add_number(c_classify, "--a4", a4, "canonical coefficient a4");
    add_number(c_classify, "--lambda", lambda, "complex-form lambda");
    c_classify->add_option("--A", A_s, "complex coefficient A as re,im");
    c_classify->add_option("--B", B_s, "complex coefficient B as re,im");
    c_classify->add_option("--C", C_s, "complex coefficient C as re,im");
    c_classify->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* c_levels = app.add_subcommand("levels", "critical levels h00, h10");
    add_number(c_levels, "--a1", a1, "a1");
    add_number(c_levels, "--a4", a4, "a4");
    c_levels->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* c_mu = app.add_subcommand("mu", "expansion coefficients at both centers");
    add_number(c_mu, "--a1", a1, "a1");
    add_number(c_mu, "--a4", a4, "a4");
    add_number(c_mu, "--a10", a10, "perturbation a10");
    add_number(c_mu, "--b01", b01, "perturbation b01");
    add_number(c_mu, "--b11", b11, "perturbation b11");
    c_mu->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* c_solve = app.add_subcommand(
        "hopf-solve", "solve the perturbation for a small-cycle distribution");
    c_solve->add_option("--distribution", distribution_s, "target as n0,n1")
        ->required();
    add_number(c_solve, "--a1", a1, "a1");
    add_number(c_solve, "--a4", a4, "a4 (ignored for 3,0 and 0,3)");
    add_number(c_solve, "--a10", a10, "a10 scale (default 1)");
    c_solve->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* c_scan = app.add_subcommand("scan", "sample M(h) over a level range");
    add_number(c_scan, "--a1", a1, "a1");
    add_number(c_scan, "--a4", a4, "a4");
    add_number(c_scan, "--a10", a10, "a10");
    add_number(c_scan, "--b01", b01, "b01");
    add_number(c_scan, "--b11", b11, "b11");
    c_scan->add_option("--region", region_s, "left|right");
    add_number(c_scan, "--h-lo", h_lo, "lower level bound");
    add_number(c_scan, "--h-hi", h_hi, "upper level bound");
    c_scan->add_option("--n", n, "number of samples");
    add_common(c_scan);

    CLI::App* c_zeros = app.add_subcommand("zeros", "locate zeros of M(h)");
    add_number(c_zeros, "--a1", a1, "a1");
    add_number(c_zeros, "--a4", a4, "a4");
    add_number(c_zeros, "--a10", a10, "a10");
    add_number(c_zeros, "--b01", b01, "b01");
    add_number(c_zeros, "--b11", b11, "b11");
    c_zeros->add_option("--region", region_s, "left|right");
    add_number(c_zeros, "--h-lo", h_lo, "lower level bound");
    add_number(c_zeros, "--h-hi", h_hi, "upper level bound");
    c_zeros->add_option("--n", n, "scan resolution");
    add_common(c_zeros);

    CLI::App* c_sim = app.add_subcommand("simulate", "integrate the perturbed system");
    add_number(c_sim, "--a1", a1, "a1");
    add_number(c_sim, "--a4", a4, "a4");
    add_number(c_sim, "--eps", eps, "perturbation size");
    add_number(c_sim, "--a10", a10, "a10");
    add_number(c_sim, "--b01", b01, "b01");
    add_number(c_sim, "--b11", b11, "b11");
    add_number(c_sim, "--x0", x0, "initial x");
    add_number(c_sim, "--y0", y0, "initial y");
    add_number(c_sim, "--tmax", tmax, "integration time");
    add_common(c_sim);

    CLI::App* c_cycles = app.add_subcommand("cycles", "locate a large limit cycle");
    add_number(c_cycles, "--a1", a1, "a1");
    add_number(c_cycles, "--a4", a4, "a4");
    add_number(c_cycles, "--eps", eps, "perturbation size");
    add_number(c_cycles, "--a10", a10, "a10");
    add_number(c_cycles, "--b01", b01, "b01");
    add_number(c_cycles, "--b11", b11, "b11");
    c_cycles->add_option("--center", center_s, "origin|one_zero");
    add_number(c_cycles, "--h-hint", h_hint, "level near the expected cycle");
    c_cycles->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* c_repro = app.add_subcommand("reproduce", "run a benchmark case");
    c_repro->add_option("--case", case_s, "case label A..E")->required();
    c_repro->add_flag("--cycles", with_cycles, "also locate the large cycles");
    add_common(c_repro);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const double rel_tol = tol_opt.value_or(1e-11);

    if (app.got_subcommand(c_classify)) {
        json doc;
        if (a1.given || a2.given || a3.given || a4.given) {
            CanonicalQuadratic c{a1.value("--a1"), a2.value_or(0.0),
                                 a3.value_or(0.0), a4.value("--a4")};
            CenterClass cc = classify_canonical(c);
            doc = class_json(cc, false);
            doc["layout"] = nullptr;
            if (cc.label == CenterLabel::Q3R) {
                try {
                    doc["layout"] = layout_json(
                        singularity_layout(validate_reversible({c.a1, c.a4})));
                } catch (const Error& e) {
                    doc["layout_error"] = e.what();
                }
            }
        } else {
            ComplexFormParams z;
            z.lambda = lambda.value_or(0.0);
            z.A = parse_complex(A_s.empty() ? "0" : A_s);
            z.B = parse_complex(B_s.empty() ? "0" : B_s);
            z.C = parse_complex(C_s.empty() ? "0" : C_s);
            CenterClass cc = classify_complex(z);
            doc = class_json(cc, true);
            doc["layout"] = nullptr;
            if (cc.label == CenterLabel::Q3R) {
                try {
                    CanonicalQuadratic c = complex_to_canonical(z, CenterLabel::Q3R);
                    doc["layout"] = layout_json(
                        singularity_layout(validate_reversible({c.a1, c.a4})));
                } catch (const Error& e) {
                    doc["layout_error"] = e.what();
                }
            }
        }
        write_text(out_path, doc.dump(2) + "\n");
        return 0;
    }

    if (app.got_subcommand(c_levels)) {
        const ReversibleParams p =
            validate_reversible({a1.value("--a1"), a4.value("--a4")});
        const CriticalLevels cl = critical_levels(p);
        json doc{{"h00", cl.h00}, {"h10", cl.h10}, {"two_center", p.two_center}};
        write_text(out_path, doc.dump(2) + "\n");
        return 0;
    }

    if (app.got_subcommand(c_mu)) {
        const ReversibleParams p =
            validate_reversible({a1.value("--a1"), a4.value("--a4")});
        Perturbation q;
        q.a10 = a10.value_or(1.0);
        q.b01 = b01.value_or(0.0);
        q.b11 = b11.value_or(0.0);
        const MuCoefficients mu = mu_coefficients(p, q);
        json doc{{"mu0", mu.mu0}, {"mu1", mu.mu1}};
        write_text(out_path, doc.dump(2) + "\n");
        return 0;
    }

    if (app.got_subcommand(c_solve)) {
        const auto comma = distribution_s.find(',');
        if (comma == std::string::npos)
            throw Error("--distribution must be n0,n1");
        const int n0 = std::stoi(distribution_s.substr(0, comma));
        const int n1 = std::stoi(distribution_s.substr(comma + 1));
        const double a1v = a1.value("--a1");
        double a4v;
        if (std::pair<int, int>{n0, n1} == std::pair<int, int>{3, 0})
            a4v = solve_a4_zero_mu02(a1v);
        else if (std::pair<int, int>{n0, n1} == std::pair<int, int>{0, 3})
            a4v = solve_a4_zero_mu12(a1v);
        else
            a4v = a4.value("--a4");
        const ReversibleParams p = validate_reversible({a1v, a4v});
        const Distribution d = distribution(p, {n0, n1}, a10.value_or(1.0));
        json doc{{"n0", d.n0},       {"n1", d.n1},   {"possible", d.possible},
                 {"a1", d.a1},       {"a4", d.a4},   {"a10", d.a10},
                 {"b01", d.b01},     {"b11", d.b11},
                 {"witnesses", json(d.witnesses)}};
        if (!d.note.empty()) doc["note"] = d.note;
        if (!d.possible) {
            std::cerr << "impossible: " << d.note << "\n";
            write_text(out_path, doc.dump(2) + "\n");
            return 1;
        }
        write_text(out_path, doc.dump(2) + "\n");
        return 0;
    }

    if (app.got_subcommand(c_scan) || app.got_subcommand(c_zeros)) {
        const ReversibleParams p =
            validate_reversible({a1.value("--a1"), a4.value("--a4")});
        Perturbation q;
        q.a10 = a10.value_or(1.0);
        q.b01 = b01.value_or(0.0);
        q.b11 = b11.value_or(0.0);
        const Region region = parse_region(region_s);
        auto samples = scan(region, h_lo.value("--h-lo"), h_hi.value("--h-hi"), n, p,
                            q, rel_tol, jobs);
        if (app.got_subcommand(c_scan)) {
            write_text(out_path, csv_from_scan(samples));
            int failed = 0;
            for (const auto& s : samples)
                if (!s.ok) ++failed;
            return failed == static_cast<int>(samples.size()) ? 1 : 0;
        }
        json out = json::array();
        for (const auto& br : sign_changes(samples)) {
            const double z = find_zero(br, p, q, region, rel_tol);
            out.push_back({{"lo", br.lo}, {"hi", br.hi}, {"h_star", z}});
        }
        write_text(out_path, out.dump(2) + "\n");
        return 0;
    }

    if (app.got_subcommand(c_sim)) {
        const ReversibleParams p =
            validate_reversible({a1.value("--a1"), a4.value("--a4")});
        Perturbation q;
        q.eps = eps.value_or(0.0);
        q.a10 = a10.value_or(0.0);
        q.b01 = b01.value_or(0.0);
        q.b11 = b11.value_or(0.0);
        const double sim_tol = tol_opt.value_or(1e-10);
        Trajectory traj = integrate(p, q, x0.value("--x0"), y0.value("--y0"),
                                    tmax.value_or(100.0), sim_tol);
        std::string csv = "t,x,y\n";
        for (const auto& s : traj.samples)
            csv += fmt_g17(s.t) + "," + fmt_g17(s.x) + "," + fmt_g17(s.y) + "\n";
        write_text(out_path, csv);
        log_info("steps=" + std::to_string(traj.stats.steps) +
                 " rejected=" + std::to_string(traj.stats.rejected));
        return 0;
    }

    if (app.got_subcommand(c_cycles)) {
        const ReversibleParams p =
            validate_reversible({a1.value("--a1"), a4.value("--a4")});
        Perturbation q;
        q.eps = eps.value_or(1e-3);
        q.a10 = a10.value_or(1.0);
        q.b01 = b01.value_or(0.0);
        q.b11 = b11.value_or(0.0);
        const CenterId center =
            (center_s == "one_zero") ? CenterId::OneZero : CenterId::Origin;
        const CycleReport rep = locate_cycle(p, q, center, h_hint.value("--h-hint"));
        const char* stab = rep.stability == Stability::Attracting ? "attracting"
            : rep.stability == Stability::Repelling ? "repelling"
                                                    : "undetermined";
        json doc{{"center", center == CenterId::Origin ? "origin" : "one_zero"},
                 {"x_cross", rep.x_cross},
                 {"period", rep.period},
                 {"stability", stab},
                 {"h_assoc", rep.h_assoc}};
        write_text(out_path, doc.dump(2) + "\n");
        return 0;
    }

    if (app.got_subcommand(c_repro)) {
        if (case_s.size() != 1) throw Error("--case expects a single letter A..E");
        const CaseSpec& spec = case_by_label(case_s[0]);
        std::string text;
        bool all_pass = false;
        json doc = reproduce_case(spec, with_cycles, rel_tol, jobs, text, all_pass);
        std::cout << text;
        if (!out_path.empty()) write_text(out_path, doc.dump(2) + "\n");
        return all_pass ? 0 : 1;
    }

    return 2;
}

} // namespace

int run(int argc, const char* const* argv) {
    try {
        return run_impl(argc, argv);
    } catch (const Error& e) {
        json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}

} // namespace qlc::cli
