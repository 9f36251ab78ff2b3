#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "poncelet/affine.hpp"
#include "poncelet/axes_map.hpp"
#include "poncelet/centers.hpp"
#include "poncelet/ellipse.hpp"
#include "poncelet/locus.hpp"
#include "poncelet/orbit.hpp"
#include "poncelet/svg.hpp"
#include "poncelet/verify.hpp"

namespace {

using nlohmann::json;
using namespace poncelet;

constexpr double two_pi = 2.0 * std::numbers::pi;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 1;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::vector<Point2> ellipse_polyline(double a, double b, int n) {
    std::vector<Point2> pts;
    pts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = two_pi * i / static_cast<double>(n);
        pts.push_back({a * std::cos(t), b * std::sin(t)});
    }
    return pts;
}

std::vector<Point2> locus_polyline(const Ellipse& E, CenterKind kind, int n) {
    std::vector<Point2> pts;
    pts.reserve(static_cast<size_t>(n));
    for (const LocusSample& s : sample_locus(E, kind, n)) pts.push_back(s.center);
    return pts;
}

CenterKind parse_center(const std::string& name) {
    if (name == "bisector") return CenterKind::bisector;
    if (name == "incenter") return CenterKind::incenter;
    throw std::runtime_error("unreachable: center flag is pre-validated");
}

// ------------------------------------------------------------------ commands

struct TableOpts {
    double a = 0.0, b = 0.0;
    bool json = false;
    std::string config;
};

int cmd_orbit(const TableOpts& tbl, double t, const std::string& csv_path,
              const std::string& svg_path) {
    const Ellipse E(tbl.a, tbl.b);
    const Point2 p1 = point_at(E, t);
    const OrbitTriangle orb = build_orbit(E, p1);
    const OrbitResiduals res = orbit_residuals(E, orb);
    const CausticAxes ca = caustic_axes(E);
    const double u = reflection_cos2(E, p1);

    if (!csv_path.empty()) {
        std::string csv = "vertex,x,y\n";
        csv += "1," + num(orb.p1.x) + "," + num(orb.p1.y) + "\n";
        csv += "2," + num(orb.p2.x) + "," + num(orb.p2.y) + "\n";
        csv += "3," + num(orb.p3.x) + "," + num(orb.p3.y) + "\n";
        write_file(csv_path, csv);
    }
    if (!svg_path.empty()) {
        write_file(svg_path,
                   svg_document({{"table", "#1f77b4", ellipse_polyline(E.a, E.b, 512), true},
                                 {"caustic", "#2ca02c", ellipse_polyline(ca.a1, ca.b1, 512), true},
                                 {"orbit", "#ff7f0e", {orb.p1, orb.p2, orb.p3}, true}}));
    }

    if (tbl.json) {
        json j;
        j["a"] = E.a;
        j["b"] = E.b;
        j["t"] = t;
        j["alpha"] = orb.alpha;
        j["cos2_alpha"] = u;
        j["vertices"] = {{orb.p1.x, orb.p1.y}, {orb.p2.x, orb.p2.y}, {orb.p3.x, orb.p3.y}};
        j["caustic"] = {{"a1", ca.a1}, {"b1", ca.b1}};
        j["residuals"] = {{"reflection_p1", res.reflection_p1},
                          {"reflection_p2", res.reflection_p2},
                          {"reflection_p3", res.reflection_p3},
                          {"tangency_12", res.tangency_12},
                          {"tangency_23", res.tangency_23},
                          {"tangency_31", res.tangency_31}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "table: a = " << num(E.a) << ", b = " << num(E.b) << " (c = " << num(E.c)
              << ", delta = " << num(E.delta) << ")\n";
    std::cout << "caustic: a1 = " << num(ca.a1) << ", b1 = " << num(ca.b1) << "\n";
    std::cout << "alpha = " << num(orb.alpha) << " rad (cos^2 alpha = " << num(u) << ")\n";
    std::cout << "p1 = (" << num(orb.p1.x) << ", " << num(orb.p1.y) << ")\n";
    std::cout << "p2 = (" << num(orb.p2.x) << ", " << num(orb.p2.y) << ")\n";
    std::cout << "p3 = (" << num(orb.p3.x) << ", " << num(orb.p3.y) << ")\n";
    std::cout << "reflection residuals: " << num(res.reflection_p1) << " "
              << num(res.reflection_p2) << " " << num(res.reflection_p3) << "\n";
    std::cout << "tangency residuals: " << num(res.tangency_12) << " " << num(res.tangency_23)
              << " " << num(res.tangency_31) << "\n";
    return 0;
}

int cmd_locus(const TableOpts& tbl, const std::string& center, int n, bool fit,
              const std::string& csv_path, const std::string& svg_path) {
    const Ellipse E(tbl.a, tbl.b);
    const CenterKind kind = parse_center(center);
    const std::vector<LocusSample> samples = sample_locus(E, kind, n);

    std::string csv = "t,x1,y1,xc,yc,residual_canonical\n";
    double max_resid = 0.0;
    for (const LocusSample& s : samples) {
        csv += num(s.t) + "," + num(s.p1.x) + "," + num(s.p1.y) + "," + num(s.center.x) + "," +
               num(s.center.y) + "," + num(s.residual_canonical) + "\n";
        max_resid = std::max(max_resid, s.residual_canonical);
    }
    if (!csv_path.empty()) write_file(csv_path, csv);

    if (!svg_path.empty()) {
        const CausticAxes ca = caustic_axes(E);
        const int m = std::max(n, 512);
        write_file(svg_path,
                   svg_document({{"table", "#1f77b4", ellipse_polyline(E.a, E.b, 512), true},
                                 {"caustic", "#2ca02c", ellipse_polyline(ca.a1, ca.b1, 512), true},
                                 {"locus", "#d62728", locus_polyline(E, kind, m), true}}));
    }

    ConicFit fit_bis{}, fit_inc{};
    if (fit) {
        std::vector<Point2> pts;
        for (const LocusSample& s : samples) pts.push_back(s.center);
        const std::vector<LocusSample> other =
            sample_locus(E, kind == CenterKind::bisector ? CenterKind::incenter
                                                         : CenterKind::bisector, n);
        std::vector<Point2> pts_other;
        for (const LocusSample& s : other) pts_other.push_back(s.center);
        const ConicFit mine = fit_axis_aligned_conic(pts);
        const ConicFit theirs = fit_axis_aligned_conic(pts_other);
        fit_bis = kind == CenterKind::bisector ? mine : theirs;
        fit_inc = kind == CenterKind::bisector ? theirs : mine;
    }

    if (tbl.json) {
        json j;
        j["a"] = E.a;
        j["b"] = E.b;
        j["center"] = center;
        j["n"] = n;
        j["max_residual_canonical"] = max_resid;
        if (!E.is_circle()) {
            const CanonicalEllipse ce = canonical_circumlocus(E);
            j["canonical"] = {{"sx", ce.sx},
                              {"sy", ce.sy},
                              {"focal_axis", ce.focal_axis == CanonicalEllipse::Axis::x ? "x" : "y"},
                              {"focal_dist", ce.focal_dist}};
        }
        if (fit) {
            const ConicFit& mine = kind == CenterKind::bisector ? fit_bis : fit_inc;
            j["fit"] = {{"sx", mine.conic.sx},
                        {"sy", mine.conic.sy},
                        {"fit_residual", mine.fit_residual}};
            j["fit_bisector"] = {{"sx", fit_bis.conic.sx},
                                 {"sy", fit_bis.conic.sy},
                                 {"fit_residual", fit_bis.fit_residual}};
            j["fit_incenter"] = {{"sx", fit_inc.conic.sx},
                                 {"sy", fit_inc.conic.sy},
                                 {"fit_residual", fit_inc.fit_residual}};
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (csv_path.empty()) std::cout << csv;
    if (fit) {
        const ConicFit& mine = kind == CenterKind::bisector ? fit_bis : fit_inc;
        json jf = {{"sx", mine.conic.sx},
                   {"sy", mine.conic.sy},
                   {"fit_residual", mine.fit_residual}};
        std::cout << jf.dump() << "\n";
        std::cout << "center-kind fits: bisector (" << num(fit_bis.conic.sx) << ", "
                  << num(fit_bis.conic.sy) << ") vs incenter (" << num(fit_inc.conic.sx) << ", "
                  << num(fit_inc.conic.sy) << ")\n";
    }
    return 0;
}

int cmd_caustic(const TableOpts& tbl) {
    const Ellipse E(tbl.a, tbl.b);
    const CausticAxes ca = caustic_axes(E);
    const double confocality = std::abs(ca.a1 * ca.a1 - ca.b1 * ca.b1 - E.c * E.c);
    const double bilinear = std::abs(E.b * ca.a1 + E.a * ca.b1 - E.a * E.b);
    if (tbl.json) {
        json j;
        j["a"] = E.a;
        j["b"] = E.b;
        j["a1"] = ca.a1;
        j["b1"] = ca.b1;
        j["confocality_residual"] = confocality;
        j["bilinear_residual"] = bilinear;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "a1 = " << num(ca.a1) << "\n";
    std::cout << "b1 = " << num(ca.b1) << "\n";
    std::cout << "confocality residual |a1^2 - b1^2 - c^2| = " << num(confocality) << "\n";
    std::cout << "bilinear residual |b a1 + a b1 - a b| = " << num(bilinear) << "\n";
    return 0;
}

int cmd_curvature(const TableOpts& tbl, const std::string& curve_name,
                  const std::string& center, int n) {
    const Ellipse E(tbl.a, tbl.b);
    JetCurve curve;
    double expected = 0.0;
    if (curve_name == "table") {
        curve = ellipse_jet_curve(E);
        expected = std::pow(E.a * E.b, -2.0 / 3.0);
    } else if (curve_name == "locus") {
        curve = locus_jet_curve(E);
        const CanonicalEllipse ce = canonical_circumlocus(E);
        expected = std::pow(ce.sx * ce.sx * ce.sy * ce.sy, -1.0 / 3.0);
    } else {
        const CenterKind kind = parse_center(center);
        curve = pipeline_jet_curve(E, kind);
        if (kind == CenterKind::bisector) {
            const CanonicalEllipse ce = canonical_circumlocus(E);
            expected = std::pow(ce.sx * ce.sx * ce.sy * ce.sy, -1.0 / 3.0);
        } else {
            const double ix = (E.delta - E.b * E.b) / E.a;
            const double iy = (E.a * E.a - E.delta) / E.b;
            expected = std::pow(ix * ix * iy * iy, -1.0 / 3.0);
        }
    }
    const ConstancyReport rep = constancy_report(curve, n);
    const double rel = std::abs(rep.mean - expected) / expected;
    if (tbl.json) {
        json j;
        j["a"] = E.a;
        j["b"] = E.b;
        j["curve"] = curve_name;
        if (curve_name == "pipeline") j["center"] = center;
        j["n"] = n;
        j["mean"] = rep.mean;
        j["max_abs_dev"] = rep.max_abs_dev;
        j["rel_std"] = rep.rel_std;
        j["expected"] = expected;
        j["mean_vs_expected_rel"] = rel;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "affine curvature over " << n << " samples (" << curve_name << "):\n";
    std::cout << "mean = " << num(rep.mean) << "\n";
    std::cout << "max_abs_dev = " << num(rep.max_abs_dev) << "\n";
    std::cout << "rel_std = " << num(rep.rel_std) << "\n";
    std::cout << "expected = " << num(expected) << " (rel diff " << num(rel) << ")\n";
    return 0;
}

int cmd_covering(const TableOpts& tbl, const std::string& center, double t_probe,
                 bool t_given, int probes) {
    const Ellipse E(tbl.a, tbl.b);
    const CenterKind kind = parse_center(center);
    const LocusScan scan(E, kind);

    std::vector<double> ts;
    if (t_given) {
        ts.push_back(t_probe);
    } else {
        std::mt19937_64 rng(12345);
        std::uniform_real_distribution<double> ut(0.0, two_pi);
        for (int i = 0; i < probes; ++i) ts.push_back(ut(rng));
    }

    json rows = json::array();
    bool all_three = true;
    for (double t : ts) {
        const Point2 p = scan.at(t);
        const int deg = scan.covering_degree(p);
        all_three = all_three && deg == 3;
        rows.push_back({{"t", t}, {"x", p.x}, {"y", p.y}, {"degree", deg}});
        if (!tbl.json)
            std::cout << "t = " << num(t) << "  center = (" << num(p.x) << ", " << num(p.y)
                      << ")  degree = " << deg << "\n";
    }
    if (tbl.json) {
        json j;
        j["a"] = E.a;
        j["b"] = E.b;
        j["center"] = center;
        j["probes"] = rows;
        j["all_three"] = all_three;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (all_three ? "all probes have 3 preimages\n"
                                : "some probe does not have 3 preimages\n");
    }
    return 0;
}

int cmd_invert(double x, double y, bool json_out) {
    const auto [a, b] = invert_map(x, y);
    const auto [rx, ry] = forward_map(a, b);
    const double round = std::max(std::abs(rx - x) / x, std::abs(ry - y) / std::max(y, 1e-300));
    const double c2 = x * x - y * y;
    const QuarticRoots qr = quartic_real_roots(1.0, -2.0 * x, 0.0, 2.0 * c2 * x, -c2 * x * x);
    if (json_out) {
        json j;
        j["x"] = x;
        j["y"] = y;
        j["a"] = a;
        j["b"] = b;
        j["roundtrip"] = {{"x", rx}, {"y", ry}};
        j["roundtrip_residual"] = round;
        j["quartic_roots"] = qr.roots;
        j["discriminant_sign"] = qr.discriminant_sign;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "a = " << num(a) << "\n";
    std::cout << "b = " << num(b) << "\n";
    std::cout << "roundtrip caustic = (" << num(rx) << ", " << num(ry) << "), residual "
              << num(round) << "\n";
    std::cout << "quartic real roots:";
    for (double r : qr.roots) std::cout << " " << num(r);
    std::cout << " (discriminant sign " << qr.discriminant_sign << ")\n";
    return 0;
}

int cmd_check(bool grid, bool have_table, double a, double b, bool json_out) {
    std::vector<CheckResult> results;
    if (grid)
        results = run_grid_checks();
    else
        results = run_checks(Ellipse(a, b));

    int passed = 0, warned = 0, failed = 0;
    for (const CheckResult& r : results) {
        if (r.status == CheckStatus::pass) ++passed;
        if (r.status == CheckStatus::warn) ++warned;
        if (r.status == CheckStatus::fail) ++failed;
    }
    if (json_out) {
        json arr = json::array();
        for (const CheckResult& r : results) {
            arr.push_back({{"name", r.name},
                           {"max_residual", r.max_residual},
                           {"tolerance", r.tolerance},
                           {"status", r.status == CheckStatus::pass
                                          ? "pass"
                                          : (r.status == CheckStatus::warn ? "warn" : "fail")}});
        }
        json j;
        j["mode"] = grid ? "grid" : "single";
        if (!grid) {
            j["a"] = a;
            j["b"] = b;
        }
        j["results"] = arr;
        j["passed"] = passed;
        j["warned"] = warned;
        j["failed"] = failed;
        j["all_passed"] = failed == 0;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const CheckResult& r : results) {
            const char* tag = r.status == CheckStatus::pass
                                  ? "PASS"
                                  : (r.status == CheckStatus::warn ? "WARN" : "FAIL");
            std::cout << tag << "  " << r.name << "  max_residual=" << num(r.max_residual)
                      << " tolerance=" << num(r.tolerance) << "\n";
        }
        std::cout << passed << " passed, " << warned << " warned, " << failed << " failed\n";
    }
    (void)have_table;
    return failed == 0 ? 0 : 2;
}

// --------------------------------------------------------------- config file

// Config values are injected as argv tokens right after the subcommand
// token, so explicit flags (parsed later, with TakeLast policy) win.
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    size_t sub = args.size();
    for (size_t i = 0; i < args.size(); ++i) {
        if (!args[i].empty() && args[i][0] != '-') {
            sub = i;
            break;
        }
    }
    if (sub == args.size()) return args;

    std::string path;
    for (size_t i = sub + 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty()) return args;

    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json cfg = json::parse(in);
    if (!cfg.is_object()) throw std::runtime_error("config file must hold a JSON object");
    std::vector<std::string> inject;
    for (const auto& [key, value] : cfg.items()) {
        if (value.is_boolean()) {
            if (value.get<bool>()) inject.push_back("--" + key);
        } else {
            inject.push_back("--" + key);
            inject.push_back(value.is_string() ? value.get<std::string>() : value.dump());
        }
    }
    args.insert(args.begin() + static_cast<long>(sub) + 1, inject.begin(), inject.end());
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-periodic orbits of elliptic billiards and their center loci"};
    app.require_subcommand(1);
    const auto take_last = CLI::MultiOptionPolicy::TakeLast;

    TableOpts orbit_tbl;
    double orbit_t = 0.0;
    std::string orbit_csv, orbit_svg;
    CLI::App* orbit_cmd = app.add_subcommand("orbit", "Build the 3-periodic orbit through a boundary point");
    orbit_cmd->add_option("--a", orbit_tbl.a, "semi-axis along x")->required()->multi_option_policy(take_last);
    orbit_cmd->add_option("--b", orbit_tbl.b, "semi-axis along y")->required()->multi_option_policy(take_last);
    orbit_cmd->add_option("--t", orbit_t, "boundary parameter (radians)")->multi_option_policy(take_last);
    orbit_cmd->add_option("--csv", orbit_csv, "write vertices to a CSV file")->multi_option_policy(take_last);
    orbit_cmd->add_option("--svg", orbit_svg, "draw table, caustic, orbit to an SVG file")->multi_option_policy(take_last);
    orbit_cmd->add_flag("--json", orbit_tbl.json, "emit a JSON report");
    orbit_cmd->add_option("--config", orbit_tbl.config, "JSON file with default flag values")->multi_option_policy(take_last);

    TableOpts locus_tbl;
    std::string locus_center = "bisector";
    int locus_n = 1000;
    bool locus_fit = false;
    std::string locus_csv, locus_svg;
    CLI::App* locus_cmd = app.add_subcommand("locus", "Sample a triangle-center locus over the orbit family");
    locus_cmd->add_option("--a", locus_tbl.a, "semi-axis along x")->required()->multi_option_policy(take_last);
    locus_cmd->add_option("--b", locus_tbl.b, "semi-axis along y")->required()->multi_option_policy(take_last);
    locus_cmd->add_option("--center", locus_center, "center kind: bisector | incenter")
        ->check(CLI::IsMember({"bisector", "incenter"}))->multi_option_policy(take_last);
    locus_cmd->add_option("--n", locus_n, "number of samples (>= 8)")->multi_option_policy(take_last);
    locus_cmd->add_flag("--fit", locus_fit, "fit an axis-aligned conic to both center kinds");
    locus_cmd->add_option("--csv", locus_csv, "write the sample table to a CSV file")->multi_option_policy(take_last);
    locus_cmd->add_option("--svg", locus_svg, "draw table, caustic, locus to an SVG file")->multi_option_policy(take_last);
    locus_cmd->add_flag("--json", locus_tbl.json, "emit a JSON report");
    locus_cmd->add_option("--config", locus_tbl.config, "JSON file with default flag values")->multi_option_policy(take_last);

    TableOpts caustic_tbl;
    CLI::App* caustic_cmd = app.add_subcommand("caustic", "Confocal caustic semi-axes");
    caustic_cmd->add_option("--a", caustic_tbl.a, "semi-axis along x")->required()->multi_option_policy(take_last);
    caustic_cmd->add_option("--b", caustic_tbl.b, "semi-axis along y")->required()->multi_option_policy(take_last);
    caustic_cmd->add_flag("--json", caustic_tbl.json, "emit a JSON report");
    caustic_cmd->add_option("--config", caustic_tbl.config, "JSON file with default flag values")->multi_option_policy(take_last);

    TableOpts curv_tbl;
    std::string curv_curve = "locus";
    std::string curv_center = "bisector";
    int curv_n = 1000;
    CLI::App* curv_cmd = app.add_subcommand("curvature", "Affine-curvature constancy report");
    curv_cmd->add_option("--a", curv_tbl.a, "semi-axis along x")->required()->multi_option_policy(take_last);
    curv_cmd->add_option("--b", curv_tbl.b, "semi-axis along y")->required()->multi_option_policy(take_last);
    curv_cmd->add_option("--curve", curv_curve, "curve: table | locus | pipeline")
        ->check(CLI::IsMember({"table", "locus", "pipeline"}))->multi_option_policy(take_last);
    curv_cmd->add_option("--center", curv_center, "center kind for --curve pipeline")
        ->check(CLI::IsMember({"bisector", "incenter"}))->multi_option_policy(take_last);
    curv_cmd->add_option("--n", curv_n, "number of samples (>= 16)")->multi_option_policy(take_last);
    curv_cmd->add_flag("--json", curv_tbl.json, "emit a JSON report");
    curv_cmd->add_option("--config", curv_tbl.config, "JSON file with default flag values")->multi_option_policy(take_last);

    TableOpts cover_tbl;
    std::string cover_center = "bisector";
    double cover_t = 0.0;
    int cover_probes = 10;
    CLI::App* cover_cmd = app.add_subcommand("covering", "Count locus preimages (the triple covering)");
    cover_cmd->add_option("--a", cover_tbl.a, "semi-axis along x")->required()->multi_option_policy(take_last);
    cover_cmd->add_option("--b", cover_tbl.b, "semi-axis along y")->required()->multi_option_policy(take_last);
    cover_cmd->add_option("--center", cover_center, "center kind: bisector | incenter")
        ->check(CLI::IsMember({"bisector", "incenter"}))->multi_option_policy(take_last);
    CLI::Option* cover_t_opt =
        cover_cmd->add_option("--t", cover_t, "probe the locus point at this parameter")->multi_option_policy(take_last);
    cover_cmd->add_option("--probes", cover_probes, "number of random probes when --t is absent")->multi_option_policy(take_last);
    cover_cmd->add_flag("--json", cover_tbl.json, "emit a JSON report");
    cover_cmd->add_option("--config", cover_tbl.config, "JSON file with default flag values")->multi_option_policy(take_last);

    double inv_x = 0.0, inv_y = 0.0;
    bool inv_json = false;
    std::string inv_config;
    CLI::App* inv_cmd = app.add_subcommand("invert", "Recover the table from caustic semi-axes");
    inv_cmd->add_option("--x", inv_x, "caustic semi-axis along x")->required()->multi_option_policy(take_last);
    inv_cmd->add_option("--y", inv_y, "caustic semi-axis along y")->required()->multi_option_policy(take_last);
    inv_cmd->add_flag("--json", inv_json, "emit a JSON report");
    inv_cmd->add_option("--config", inv_config, "JSON file with default flag values")->multi_option_policy(take_last);

    TableOpts check_tbl;
    bool check_grid = false;
    CLI::App* check_cmd = app.add_subcommand("check", "Run the invariant suite");
    CLI::Option* check_a = check_cmd->add_option("--a", check_tbl.a, "semi-axis along x")->multi_option_policy(take_last);
    CLI::Option* check_b = check_cmd->add_option("--b", check_tbl.b, "semi-axis along y")->multi_option_policy(take_last);
    check_cmd->add_flag("--grid", check_grid, "run the full cross-table sweep");
    check_cmd->add_flag("--json", check_tbl.json, "emit a JSON report");
    check_cmd->add_option("--config", check_tbl.config, "JSON file with default flag values")->multi_option_policy(take_last);

    std::vector<std::string> args;
    try {
        args = expand_config(argc, argv);
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    auto validate_table = [](double a, double b) -> const char* {
        if (!(a > 0.0) || !(b > 0.0)) return "axes must be positive";
        if (a < b) return "the major axis must come first (a >= b)";
        return nullptr;
    };

    try {
        if (*orbit_cmd) {
            if (const char* m = validate_table(orbit_tbl.a, orbit_tbl.b)) return usage_error(m);
            return cmd_orbit(orbit_tbl, orbit_t, orbit_csv, orbit_svg);
        }
        if (*locus_cmd) {
            if (const char* m = validate_table(locus_tbl.a, locus_tbl.b)) return usage_error(m);
            if (locus_n < 8) return usage_error("--n must be at least 8");
            return cmd_locus(locus_tbl, locus_center, locus_n, locus_fit, locus_csv, locus_svg);
        }
        if (*caustic_cmd) {
            if (const char* m = validate_table(caustic_tbl.a, caustic_tbl.b)) return usage_error(m);
            return cmd_caustic(caustic_tbl);
        }
        if (*curv_cmd) {
            if (const char* m = validate_table(curv_tbl.a, curv_tbl.b)) return usage_error(m);
            if (curv_n < 16) return usage_error("--n must be at least 16");
            return cmd_curvature(curv_tbl, curv_curve, curv_center, curv_n);
        }
        if (*cover_cmd) {
            if (const char* m = validate_table(cover_tbl.a, cover_tbl.b)) return usage_error(m);
            if (cover_probes < 1) return usage_error("--probes must be at least 1");
            return cmd_covering(cover_tbl, cover_center, cover_t, cover_t_opt->count() > 0,
                                cover_probes);
        }
        if (*inv_cmd) {
            if (!(inv_x > 0.0) || !(inv_y > 0.0) || !(inv_x > inv_y))
                return usage_error("caustic axes must satisfy x > y > 0");
            return cmd_invert(inv_x, inv_y, inv_json);
        }
        if (*check_cmd) {
            const bool have_table = check_a->count() > 0 && check_b->count() > 0;
            if (!check_grid && !have_table)
                return usage_error("check needs either --grid or both --a and --b");
            if (have_table) {
                if (const char* m = validate_table(check_tbl.a, check_tbl.b))
                    return usage_error(m);
            }
            return cmd_check(check_grid, have_table, check_tbl.a, check_tbl.b, check_tbl.json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return usage_error("no subcommand given");
}
