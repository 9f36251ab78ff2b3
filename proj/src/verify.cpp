#include "poncelet/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "poncelet/affine.hpp"
#include "poncelet/axes_map.hpp"
#include "poncelet/centers.hpp"
#include "poncelet/locus.hpp"
#include "poncelet/orbit.hpp"
#include "poncelet/pipeline.hpp"

namespace poncelet {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void add(std::vector<CheckResult>& out, std::string name, double residual, double tol,
         bool warn_only = false) {
    const CheckStatus st = residual <= tol
                               ? CheckStatus::pass
                               : (warn_only ? CheckStatus::warn : CheckStatus::fail);
    out.push_back({std::move(name), residual, tol, st});
}

double rel(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// ---------------------------------------------------------------- conic core

void check_conic(const Ellipse& E, std::mt19937_64& rng, std::vector<CheckResult>& out,
                 const std::string& pre) {
    const double d1 = std::sqrt(E.a * E.a * E.a * E.a - E.a * E.a * E.b * E.b +
                                E.b * E.b * E.b * E.b);
    const double d2 = std::sqrt(E.a * E.a * E.c * E.c + E.b * E.b * E.b * E.b);
    add(out, pre + "conic/delta_identity", rel(d1, d2), 1e-15);

    const CausticAxes ca = caustic_axes(E);
    const double scale2 = std::max(E.a * E.a, 1.0);
    add(out, pre + "conic/confocality",
        std::abs(ca.a1 * ca.a1 - ca.b1 * ca.b1 - E.c * E.c) / scale2, 1e-11);
    add(out, pre + "conic/bilinear",
        std::abs(E.b * ca.a1 + E.a * ca.b1 - E.a * E.b) / (E.a * E.b), 1e-11);

    std::uniform_real_distribution<double> ut(0.0, two_pi);
    double worst_orth = 0.0, orient_bad = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Frame fr = frame_at(E, point_at(E, ut(rng)));
        worst_orth = std::max(worst_orth,
                              std::abs(dot(fr.T, fr.N)) / (norm(fr.T) * norm(fr.N)));
        if (!(cross(fr.T, fr.N) > 0.0)) orient_bad += 1.0;
    }
    add(out, pre + "conic/frame_orthogonality", worst_orth, 1e-14);
    add(out, pre + "conic/frame_orientation", orient_bad, 0.0);
}

// -------------------------------------------------------------- orbit builder

void check_orbit(const Ellipse& E, std::mt19937_64& rng, std::vector<CheckResult>& out,
                 const std::string& pre) {
    std::uniform_real_distribution<double> ut(0.0, two_pi);
    const double a2 = E.a * E.a, b2 = E.b * E.b;
    const double c4 = E.c * E.c * E.c * E.c, S = a2 + b2;

    double w_refl = 0.0, w_tang = 0.0, w_closed = 0.0, w_quartic = 0.0, w_branch = 0.0;
    double w_unique = 0.0, w_share = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Point2 p1 = point_at(E, ut(rng));
        const OrbitTriangle orb = build_orbit(E, p1);
        const OrbitResiduals res = orbit_residuals(E, orb);
        w_refl = std::max({w_refl, std::abs(res.reflection_p1), std::abs(res.reflection_p2),
                           std::abs(res.reflection_p3)});
        w_tang = std::max({w_tang, std::abs(res.tangency_12), std::abs(res.tangency_23),
                           std::abs(res.tangency_31)});

        const auto [q2, q3] = closed_form_vertices(E, p1, orb.alpha);
        w_closed = std::max({w_closed, std::abs(q2.x - orb.p2.x), std::abs(q2.y - orb.p2.y),
                             std::abs(q3.x - orb.p3.x), std::abs(q3.y - orb.p3.y)});

        const double u = reflection_cos2(E, p1);
        if (!(u > 0.0 && u <= 1.0)) w_branch += 1.0;
        const double t2 = p1.x * p1.x / (a2 * a2) + p1.y * p1.y / (b2 * b2);
        w_quartic = std::max(w_quartic,
                             std::abs(c4 * t2 * t2 * u * u + 2.0 * S * t2 * u - 3.0));

        const OrbitTriangle o2 = build_orbit(E, orb.p2);
        for (const Point2& v : {o2.p1, o2.p2, o2.p3}) {
            const double dmin = std::min({distance(v, orb.p1), distance(v, orb.p2),
                                          distance(v, orb.p3)});
            w_unique = std::max(w_unique, dmin);
        }

        // All three vertices of one orbit share one center, for both kinds.
        for (const CenterKind kind : {CenterKind::bisector, CenterKind::incenter}) {
            const Point2 c1 = triangle_center(kind, orb.p1, orb.p2, orb.p3);
            const Point2 c2 = triangle_center(kind, o2.p1, o2.p2, o2.p3);
            w_share = std::max(w_share, distance(c1, c2));
        }
    }
    add(out, pre + "orbit/reflection", w_refl, 1e-10);
    add(out, pre + "orbit/tangency", w_tang, 1e-8);
    add(out, pre + "orbit/closed_form_agreement", w_closed, 1e-9);
    add(out, pre + "orbit/quartic_branch", w_branch, 0.0);
    add(out, pre + "orbit/quartic_residual", w_quartic, 1e-12);
    add(out, pre + "orbit/uniqueness", w_unique, 1e-9);
    add(out, pre + "orbit/vertex_sharing", w_share, 1e-9);

    if (!E.is_circle()) {
        const CausticAxes ca = caustic_axes(E);
        const OrbitTriangle oa = build_orbit(E, {E.a, 0.0});
        const OrbitTriangle ob = build_orbit(E, {0.0, E.b});
        const double sym = std::max({std::abs(oa.p2.x + ca.a1), std::abs(oa.p3.x + ca.a1),
                                     std::abs(ob.p2.y + ca.b1), std::abs(ob.p3.y + ca.b1)}) /
                           E.a;
        add(out, pre + "orbit/axis_symmetry", sym, 1e-10);
    }
}

// -------------------------------------------------------------------- centers

void check_centers(const Ellipse& E, std::mt19937_64& rng, std::vector<CheckResult>& out,
                   const std::string& pre) {
    std::uniform_real_distribution<double> ut(0.0, two_pi);
    std::uniform_real_distribution<double> uv(-1.0, 1.0);

    double w_perm = 0.0, w_rigid = 0.0, w_inside = 0.0, w_equi = 0.0, w_side = 0.0;
    for (int i = 0; i < 100; ++i) {
        const OrbitTriangle orb = build_orbit(E, point_at(E, ut(rng)));
        const std::array<Point2, 3> v{orb.p1, orb.p2, orb.p3};

        for (const CenterKind kind : {CenterKind::bisector, CenterKind::incenter}) {
            const Point2 c0 = triangle_center(kind, v[0], v[1], v[2]);
            const std::array<std::array<int, 3>, 5> perms{
                {{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
            for (const auto& pm : perms) {
                const Point2 cp = triangle_center(kind, v[static_cast<size_t>(pm[0])],
                                                  v[static_cast<size_t>(pm[1])],
                                                  v[static_cast<size_t>(pm[2])]);
                w_perm = std::max({w_perm, std::abs(cp.x - c0.x), std::abs(cp.y - c0.y)});
            }

            const double th = ut(rng);
            const double ct = std::cos(th), st = std::sin(th);
            const Point2 tr{uv(rng), uv(rng)};
            auto move = [&](const Point2& p) -> Point2 {
                return {ct * p.x - st * p.y + tr.x, st * p.x + ct * p.y + tr.y};
            };
            const Point2 cm = triangle_center(kind, move(v[0]), move(v[1]), move(v[2]));
            const Point2 mc = move(c0);
            w_rigid = std::max({w_rigid, std::abs(cm.x - mc.x), std::abs(cm.y - mc.y)});
        }

        const Point2 cc = perpendicular_bisector_center(v[0], v[1], v[2]);
        const double r0 = distance(cc, v[0]);
        w_equi = std::max({w_equi, std::abs(distance(cc, v[1]) - r0) / r0,
                           std::abs(distance(cc, v[2]) - r0) / r0});

        const Point2 ic = angle_bisector_center(v[0], v[1], v[2]);
        double rprev = -1.0;
        for (int k = 0; k < 3; ++k) {
            const Point2 p = v[static_cast<size_t>(k)];
            const Point2 q = v[static_cast<size_t>((k + 1) % 3)];
            const Point2 r = v[static_cast<size_t>((k + 2) % 3)];
            // Signed side test: the incenter must be on the same side as the
            // opposite vertex, strictly.
            const double side_c = cross(q - p, ic - p);
            const double side_r = cross(q - p, r - p);
            if (!(side_c * side_r > 0.0)) w_inside += 1.0;
            const double dist_line = std::abs(side_c) / norm(q - p);
            if (rprev >= 0.0) w_side = std::max(w_side, std::abs(dist_line - rprev) / rprev);
            rprev = dist_line;
        }
    }
    add(out, pre + "centers/permutation", w_perm, 1e-12);
    add(out, pre + "centers/rigid_motion", w_rigid, 1e-10);
    add(out, pre + "centers/circumcenter_equidistant", w_equi, 1e-10);
    add(out, pre + "centers/incenter_interior", w_inside, 0.0);
    add(out, pre + "centers/incenter_side_distance", w_side, 1e-10);
}

// --------------------------------------------------------------- locus engine

void check_locus(const Ellipse& E, std::mt19937_64& rng, std::vector<CheckResult>& out,
                 const std::string& pre) {
    std::uniform_real_distribution<double> ut(0.0, two_pi);
    const CanonicalEllipse ce = canonical_circumlocus(E);
    const CausticAxes ca = caustic_axes(E);
    const double A = ce.sx, B = ce.sy;

    double w_canon = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Point2 c = kernel::locus_center(E, two_pi * i / 1000.0, false);
        w_canon = std::max(w_canon,
                           std::abs(c.x * c.x / (A * A) + c.y * c.y / (B * B) - 1.0));
    }
    add(out, pre + "locus/canonical_identity", w_canon, 1e-8);

    // Closed forms against the geometric pipeline (the arbiter): these are
    // the transcription checks and demote to WARN on disagreement.
    double w_form[3] = {0.0, 0.0, 0.0};
    double w_pair = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double t = ut(rng);
        const Point2 pipe = kernel::locus_center(E, t, false);
        const Point2 f[3] = {locus_param(E, t, LocusForm::compact),
                             locus_param(E, t, LocusForm::f_form),
                             locus_param(E, t, LocusForm::caustic_form)};
        for (int k = 0; k < 3; ++k)
            w_form[k] = std::max({w_form[k], std::abs(f[k].x - pipe.x),
                                  std::abs(f[k].y - pipe.y)});
        for (int k = 0; k < 3; ++k)
            for (int m = k + 1; m < 3; ++m)
                w_pair = std::max({w_pair, std::abs(f[k].x - f[m].x),
                                   std::abs(f[k].y - f[m].y)});
    }
    add(out, pre + "locus/form_compact_vs_pipeline", w_form[0], 1e-9, true);
    add(out, pre + "locus/form_f_vs_pipeline", w_form[1], 1e-9, true);
    add(out, pre + "locus/form_caustic_vs_pipeline", w_form[2], 1e-9, true);
    add(out, pre + "locus/forms_pairwise", w_pair, 1e-9, true);

    add(out, pre + "locus/similarity", rel(A / std::abs(B), ca.b1 / ca.a1), 1e-11);
    add(out, pre + "locus/foci",
        rel(std::sqrt(B * B - A * A), E.c * E.c * E.c / (2.0 * E.a * E.b)), 1e-10);
    const double a2b2 = 4.0 * E.a * E.a * E.b * E.b;
    const double c4 = E.c * E.c * E.c * E.c;
    add(out, pre + "locus/axes_identity_A", rel(a2b2 * A * A, c4 * ca.b1 * ca.b1), 1e-11);
    add(out, pre + "locus/axes_identity_B", rel(a2b2 * B * B, c4 * ca.a1 * ca.a1), 1e-11);

    add(out, pre + "locus/winding", std::abs(winding_angle(E, CenterKind::bisector) - 6.0 * std::numbers::pi),
        1e-6);

    const CoordinateZeros z = coordinate_zero_count(E, CenterKind::bisector);
    add(out, pre + "locus/zero_counts",
        std::abs(static_cast<double>(z.zeros_x.size()) - 6.0) +
            std::abs(static_cast<double>(z.zeros_y.size()) - 6.0),
        0.0);
    double at_half_pi = 1.0, at_3half_pi = 1.0;
    for (double zx : z.zeros_x) {
        at_half_pi = std::min(at_half_pi, std::abs(zx - std::numbers::pi / 2.0));
        at_3half_pi = std::min(at_3half_pi, std::abs(zx - 3.0 * std::numbers::pi / 2.0));
    }
    add(out, pre + "locus/zero_x_on_minor_axis", std::max(at_half_pi, at_3half_pi), 1e-6);

    const LocusScan scan(E, CenterKind::bisector);
    double w_cover = 0.0;
    for (int i = 0; i < 20; ++i) {
        const int deg = scan.covering_degree(scan.at(ut(rng)));
        w_cover = std::max(w_cover, std::abs(static_cast<double>(deg) - 3.0));
    }
    add(out, pre + "locus/covering_degree", w_cover, 0.0);

    const double bstar = containment_threshold(E.a);
    if (std::abs(E.b - bstar) > 1e-9 * E.a) {
        const bool want = E.b >= bstar;
        add(out, pre + "locus/containment_consistency",
            locus_contained_in_table(E) == want ? 0.0 : 1.0, 0.0);
    }

    // Conic fits: the numeric converse of the canonical equation, for both
    // center kinds, against their closed-form semi-axes.
    std::vector<Point2> bis, inc;
    for (const LocusSample& s : sample_locus(E, CenterKind::bisector, 1000)) bis.push_back(s.center);
    for (const LocusSample& s : sample_locus(E, CenterKind::incenter, 1000)) inc.push_back(s.center);
    const ConicFit fb = fit_axis_aligned_conic(bis);
    const ConicFit fi = fit_axis_aligned_conic(inc);
    add(out, pre + "locus/bisector_fit_axes",
        std::max(rel(fb.conic.sx, A), rel(fb.conic.sy, std::abs(B))), 1e-7);
    const double ix = (E.delta - E.b * E.b) / E.a;
    const double iy = (E.a * E.a - E.delta) / E.b;
    add(out, pre + "locus/incenter_fit_axes",
        std::max(rel(fi.conic.sx, ix), rel(fi.conic.sy, iy)), 1e-6);
    add(out, pre + "locus/fit_residuals", std::max(fb.fit_residual, fi.fit_residual), 1e-8);
}

// ------------------------------------------------------------ affine geometry

void check_affine(const Ellipse& E, std::vector<CheckResult>& out, const std::string& pre) {
    const JetCurve table = ellipse_jet_curve(E);
    const double expect = std::pow(E.a * E.b, -2.0 / 3.0);
    double w_table = 0.0;
    for (int i = 0; i < 16; ++i)
        w_table = std::max(w_table, rel(affine_curvature(table, two_pi * i / 16.0), expect));
    add(out, pre + "affine/table_curvature", w_table, 1e-8);

    if (!E.is_circle()) {
        const CanonicalEllipse ce = canonical_circumlocus(E);
        const ConstancyReport rep = constancy_report(locus_jet_curve(E), 1000);
        add(out, pre + "affine/locus_constancy", rep.rel_std, 1e-6);
        add(out, pre + "affine/locus_curvature_value",
            std::abs(rep.mean * rep.mean * rep.mean * ce.sx * ce.sx * ce.sy * ce.sy - 1.0),
            1e-6);
    }
}

// ------------------------------------------------------------------- axes map

void check_axes(const Ellipse& E, std::vector<CheckResult>& out, const std::string& pre) {
    const auto [x, y] = forward_map(E.a, E.b);
    add(out, pre + "axes/forward_in_region", (x > y && y > 0.0) ? 0.0 : 1.0, 0.0);

    const auto [ra, rb] = invert_map(x, y);
    add(out, pre + "axes/roundtrip", std::max(rel(ra, E.a), rel(rb, E.b)), 1e-9);
    add(out, pre + "axes/identity_confocal", rel(x * x - y * y, ra * ra - rb * rb), 1e-10);
    add(out, pre + "axes/identity_bilinear", rel(rb * x + ra * y, ra * rb), 1e-10);

    const double c2 = x * x - y * y;
    const QuarticRoots qr = quartic_real_roots(1.0, -2.0 * x, 0.0, 2.0 * c2 * x, -c2 * x * x);
    double bad = 0.0;
    if (qr.discriminant_sign != -1) bad += 1.0;
    if (qr.roots.size() != 2) bad += 1.0;
    int above = 0;
    for (double r : qr.roots)
        if (r > x) ++above;
    if (above != 1) bad += 1.0;
    add(out, pre + "axes/quartic_structure", bad, 0.0);

    const double h = 1e-6;
    const auto [fxp, fyp] = forward_map(E.a + h, E.b);
    const auto [fxm, fym] = forward_map(E.a - h, E.b);
    const auto [gxp, gyp] = forward_map(E.a, E.b + h);
    const auto [gxm, gym] = forward_map(E.a, E.b - h);
    const double det = ((fxp - fxm) * (gyp - gym) - (gxp - gxm) * (fyp - fym)) / (4.0 * h * h);
    add(out, pre + "axes/jacobian_positive", std::max(0.0, -det), 0.0);
}

std::string table_prefix(const Ellipse& E) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "table(%g,%g)/", E.a, E.b);
    return buf;
}

// --------------------------------------------- grid-only (cross-table) checks

void check_fd_cross(std::vector<CheckResult>& out) {
    // Jet derivatives of the pipeline locus coordinates vs Richardson-
    // extrapolated central differences at step 1e-3. Each order is
    // normalized by its own magnitude over the sample set: the order-4
    // derivative reaches ~1e5 while the finite difference carries an
    // absolute noise floor, so pointwise quotients would be meaningless
    // near its zeros.
    const Ellipse E(2.0, 1.0);
    std::mt19937_64 rng(20260816);
    std::uniform_real_distribution<double> ut(0.0, two_pi);

    auto fx = [&](double t) { return kernel::locus_center(E, t, false).x; };
    auto fy = [&](double t) { return kernel::locus_center(E, t, false).y; };
    auto fd4 = [](auto&& f, double t, double h, std::array<double, 4>& d) {
        const double fm2 = f(t - 2.0 * h), fm1 = f(t - h), f0 = f(t);
        const double fp1 = f(t + h), fp2 = f(t + 2.0 * h);
        d[0] = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
        d[1] = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
        d[2] = (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);
        d[3] = (fp2 - 4.0 * fp1 + 6.0 * f0 - 4.0 * fm1 + fm2) / (h * h * h * h);
    };

    const JetCurve pipe = pipeline_jet_curve(E, CenterKind::bisector);
    std::array<double, 4> worst{}, scale{};
    std::vector<std::array<double, 8>> rows;  // per-sample |err| and |jet| per order/coord
    for (int i = 0; i < 100; ++i) {
        const double t = ut(rng);
        const Vec2T<Jet4> g = pipe(Jet4::variable(t));
        std::array<double, 4> ah{}, ah2{}, bh{}, bh2{};
        fd4(fx, t, 1e-3, ah);
        fd4(fx, t, 5e-4, ah2);
        fd4(fy, t, 1e-3, bh);
        fd4(fy, t, 5e-4, bh2);
        std::array<double, 8> row{};
        for (int k = 0; k < 4; ++k) {
            // d1, d2 stencils are O(h^4); d3, d4 are O(h^2).
            const double wx = k < 2 ? (16.0 * ah2[static_cast<size_t>(k)] - ah[static_cast<size_t>(k)]) / 15.0
                                    : (4.0 * ah2[static_cast<size_t>(k)] - ah[static_cast<size_t>(k)]) / 3.0;
            const double wy = k < 2 ? (16.0 * bh2[static_cast<size_t>(k)] - bh[static_cast<size_t>(k)]) / 15.0
                                    : (4.0 * bh2[static_cast<size_t>(k)] - bh[static_cast<size_t>(k)]) / 3.0;
            const double jx = g.x.d[static_cast<size_t>(k + 1)];
            const double jy = g.y.d[static_cast<size_t>(k + 1)];
            row[static_cast<size_t>(2 * k)] = std::abs(wx - jx);
            row[static_cast<size_t>(2 * k + 1)] = std::abs(wy - jy);
            scale[static_cast<size_t>(k)] =
                std::max({scale[static_cast<size_t>(k)], std::abs(jx), std::abs(jy)});
        }
        rows.push_back(row);
    }
    for (const auto& row : rows)
        for (int k = 0; k < 4; ++k)
            worst[static_cast<size_t>(k)] =
                std::max({worst[static_cast<size_t>(k)],
                          row[static_cast<size_t>(2 * k)] / scale[static_cast<size_t>(k)],
                          row[static_cast<size_t>(2 * k + 1)] / scale[static_cast<size_t>(k)]});
    for (int k = 0; k < 4; ++k) {
        add(out, "affine/jet_vs_fd_order" + std::to_string(k + 1), worst[static_cast<size_t>(k)],
            1e-5);
    }
}

void check_unimodular(std::vector<CheckResult>& out) {
    const Ellipse E(2.0, 1.0);
    std::mt19937_64 rng(913);
    std::uniform_real_distribution<double> ut(0.0, two_pi);
    std::uniform_real_distribution<double> us(0.5, 2.0);

    const JetCurve base = locus_jet_curve(E);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        // det-1 map: rotation * diag(s, 1/s) * rotation.
        const double t1 = ut(rng), t2 = ut(rng), s = us(rng);
        const double c1 = std::cos(t1), s1 = std::sin(t1);
        const double c2 = std::cos(t2), s2 = std::sin(t2);
        const double m00 = c1 * s * c2 - s1 / s * s2;
        const double m01 = -c1 * s * s2 - s1 / s * c2;
        const double m10 = s1 * s * c2 + c1 / s * s2;
        const double m11 = -s1 * s * s2 + c1 / s * c2;
        const JetCurve mapped = [base, m00, m01, m10, m11](const Jet4& t) {
            const Vec2T<Jet4> g = base(t);
            return Vec2T<Jet4>{m00 * g.x + m01 * g.y, m10 * g.x + m11 * g.y};
        };
        for (int j = 0; j < 10; ++j) {
            const double t = ut(rng);
            worst = std::max(worst,
                             rel(affine_curvature(mapped, t), affine_curvature(base, t)));
        }
    }
    add(out, "affine/unimodular_invariance", worst, 1e-8);
}

void check_reparametrization(std::vector<CheckResult>& out) {
    const Ellipse E(2.0, 1.0);
    const JetCurve base = locus_jet_curve(E);
    const double shift = 0.731;
    const JetCurve shifted = [base, shift](const Jet4& t) { return base(t + shift); };
    const ConstancyReport r0 = constancy_report(base, 500);
    const ConstancyReport r1 = constancy_report(shifted, 500);
    add(out, "affine/reparametrization_mean", rel(r1.mean, r0.mean), 1e-9);
    add(out, "affine/reparametrization_std", std::max(r0.rel_std, r1.rel_std), 1e-6);
}

void check_containment_flip(std::vector<CheckResult>& out) {
    const double a = 2.0;
    const double bstar = containment_threshold(a);
    add(out, "containment/threshold_constant", rel(bstar / a, 0.5445504), 1e-6);
    const bool below = locus_contained_in_table(Ellipse(a, bstar * (1.0 - 1e-3)));
    const bool above = locus_contained_in_table(Ellipse(a, bstar * (1.0 + 1e-3)));
    add(out, "containment/flip", (!below && above) ? 0.0 : 1.0, 0.0);
}

void check_headline(std::vector<CheckResult>& out) {
    // The center-kind discrimination: on (3,1) the fitted incenter locus is
    // a different ellipse from the canonical bisector one.
    const Ellipse E(3.0, 1.0);
    const CanonicalEllipse ce = canonical_circumlocus(E);
    std::vector<Point2> inc, bis;
    for (const LocusSample& s : sample_locus(E, CenterKind::incenter, 1000)) inc.push_back(s.center);
    for (const LocusSample& s : sample_locus(E, CenterKind::bisector, 1000)) bis.push_back(s.center);
    const ConicFit fi = fit_axis_aligned_conic(inc);
    const ConicFit fb = fit_axis_aligned_conic(bis);

    add(out, "headline/incenter_axes",
        std::max(std::abs(fi.conic.sx - 2.5146679), std::abs(fi.conic.sy - 0.4559963)), 1e-5);
    add(out, "headline/bisector_axes",
        std::max(std::abs(fb.conic.sx - 0.0759994), std::abs(fb.conic.sy - 3.7720019)), 1e-5);
    add(out, "headline/fit_residuals", std::max(fi.fit_residual, fb.fit_residual), 1e-8);
    const double sep = std::abs(fi.conic.sx - std::abs(ce.sy)) / std::abs(ce.sy);
    add(out, "headline/center_kind_separation", std::max(0.0, 0.30 - sep), 0.0);
}

}  // namespace

std::vector<CheckResult> run_checks(const Ellipse& E) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    const std::string pre = table_prefix(E);
    check_conic(E, rng, out, pre);
    check_orbit(E, rng, out, pre);
    check_centers(E, rng, out, pre);
    check_affine(E, out, pre);
    if (!E.is_circle()) {
        check_locus(E, rng, out, pre);
        check_axes(E, out, pre);
    }
    return out;
}

std::vector<CheckResult> run_grid_checks() {
    std::vector<CheckResult> out;
    for (const Ellipse& E : {Ellipse(2.0, 1.0), Ellipse(3.0, 1.0), Ellipse(1.2, 1.0)}) {
        const std::vector<CheckResult> one = run_checks(E);
        out.insert(out.end(), one.begin(), one.end());
    }

    // 50-ellipse sweep over a/b in (1.01, 5]: the cross-table identities.
    std::mt19937_64 rng(0xa5a5a5a5deadbeefULL);
    std::uniform_real_distribution<double> ut(0.0, two_pi);
    double w_conf = 0.0, w_bil = 0.0, w_sim = 0.0, w_foci = 0.0, w_orbit = 0.0, w_curv = 0.0;
    for (int i = 1; i <= 50; ++i) {
        const double ratio = 1.01 + (5.0 - 1.01) * static_cast<double>(i) / 50.0;
        const Ellipse E(ratio, 1.0);
        const CausticAxes ca = caustic_axes(E);
        const CanonicalEllipse ce = canonical_circumlocus(E);
        w_conf = std::max(w_conf, std::abs(ca.a1 * ca.a1 - ca.b1 * ca.b1 - E.c * E.c) /
                                      std::max(E.a * E.a, 1.0));
        w_bil = std::max(w_bil,
                         std::abs(E.b * ca.a1 + E.a * ca.b1 - E.a * E.b) / (E.a * E.b));
        w_sim = std::max(w_sim, rel(ce.sx / std::abs(ce.sy), ca.b1 / ca.a1));
        w_foci = std::max(w_foci, rel(std::sqrt(ce.sy * ce.sy - ce.sx * ce.sx),
                                      E.c * E.c * E.c / (2.0 * E.a * E.b)));
        for (int k = 0; k < 3; ++k) {
            const OrbitTriangle orb = build_orbit(E, point_at(E, ut(rng)));
            const OrbitResiduals res = orbit_residuals(E, orb);
            w_orbit = std::max({w_orbit, std::abs(res.tangency_12), std::abs(res.tangency_23),
                                std::abs(res.tangency_31)});
        }
        const JetCurve table = ellipse_jet_curve(E);
        const double expect = std::pow(E.a * E.b, -2.0 / 3.0);
        for (int k = 0; k < 16; ++k)
            w_curv = std::max(w_curv, rel(affine_curvature(table, two_pi * k / 16.0), expect));
    }
    add(out, "grid50/confocality", w_conf, 1e-11);
    add(out, "grid50/bilinear", w_bil, 1e-11);
    add(out, "grid50/similarity", w_sim, 1e-11);
    add(out, "grid50/foci", w_foci, 1e-10);
    add(out, "grid50/orbit_tangency", w_orbit, 1e-8);
    add(out, "grid50/table_curvature", w_curv, 1e-8);

    // 200 log-spaced ratios: the axes-map diffeomorphism, quantitatively.
    double w_round = 0.0, w_ident = 0.0, w_struct = 0.0, w_region = 0.0;
    double min_jac = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 200; ++i) {
        const double ratio =
            std::exp(std::log(1.01) + (std::log(5.0) - std::log(1.01)) * i / 200.0);
        const double a = ratio, b = 1.0;
        const auto [x, y] = forward_map(a, b);
        if (!(x > y && y > 0.0)) w_region += 1.0;
        const auto [ra, rb] = invert_map(x, y);
        w_round = std::max({w_round, rel(ra, a), rel(rb, b)});
        w_ident = std::max({w_ident, rel(x * x - y * y, ra * ra - rb * rb),
                            rel(rb * x + ra * y, ra * rb)});

        const double c2 = x * x - y * y;
        const QuarticRoots qr =
            quartic_real_roots(1.0, -2.0 * x, 0.0, 2.0 * c2 * x, -c2 * x * x);
        int above = 0;
        for (double r : qr.roots)
            if (r > x) ++above;
        if (qr.discriminant_sign != -1 || qr.roots.size() != 2 || above != 1) w_struct += 1.0;

        const double h = 1e-6;
        const auto [fxp, fyp] = forward_map(a + h, b);
        const auto [fxm, fym] = forward_map(a - h, b);
        const auto [gxp, gyp] = forward_map(a, b + h);
        const auto [gxm, gym] = forward_map(a, b - h);
        const double det =
            ((fxp - fxm) * (gyp - gym) - (gxp - gxm) * (fyp - fym)) / (4.0 * h * h);
        min_jac = std::min(min_jac, det);
    }
    add(out, "grid200/roundtrip", w_round, 1e-9);
    add(out, "grid200/proof_identities", w_ident, 1e-10);
    add(out, "grid200/quartic_structure", w_struct, 0.0);
    add(out, "grid200/jacobian_positive", std::max(0.0, -min_jac), 0.0);
    add(out, "grid200/image_in_region", w_region, 0.0);

    check_containment_flip(out);
    check_headline(out);
    check_fd_cross(out);
    check_unimodular(out);
    check_reparametrization(out);
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::none_of(results.begin(), results.end(),
                        [](const CheckResult& r) { return r.status == CheckStatus::fail; });
}

}  // namespace poncelet
