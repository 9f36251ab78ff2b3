#include "poncelet/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "poncelet/pipeline.hpp"

namespace poncelet {

namespace {

void require_on_ellipse(const Ellipse& E, const Point2& p, double tol, const char* who) {
    if (!(std::abs(E.implicit(p)) < tol)) {
        throw std::domain_error(std::string(who) + ": point not on the ellipse");
    }
}

}  // namespace

double reflection_cos2(const Ellipse& E, const Point2& p1) {
    require_on_ellipse(E, p1, 1e-9, "reflection_cos2");
    return kernel::reflection_cos2(E, p1);
}

double reflection_angle(const Ellipse& E, const Point2& p1) {
    const double u = std::clamp(reflection_cos2(E, p1), 0.0, 1.0);
    return std::acos(std::sqrt(u));
}

OrbitTriangle build_orbit(const Ellipse& E, const Point2& p1) {
    require_on_ellipse(E, p1, 1e-9, "build_orbit");
    const double u = kernel::reflection_cos2(E, p1);
    const double cos_a = std::sqrt(u);
    const double sin_a = std::sqrt(1.0 - u);
    auto [p2, p3] = kernel::trace_vertices(E, p1, cos_a, sin_a);
    OrbitTriangle orbit{p1, p2, p3, std::acos(cos_a)};

    // Construction invariants.
    if (std::abs(E.implicit(p2)) >= 1e-10 || std::abs(E.implicit(p3)) >= 1e-10)
        throw std::domain_error("build_orbit: traced vertex left the ellipse");
    const double min_sep = std::min({distance(p1, p2), distance(p2, p3), distance(p3, p1)});
    if (min_sep <= 1e-8 * E.a) throw std::domain_error("build_orbit: degenerate orbit");
    const OrbitResiduals r = orbit_residuals(E, orbit);
    const double worst_refl = std::max({std::abs(r.reflection_p1), std::abs(r.reflection_p2),
                                        std::abs(r.reflection_p3)});
    const double worst_tan = std::max({std::abs(r.tangency_12), std::abs(r.tangency_23),
                                       std::abs(r.tangency_31)});
    if (worst_refl >= 1e-9 || worst_tan >= 1e-8)
        throw std::domain_error("build_orbit: orbit failed residual validation");
    return orbit;
}

std::pair<Point2, Point2> closed_form_vertices(const Ellipse& E, const Point2& p1, double alpha) {
    require_on_ellipse(E, p1, 1e-9, "closed_form_vertices");
    const double ct = std::cos(alpha);
    const double st = std::sin(alpha);
    const auto v2 = kernel::closed_form_vertex(E, p1, ct, st);
    const auto v3 = kernel::closed_form_vertex(E, p1, ct, -st);
    const double qscale = std::pow(E.a, 8.0);
    if (std::abs(v2.q) < 1e-12 * qscale || std::abs(v3.q) < 1e-12 * qscale)
        throw std::domain_error("closed_form_vertices: degenerate denominator");
    return {Point2{v2.px / v2.q, v2.py / v2.q}, Point2{v3.px / v3.q, v3.py / v3.q}};
}

OrbitResiduals orbit_residuals(const Ellipse& E, const OrbitTriangle& orbit) {
    const Point2 ps[3] = {orbit.p1, orbit.p2, orbit.p3};
    for (const auto& p : ps) require_on_ellipse(E, p, 1e-9, "orbit_residuals");
    const double min_sep = std::min({distance(ps[0], ps[1]), distance(ps[1], ps[2]),
                                     distance(ps[2], ps[0])});
    if (min_sep <= 1e-8 * E.a) throw std::domain_error("orbit_residuals: duplicate vertices");

    auto reflect_residual = [&](const Point2& v, const Point2& u, const Point2& w) {
        const Point2 n{-v.x / (E.a * E.a), -v.y / (E.b * E.b)};
        const Point2 s1 = u - v;
        const Point2 s2 = w - v;
        return dot(s1, n) / (norm(s1) * norm(n)) - dot(s2, n) / (norm(s2) * norm(n));
    };

    const CausticAxes ca = caustic_axes(E);
    OrbitResiduals r;
    r.reflection_p1 = reflect_residual(orbit.p1, orbit.p2, orbit.p3);
    r.reflection_p2 = reflect_residual(orbit.p2, orbit.p1, orbit.p3);
    r.reflection_p3 = reflect_residual(orbit.p3, orbit.p1, orbit.p2);
    r.tangency_12 = line_tangency_residual(orbit.p1, orbit.p2, ca.a1, ca.b1);
    r.tangency_23 = line_tangency_residual(orbit.p2, orbit.p3, ca.a1, ca.b1);
    r.tangency_31 = line_tangency_residual(orbit.p3, orbit.p1, ca.a1, ca.b1);
    return r;
}

}  // namespace poncelet
