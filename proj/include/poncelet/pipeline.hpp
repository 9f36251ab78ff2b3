#pragma once

#include <utility>

#include "poncelet/ellipse.hpp"
#include "poncelet/geometry.hpp"

// Scalar-generic kernels for the orbit -> center chain. Every step is a
// composition of +,-,*,/ and sqrt, so the same code evaluates in plain
// doubles and in Jet4 (value plus derivatives of the whole chain with
// respect to the boundary parameter). Preconditions are checked by the
// double-facing wrappers in orbit.hpp/locus.hpp, not here.

namespace poncelet::kernel {

template <class T>
Vec2T<T> boundary_point(const Ellipse& E, const T& t) {
    using std::cos;
    using std::sin;
    return {E.a * cos(t), E.b * sin(t)};
}

// cos^2(alpha) of the reflection angle at p1, the positive branch of
//   c^4 |T1|^4 u^2 + 2 (a^2+b^2) |T1|^2 u - 3 = 0,  |T1|^2 = x1^2/a^4 + y1^2/b^4,
// written as u = 3 / ((S + sqrt(S^2 + 3 c^4)) |T1|^2) so the circle limit
// c -> 0 degenerates to the linear solution with no cancellation. One
// Newton step on the quadratic polishes the root.
template <class T>
T reflection_cos2(const Ellipse& E, const Vec2T<T>& p1) {
    using std::sqrt;
    const double a2 = E.a * E.a, b2 = E.b * E.b;
    const double c2 = E.c * E.c;
    const double S = a2 + b2;
    const double c4 = c2 * c2;
    const T t2 = p1.x * p1.x / (a2 * a2) + p1.y * p1.y / (b2 * b2);
    T u = 3.0 / ((S + sqrt(T(S * S + 3.0 * c4))) * t2);
    const T f = c4 * t2 * t2 * u * u + 2.0 * S * t2 * u - 3.0;
    const T fp = 2.0 * c4 * t2 * t2 * u + 2.0 * S * t2;
    u = u - f / fp;
    return u;
}

// Second intersection of the ray p1 + s d with the ellipse. The root s = 0
// is factored out symbolically; the remaining equation is linear in s.
template <class T>
Vec2T<T> second_intersection(const Ellipse& E, const Vec2T<T>& p1, const Vec2T<T>& d) {
    const double a2 = E.a * E.a, b2 = E.b * E.b;
    const T q = d.x * d.x / a2 + d.y * d.y / b2;
    const T l = p1.x * d.x / a2 + p1.y * d.y / b2;
    const T s = -2.0 * l / q;
    return {p1.x + s * d.x, p1.y + s * d.y};
}

// Ray-traced far vertices: reflect the boundary frame at p1 by +/- alpha.
template <class T>
std::pair<Vec2T<T>, Vec2T<T>> trace_vertices(const Ellipse& E, const Vec2T<T>& p1,
                                             const T& cos_a, const T& sin_a) {
    using std::sqrt;
    const double a2 = E.a * E.a, b2 = E.b * E.b;
    const Vec2T<T> tan{-p1.y / b2, p1.x / a2};
    const Vec2T<T> nor{-p1.x / a2, -p1.y / b2};
    const T inv_len = 1.0 / sqrt(dot(tan, tan));  // |T| = |N|
    const Vec2T<T> ut = inv_len * tan;
    const Vec2T<T> un = inv_len * nor;
    const Vec2T<T> d12{sin_a * ut.x + cos_a * un.x, sin_a * ut.y + cos_a * un.y};
    const Vec2T<T> d13{cos_a * un.x - sin_a * ut.x, cos_a * un.y - sin_a * ut.y};
    return {second_intersection(E, p1, d12), second_intersection(E, p1, d13)};
}

// Rational closed forms for the far vertices. p3 is the same polynomial
// family evaluated with the reflected direction (sin -> -sin); the printed
// cubic-in-x1 coefficient is read as b^4(a^2 - (a^2+b^2)cos^2 t) on both.
// Returns numerators and the shared denominator so callers can guard it.
template <class T>
struct RationalVertex {
    T px, py, q;
};

template <class T>
RationalVertex<T> closed_form_vertex(const Ellipse& E, const Vec2T<T>& p1,
                                     const T& ct, const T& st) {
    const double a2 = E.a * E.a, b2 = E.b * E.b;
    const double a4 = a2 * a2, b4 = b2 * b2;
    const double a6 = a4 * a2, b6 = b4 * b2;
    const double c2 = a2 - b2;
    const T x1 = p1.x, y1 = p1.y;
    const T x2 = x1 * x1, y2 = y1 * y1;
    const T cc = ct * ct, cs = ct * st;

    RationalVertex<T> v;
    v.px = -b4 * ((a2 + b2) * cc - a2) * x2 * x1 - 2.0 * a6 * cs * y2 * y1 +
           a4 * ((a2 - 3.0 * b2) * cc + b2) * x1 * y2 - 2.0 * a4 * b2 * cs * x2 * y1;
    v.py = 2.0 * b6 * cs * x2 * x1 - a4 * ((a2 + b2) * cc - b2) * y2 * y1 +
           2.0 * a2 * b4 * cs * x1 * y2 + b4 * ((b2 - 3.0 * a2) * cc + a2) * x2 * y1;
    v.q = b4 * (a2 - c2 * cc) * x2 + a4 * (b2 + c2 * cc) * y2 - 2.0 * a2 * b2 * c2 * cs * x1 * y1;
    return v;
}

// Intersection of the perpendicular bisectors: the point equidistant from
// the three vertices, as a rational expression in the coordinates.
template <class T>
Vec2T<T> perpendicular_bisector_center(const Vec2T<T>& p1, const Vec2T<T>& p2,
                                       const Vec2T<T>& p3) {
    const T q1 = p1.x * p1.x + p1.y * p1.y;
    const T q2 = p2.x * p2.x + p2.y * p2.y;
    const T q3 = p3.x * p3.x + p3.y * p3.y;
    const T dx = p1.x * (p2.y - p3.y) + p2.x * (p3.y - p1.y) + p3.x * (p1.y - p2.y);
    const T dy = p1.y * (p3.x - p2.x) + p2.y * (p1.x - p3.x) + p3.y * (p2.x - p1.x);
    const T xc = 0.5 * (q1 * (p2.y - p3.y) + q2 * (p3.y - p1.y) + q3 * (p1.y - p2.y)) / dx;
    const T yc = 0.5 * (q1 * (p3.x - p2.x) + q2 * (p1.x - p3.x) + q3 * (p2.x - p1.x)) / dy;
    return {xc, yc};
}

// Side-length weighted vertex average: the point at equal distance from
// the three side lines.
template <class T>
Vec2T<T> angle_bisector_center(const Vec2T<T>& p1, const Vec2T<T>& p2, const Vec2T<T>& p3) {
    const T l1 = norm(p2 - p3);
    const T l2 = norm(p1 - p3);
    const T l3 = norm(p1 - p2);
    const T s = l1 + l2 + l3;
    return {(l1 * p1.x + l2 * p2.x + l3 * p3.x) / s, (l1 * p1.y + l2 * p2.y + l3 * p3.y) / s};
}

// Full geometric chain t -> p1 -> orbit -> center, the arbiter for every
// closed-form locus expression.
template <class T>
Vec2T<T> locus_center(const Ellipse& E, const T& t, bool incenter) {
    using std::sqrt;
    const Vec2T<T> p1 = boundary_point(E, t);
    const T u = reflection_cos2(E, p1);
    const T cos_a = sqrt(u);
    const T sin_a = sqrt(1.0 - u);
    auto [p2, p3] = trace_vertices(E, p1, cos_a, sin_a);
    return incenter ? angle_bisector_center(p1, p2, p3)
                    : perpendicular_bisector_center(p1, p2, p3);
}

// ---- closed-form locus parametrizations (perpendicular-bisector center) ----

// Compact form: x_c = (x1/a)(A^3 x1^2 + a02 y1^2)/(A^2 x1^2 + B^2 y1^2),
//               y_c = (y1/b)(b20 x1^2 + B^3 y1^2)/(A^2 x1^2 + B^2 y1^2).
template <class T>
Vec2T<T> locus_compact_form(const Ellipse& E, const Vec2T<T>& p1) {
    const double a = E.a, b = E.b;
    const double c2 = E.c * E.c;
    const double A = (a * a - E.delta) / (2.0 * a);
    const double B = (b * b - E.delta) / (2.0 * b);
    const double a02 = a * ((3.0 * a * a * a + a * b * b) * A - b * b * c2) / (4.0 * b * b);
    const double b20 = b * ((a * a * b + 3.0 * b * b * b) * B + a * a * c2) / (4.0 * a * a);
    const T x2 = p1.x * p1.x, y2 = p1.y * p1.y;
    const T den = A * A * x2 + B * B * y2;
    return {(p1.x / a) * (A * A * A * x2 + a02 * y2) / den,
            (p1.y / b) * (b20 * x2 + B * B * B * y2) / den};
}

// Intermediate form x_c = x1 F1 / (2 a^2 F3), y_c = y1 F2 / (2 b^2 F3).
template <class T>
Vec2T<T> locus_f_form(const Ellipse& E, const Vec2T<T>& p1) {
    const double a2 = E.a * E.a, b2 = E.b * E.b;
    const double a4 = a2 * a2, b4 = b2 * b2;
    const double d = E.delta;
    const T x2 = p1.x * p1.x, y2 = p1.y * p1.y;
    const T f1 = (b2 * (4.0 * a4 - a2 * b2 + b4) * d - a2 * b2 * (4.0 * a4 - 3.0 * a2 * b2 + 3.0 * b4)) * x2 +
                 a4 * ((3.0 * a2 + b2) * d - 3.0 * a4 + a2 * b2 - 2.0 * b4) * y2;
    const T f2 = (b4 * (a2 + 3.0 * b2) * d - b4 * (2.0 * a4 - a2 * b2 + 3.0 * b4)) * x2 +
                 (a2 * (a4 - a2 * b2 + 4.0 * b4) * d - a2 * b2 * (3.0 * a4 - 3.0 * a2 * b2 + 4.0 * b4)) * y2;
    const T f3 = (2.0 * a2 * b2 * d - b2 * (2.0 * a4 - a2 * b2 + b4)) * x2 +
                 (2.0 * a2 * b2 * d - a2 * (2.0 * b4 + a4 - a2 * b2)) * y2;
    return {p1.x * f1 / (2.0 * a2 * f3), p1.y * f2 / (2.0 * b2 * f3)};
}

// Same locus written through the caustic semi-axes a1, b1.
template <class T>
Vec2T<T> locus_caustic_form(const Ellipse& E, const Vec2T<T>& p1) {
    const double a2 = E.a * E.a, b2 = E.b * E.b;
    const double a4 = a2 * a2, b4 = b2 * b2;
    const double a6 = a4 * a2, b6 = b4 * b2;
    const CausticAxes ca = caustic_axes(E);
    const double a12 = ca.a1 * ca.a1, b12 = ca.b1 * ca.b1;
    const T x2 = p1.x * p1.x, y2 = p1.y * p1.y;
    const T den = b12 * x2 + a12 * y2;
    const T xc = 0.25 * p1.x *
                 (b2 * (b12 * (b4 - b2 * a2 + 4.0 * a4) - b6) * x2 +
                  a4 * (b2 * b12 - b4 + 3.0 * b12 * a2) * y2) /
                 (den * a4 * b2);
    const T yc = 0.25 * p1.y *
                 (b4 * (a12 * a2 - a4 + 3.0 * a12 * b2) * x2 +
                  a2 * (a12 * (a4 - b2 * a2 + 4.0 * b4) - a6) * y2) /
                 (den * a2 * b4);
    return {xc, yc};
}

}  // namespace poncelet::kernel
