#include "poncelet/ellipse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace poncelet {

Ellipse::Ellipse(double a_, double b_) : a(a_), b(b_) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("Ellipse: semi-axes must be positive");
    if (a < b) throw std::invalid_argument("Ellipse: major axis first (a >= b required)");
    c = std::sqrt((a - b) * (a + b));
    delta = std::sqrt(a * a * c * c + b * b * b * b);
}

Point2 point_at(const Ellipse& E, double t) {
    return {E.a * std::cos(t), E.b * std::sin(t)};
}

Frame frame_at(const Ellipse& E, const Point2& p) {
    if (std::abs(E.implicit(p)) >= 1e-9) throw std::domain_error("frame_at: point not on the ellipse");
    Frame f;
    f.T = {-p.y / (E.b * E.b), p.x / (E.a * E.a)};
    f.N = {-p.x / (E.a * E.a), -p.y / (E.b * E.b)};
    const double len = norm(f.T);  // |T| = |N|
    f.unit_T = (1.0 / len) * f.T;
    f.unit_N = (1.0 / len) * f.N;
    return f;
}

CausticAxes caustic_axes(const Ellipse& E) {
    if (E.is_circle()) return {E.a / 2.0, E.a / 2.0};
    const double c2 = E.c * E.c;
    return {E.a * (E.delta - E.b * E.b) / c2, E.b * (E.a * E.a - E.delta) / c2};
}

double line_tangency_residual(const Point2& p, const Point2& q, double a1, double b1) {
    const double dx = q.x - p.x;
    const double dy = q.y - p.y;
    const double scale = std::max({std::abs(p.x), std::abs(p.y), std::abs(q.x), std::abs(q.y), 1.0});
    if (std::hypot(dx, dy) < 1e-15 * scale)
        throw std::domain_error("line_tangency_residual: coincident points");

    double raw, k;
    if (std::abs(dx) <= 1e-14 * std::abs(dy)) {
        k = p.x;  // vertical line x = k
        raw = k * k - a1 * a1;
    } else {
        const double m = dy / dx;
        k = p.y - m * p.x;
        raw = k * k - (a1 * a1 * m * m + b1 * b1);
    }
    return raw / std::max({a1 * a1, k * k, 1.0});
}

}  // namespace poncelet
