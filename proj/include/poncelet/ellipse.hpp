#pragma once

#include "poncelet/geometry.hpp"

namespace poncelet {

/// Axis-aligned billiard table x^2/a^2 + y^2/b^2 = 1 with a >= b > 0.
/// Carries the two derived invariants used throughout:
///   c     focal half-distance sqrt(a^2 - b^2)
///   delta sqrt(a^4 - a^2 b^2 + b^4) = sqrt(a^2 c^2 + b^4)
struct Ellipse {
    double a;
    double b;
    double c;
    double delta;

    // Throws std::invalid_argument for nonpositive axes and for a < b
    // (the major axis must come first; formulas assume that orientation).
    Ellipse(double a_, double b_);

    bool is_circle() const { return c == 0.0; }

    /// Normalized implicit value h(p) = x^2/a^2 + y^2/b^2 - 1.
    double implicit(const Point2& p) const {
        return (p.x / a) * (p.x / a) + (p.y / b) * (p.y / b) - 1.0;
    }
};

/// Tangent/normal pair at a boundary point: T = (-y/b^2, x/a^2),
/// N = (-x/a^2, -y/b^2). |T| = |N|, T.N = 0, det[T,N] > 0, N points inward.
struct Frame {
    Point2 T;
    Point2 N;
    Point2 unit_T;
    Point2 unit_N;
};

/// Semi-axes of the confocal conic tangent to all three sides of every
/// triangular orbit.
struct CausticAxes {
    double a1;
    double b1;
};

Point2 point_at(const Ellipse& E, double t);

/// Requires |implicit(p)| < 1e-9; throws std::domain_error otherwise.
Frame frame_at(const Ellipse& E, const Point2& p);

/// a1 = a(delta - b^2)/c^2, b1 = b(a^2 - delta)/c^2.
/// The circle a = b is the 0/0 limit and returns (a/2, a/2) exactly.
CausticAxes caustic_axes(const Ellipse& E);

/// Signed distance-from-tangency of the line through p and q to the conic
/// x^2/a1^2 + y^2/b1^2 = 1, normalized by max(a1^2, k^2, 1). Zero iff
/// tangent, negative for secants. Thresholding is the caller's policy.
double line_tangency_residual(const Point2& p, const Point2& q, double a1, double b1);

}  // namespace poncelet
