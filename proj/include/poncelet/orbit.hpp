#pragma once

#include <utility>

#include "poncelet/ellipse.hpp"

namespace poncelet {

/// A 3-periodic billiard orbit: the triangle through p1 with reflection
/// angle alpha at p1. Vertices lie on the table, sides are tangent to the
/// confocal caustic, and the reflection law holds at every vertex.
struct OrbitTriangle {
    Point2 p1, p2, p3;
    double alpha;  // in (0, pi/2), radians
};

struct OrbitResiduals {
    double reflection_p1, reflection_p2, reflection_p3;
    double tangency_12, tangency_23, tangency_31;
};

/// cos^2 of the reflection angle at p1 (unique root in (0, 1]).
/// Throws std::domain_error if p1 is off the ellipse (|h| >= 1e-9).
double reflection_cos2(const Ellipse& E, const Point2& p1);

/// The reflection angle alpha in (0, pi/2).
double reflection_angle(const Ellipse& E, const Point2& p1);

/// Construct the unique 3-periodic orbit through p1 by ray tracing the two
/// directions at +/- alpha about the inward normal. The result is validated
/// against the orbit invariants before being returned.
OrbitTriangle build_orbit(const Ellipse& E, const Point2& p1);

/// The rational closed forms for the far vertices, with alpha supplied by
/// reflection_angle. Agrees with build_orbit to 1e-9 componentwise.
/// Throws std::domain_error when a denominator degenerates.
std::pair<Point2, Point2> closed_form_vertices(const Ellipse& E, const Point2& p1, double alpha);

/// Reflection-law defect at each vertex (difference of the normalized
/// inner products of the incident sides with the normal) and tangency
/// defect of each side against the caustic.
OrbitResiduals orbit_residuals(const Ellipse& E, const OrbitTriangle& orbit);

}  // namespace poncelet
