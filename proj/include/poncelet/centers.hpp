#pragma once

#include "poncelet/geometry.hpp"

namespace poncelet {

// The two center constructions are deliberately distinct operations: they
// coincide only for equilateral triangles, and the loci they sweep over the
// orbit family are different ellipses.
enum class CenterKind { bisector, incenter };

/// Intersection of the perpendicular bisectors of the sides; the point
/// equidistant from the three vertices. Throws std::domain_error for
/// (near-)collinear vertices.
Point2 perpendicular_bisector_center(const Point2& p1, const Point2& p2, const Point2& p3);

/// Intersection of the angle bisectors; the point at equal distance (the
/// inradius) from the three side lines. Throws std::domain_error for
/// (near-)collinear vertices.
Point2 angle_bisector_center(const Point2& p1, const Point2& p2, const Point2& p3);

Point2 triangle_center(CenterKind kind, const Point2& p1, const Point2& p2, const Point2& p3);

}  // namespace poncelet
