#include "poncelet/centers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "poncelet/pipeline.hpp"

namespace poncelet {

namespace {

void require_nondegenerate(const Point2& p1, const Point2& p2, const Point2& p3) {
    const double det = cross(p2 - p1, p3 - p1);
    const double scale = std::max({distance(p1, p2), distance(p2, p3), distance(p3, p1)});
    if (std::abs(det) <= 1e-12 * scale * scale)
        throw std::domain_error("triangle center: collinear vertices");
}

}  // namespace

Point2 perpendicular_bisector_center(const Point2& p1, const Point2& p2, const Point2& p3) {
    require_nondegenerate(p1, p2, p3);
    return kernel::perpendicular_bisector_center(p1, p2, p3);
}

Point2 angle_bisector_center(const Point2& p1, const Point2& p2, const Point2& p3) {
    require_nondegenerate(p1, p2, p3);
    return kernel::angle_bisector_center(p1, p2, p3);
}

Point2 triangle_center(CenterKind kind, const Point2& p1, const Point2& p2, const Point2& p3) {
    return kind == CenterKind::bisector ? perpendicular_bisector_center(p1, p2, p3)
                                        : angle_bisector_center(p1, p2, p3);
}

}  // namespace poncelet
