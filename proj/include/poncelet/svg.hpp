#pragma once

#include <string>
#include <vector>

#include "poncelet/geometry.hpp"

namespace poncelet {

struct SvgCurve {
    std::string label;        // path id in the document
    std::string color;        // stroke color, e.g. "#d62728"
    std::vector<Point2> pts;  // world coordinates, y up
    bool closed = true;
};

/// Serialize curves into a standalone SVG document: one <path> element per
/// curve, straight-line segments between the given points. The viewBox is
/// the union bounding box of all curves padded by 5% (so a locus poking
/// outside the table stays visible), with the world y-axis flipped into
/// SVG's y-down convention.
std::string svg_document(const std::vector<SvgCurve>& curves, double width_px = 900.0);

}  // namespace poncelet
