#include "poncelet/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace poncelet {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string svg_document(const std::vector<SvgCurve>& curves, double width_px) {
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    bool first = true;
    for (const SvgCurve& c : curves) {
        for (const Point2& p : c.pts) {
            if (first) {
                xmin = xmax = p.x;
                ymin = ymax = p.y;
                first = false;
            } else {
                xmin = std::min(xmin, p.x);
                xmax = std::max(xmax, p.x);
                ymin = std::min(ymin, p.y);
                ymax = std::max(ymax, p.y);
            }
        }
    }
    if (first) throw std::invalid_argument("svg_document: no points to draw");

    const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin);
    xmin -= pad;
    xmax += pad;
    ymin -= pad;
    ymax += pad;
    const double sx = width_px / (xmax - xmin);
    const double height_px = (ymax - ymin) * sx;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + fmt(width_px) + " " +
           fmt(height_px) + "\">\n";
    out += "  <rect width=\"" + fmt(width_px) + "\" height=\"" + fmt(height_px) +
           "\" fill=\"white\"/>\n";
    for (const SvgCurve& c : curves) {
        if (c.pts.size() < 2) continue;
        std::string d;
        for (size_t i = 0; i < c.pts.size(); ++i) {
            const double px = (c.pts[i].x - xmin) * sx;
            const double py = height_px - (c.pts[i].y - ymin) * sx;  // y up -> y down
            d += (i == 0 ? "M" : " L");
            d += fmt(px) + " " + fmt(py);
        }
        if (c.closed) d += " Z";
        out += "  <path id=\"" + c.label + "\" fill=\"none\" stroke=\"" + c.color +
               "\" stroke-width=\"" + fmt(width_px / 450.0) + "\" d=\"" + d + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace poncelet
