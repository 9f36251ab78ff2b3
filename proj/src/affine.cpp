#include "poncelet/affine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "poncelet/pipeline.hpp"

namespace poncelet {

namespace {

// [g^(i), g^(j)] read straight off the coordinate jets.
double bracket(const Vec2T<Jet4>& g, int i, int j) {
    return g.x.d[static_cast<size_t>(i)] * g.y.d[static_cast<size_t>(j)] -
           g.y.d[static_cast<size_t>(i)] * g.x.d[static_cast<size_t>(j)];
}

}  // namespace

double affine_curvature(const JetCurve& curve, double t) {
    const Vec2T<Jet4> g = curve(Jet4::variable(t));
    const double b12 = bracket(g, 1, 2);
    if (!(b12 > 0.0))
        throw std::domain_error("affine_curvature: [g',g''] <= 0 (nonconvex point)");
    const double b13 = bracket(g, 1, 3);
    const double b14 = bracket(g, 1, 4);
    const double b23 = bracket(g, 2, 3);
    const double r13 = std::cbrt(b12);  // positive branch
    const double p53 = b12 * r13 * r13;
    const double p83 = b12 * b12 * r13 * r13;
    return (4.0 * b23 + b14) / (3.0 * p53) - (5.0 / 9.0) * b13 * b13 / p83;
}

ConstancyReport constancy_report(const JetCurve& curve, int n) {
    if (n < 16) throw std::invalid_argument("constancy_report: n must be at least 16");
    std::vector<double> k(static_cast<size_t>(n));
    const double two_pi = 2.0 * std::numbers::pi;
    for (int i = 0; i < n; ++i)
        k[static_cast<size_t>(i)] = affine_curvature(curve, two_pi * i / static_cast<double>(n));

    double mean = 0.0;
    for (double v : k) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0, max_dev = 0.0;
    for (double v : k) {
        var += (v - mean) * (v - mean);
        max_dev = std::max(max_dev, std::abs(v - mean));
    }
    var /= static_cast<double>(n);
    return {mean, max_dev, std::sqrt(var) / std::abs(mean)};
}

JetCurve ellipse_jet_curve(const Ellipse& E) {
    return [E](const Jet4& t) { return kernel::boundary_point(E, t); };
}

JetCurve locus_jet_curve(const Ellipse& E) {
    if (E.is_circle()) throw std::domain_error("locus_jet_curve: requires a > b");
    return [E](const Jet4& t) {
        return kernel::locus_compact_form(E, kernel::boundary_point(E, t));
    };
}

JetCurve pipeline_jet_curve(const Ellipse& E, CenterKind kind) {
    const bool inc = kind == CenterKind::incenter;
    return [E, inc](const Jet4& t) { return kernel::locus_center(E, t, inc); };
}

}  // namespace poncelet
