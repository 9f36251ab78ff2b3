#pragma once

#include <functional>

#include "poncelet/centers.hpp"
#include "poncelet/ellipse.hpp"
#include "poncelet/geometry.hpp"
#include "poncelet/jet.hpp"

namespace poncelet {

/// A plane curve evaluable in 4-jets: feed Jet4::variable(t) and the
/// coordinates come back with derivatives of orders 1..4 attached.
using JetCurve = std::function<Vec2T<Jet4>(const Jet4&)>;

/// Affine curvature of a convex, positively oriented curve at t:
///   k_a = (4[g'', g'''] + [g', g'''']) / (3 [g', g'']^(5/3))
///         - (5/9) [g', g''']^2 / [g', g'']^(8/3)
/// with [u, v] = u.x v.y - u.y v.x and every derivative taken from jet
/// arithmetic. The real positive branch of the cube root is used; the
/// convexity precondition [g', g''] > 0 guarantees it exists. Throws
/// std::domain_error at nonconvex points.
double affine_curvature(const JetCurve& curve, double t);

struct ConstancyReport {
    double mean;
    double max_abs_dev;  // max |k_a(t_i) - mean|
    double rel_std;      // stddev / |mean|
};

/// Affine-curvature statistics over n >= 16 equally spaced parameters in
/// [0, 2pi). A vanishing rel_std certifies the trace as an ellipse.
ConstancyReport constancy_report(const JetCurve& curve, int n);

/// (a cos t, b sin t); affine curvature (ab)^(-2/3).
JetCurve ellipse_jet_curve(const Ellipse& E);

/// The compact closed-form bisector-center locus; affine curvature
/// (A^2 B^2)^(-1/3). Requires a > b.
JetCurve locus_jet_curve(const Ellipse& E);

/// The full geometric chain t -> orbit -> center in jets. Order-0
/// agreement with locus_jet_curve is a standing test; the higher orders
/// feed the finite-difference cross-checks.
JetCurve pipeline_jet_curve(const Ellipse& E, CenterKind kind);

}  // namespace poncelet
