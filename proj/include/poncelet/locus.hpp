#pragma once

#include <span>
#include <vector>

#include "poncelet/centers.hpp"
#include "poncelet/ellipse.hpp"

namespace poncelet {

/// Axis-aligned origin-centered ellipse model for center loci.
/// sx and sy are signed semi-axis parameters: the bisector-center locus of
/// a noncircular table has sx = A > 0 and sy = B < 0, and sign-faithful
/// evaluation is what makes the closed forms agree pointwise. Reported
/// semi-axis lengths are |sx|, |sy|.
struct CanonicalEllipse {
    enum class Axis { x, y };
    double sx;
    double sy;
    Axis focal_axis;    // axis of the larger |semi-axis|
    double focal_dist;  // sqrt(|sx^2 - sy^2|)
};

struct LocusSample {
    double t;
    Point2 p1;
    Point2 center;
    CenterKind center_kind;
    double residual_canonical;  // |x^2/A^2 + y^2/B^2 - 1|, bisector kind only
};

enum class LocusForm { compact, f_form, caustic_form };

struct ConicFit {
    CanonicalEllipse conic;  // |sx|, |sy| from the fitted quadratic
    double fit_residual;     // max |alpha x^2 + beta y^2 - 1| over the samples
};

struct CoordinateZeros {
    std::vector<double> zeros_x;  // refined parameter values where x_c(t) = 0
    std::vector<double> zeros_y;
};

/// The bisector-center locus x^2/A^2 + y^2/B^2 = 1 with
/// A = (a^2 - delta)/(2a), B = (b^2 - delta)/(2b) < 0 and foci at
/// (0, +/- c^3/(2ab)). Throws std::domain_error for a = b (the locus
/// collapses to the origin).
CanonicalEllipse canonical_circumlocus(const Ellipse& E);

/// Evaluate one of the three closed-form locus parametrizations at
/// p1 = point_at(E, t). All three agree with the geometric pipeline.
Point2 locus_param(const Ellipse& E, double t, LocusForm form);

/// n equally spaced parameters, centers through the geometric pipeline.
std::vector<LocusSample> sample_locus(const Ellipse& E, CenterKind kind, int n);

/// Least-squares fit of alpha x^2 + beta y^2 + gamma xy + d x + e y = 1.
/// Coordinates are normalized by the RMS radius before solving; the fit is
/// accepted as an axis-aligned centered conic only if the gamma, d, e
/// coefficients are below 1e-7 of the quadratic ones. Throws
/// std::runtime_error otherwise (and on singular systems).
ConicFit fit_axis_aligned_conic(std::span<const Point2> samples);

/// Dense-scan preimage counter for the locus map t -> center(t). Caches the
/// scan so repeated probes against one family are cheap.
class LocusScan {
  public:
    LocusScan(const Ellipse& E, CenterKind kind, int scan_points = 10000);

    /// Number of parameter values (clustered within 1e-4) whose locus point
    /// lies within 1e-7 of the probe. Throws std::domain_error if the probe
    /// is farther than 1e-6 from the sampled locus.
    int covering_degree(const Point2& probe) const;

    /// Locus point at an arbitrary parameter (pipeline evaluation).
    Point2 at(double t) const;

  private:
    Ellipse table_;
    CenterKind kind_;
    std::vector<double> ts_;
    std::vector<Point2> pts_;
};

/// Convenience wrapper constructing a fresh scan per call.
int covering_degree(const Ellipse& E, CenterKind kind, const Point2& probe);

/// Zeros of the coordinate functions x_c(t), y_c(t) on [0, 2pi), located by
/// sign scanning on a 1e5-point grid with bisection refinement. Grid nodes
/// where a coordinate vanishes exactly count once. Throws for circles.
CoordinateZeros coordinate_zero_count(const Ellipse& E, CenterKind kind);

/// Accumulated angle of the locus point about the origin over one period of
/// t; equals 2pi times the covering degree for a locus encircling it.
double winding_angle(const Ellipse& E, CenterKind kind, int n = 20000);

/// b* = (a/4) sqrt(sqrt(33) - 1): the smallest minor axis for which the
/// bisector locus stays inside the table.
double containment_threshold(double a);

/// max(|A|, |B|) <= corresponding table semi-axis.
bool locus_contained_in_table(const Ellipse& E);

}  // namespace poncelet
