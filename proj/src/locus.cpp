#include "poncelet/locus.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "poncelet/orbit.hpp"
#include "poncelet/pipeline.hpp"

namespace poncelet {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_angle_dist(double s, double t) {
    double d = std::fmod(std::abs(s - t), two_pi);
    return std::min(d, two_pi - d);
}

CanonicalEllipse make_canonical(double sx, double sy) {
    CanonicalEllipse ce;
    ce.sx = sx;
    ce.sy = sy;
    ce.focal_axis = std::abs(sx) >= std::abs(sy) ? CanonicalEllipse::Axis::x
                                                 : CanonicalEllipse::Axis::y;
    ce.focal_dist = std::sqrt(std::abs(sx * sx - sy * sy));
    return ce;
}

}  // namespace

CanonicalEllipse canonical_circumlocus(const Ellipse& E) {
    if (E.is_circle())
        throw std::domain_error("canonical_circumlocus: locus of a circle is a single point");
    const double A = (E.a * E.a - E.delta) / (2.0 * E.a);
    const double B = (E.b * E.b - E.delta) / (2.0 * E.b);
    return make_canonical(A, B);
}

Point2 locus_param(const Ellipse& E, double t, LocusForm form) {
    if (E.is_circle()) throw std::domain_error("locus_param: requires a > b");
    const Point2 p1 = point_at(E, t);
    Point2 out{};
    switch (form) {
        case LocusForm::compact: out = kernel::locus_compact_form(E, p1); break;
        case LocusForm::f_form: out = kernel::locus_f_form(E, p1); break;
        case LocusForm::caustic_form: out = kernel::locus_caustic_form(E, p1); break;
    }
    if (!std::isfinite(out.x) || !std::isfinite(out.y))
        throw std::domain_error("locus_param: degenerate denominator");
    return out;
}

std::vector<LocusSample> sample_locus(const Ellipse& E, CenterKind kind, int n) {
    if (n < 8) throw std::invalid_argument("sample_locus: n must be at least 8");
    const bool has_canonical = !E.is_circle() && kind == CenterKind::bisector;
    double A = 0.0, B = 0.0;
    if (has_canonical) {
        const CanonicalEllipse ce = canonical_circumlocus(E);
        A = ce.sx;
        B = ce.sy;
    }
    std::vector<LocusSample> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = two_pi * static_cast<double>(i) / static_cast<double>(n);
        LocusSample s;
        s.t = t;
        s.p1 = point_at(E, t);
        s.center = kernel::locus_center(E, t, kind == CenterKind::incenter);
        s.center_kind = kind;
        s.residual_canonical =
            has_canonical
                ? std::abs(s.center.x * s.center.x / (A * A) + s.center.y * s.center.y / (B * B) - 1.0)
                : 0.0;
        out.push_back(s);
    }
    return out;
}

ConicFit fit_axis_aligned_conic(std::span<const Point2> samples) {
    // Distinct-point count guards against a visually dense but degenerate set.
    std::vector<Point2> distinct;
    for (const auto& p : samples) {
        bool fresh = true;
        for (const auto& q : distinct) {
            if (distance(p, q) < 1e-12) {
                fresh = false;
                break;
            }
        }
        if (fresh) {
            distinct.push_back(p);
            if (distinct.size() >= 6) break;
        }
    }
    if (distinct.size() < 6)
        throw std::invalid_argument("fit_axis_aligned_conic: need at least 6 distinct points");

    // Normalize by the RMS radius: the loci can have 50:1 aspect ratios and
    // the normal equations lose too many digits in raw coordinates.
    double rms = 0.0;
    for (const auto& p : samples) rms += p.x * p.x + p.y * p.y;
    rms = std::sqrt(rms / static_cast<double>(samples.size()));
    if (!(rms > 0.0)) throw std::runtime_error("fit_axis_aligned_conic: singular system");

    const auto n = static_cast<Eigen::Index>(samples.size());
    Eigen::MatrixXd design(n, 5);
    Eigen::VectorXd rhs = Eigen::VectorXd::Ones(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double x = samples[static_cast<size_t>(i)].x / rms;
        const double y = samples[static_cast<size_t>(i)].y / rms;
        design(i, 0) = x * x;
        design(i, 1) = y * y;
        design(i, 2) = x * y;
        design(i, 3) = x;
        design(i, 4) = y;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.rank() < 5) throw std::runtime_error("fit_axis_aligned_conic: singular system");
    const Eigen::VectorXd coef = svd.solve(rhs);

    const double quad = std::max(std::abs(coef(0)), std::abs(coef(1)));
    const double off = std::max({std::abs(coef(2)), std::abs(coef(3)), std::abs(coef(4))});
    if (!(coef(0) > 0.0) || !(coef(1) > 0.0) || off > 1e-7 * quad)
        throw std::runtime_error("fit_axis_aligned_conic: not an axis-aligned centered ellipse");

    ConicFit fit;
    fit.conic = make_canonical(rms / std::sqrt(coef(0)), rms / std::sqrt(coef(1)));
    fit.fit_residual = 0.0;
    const double ax = coef(0) / (rms * rms);
    const double by = coef(1) / (rms * rms);
    for (const auto& p : samples) {
        fit.fit_residual = std::max(fit.fit_residual,
                                    std::abs(ax * p.x * p.x + by * p.y * p.y - 1.0));
    }
    return fit;
}

LocusScan::LocusScan(const Ellipse& E, CenterKind kind, int scan_points)
    : table_(E), kind_(kind) {
    if (E.is_circle()) throw std::domain_error("LocusScan: locus of a circle is degenerate");
    if (scan_points < 16) throw std::invalid_argument("LocusScan: scan too coarse");
    ts_.resize(static_cast<size_t>(scan_points));
    pts_.resize(static_cast<size_t>(scan_points));
    for (int i = 0; i < scan_points; ++i) {
        ts_[static_cast<size_t>(i)] = two_pi * static_cast<double>(i) / scan_points;
        pts_[static_cast<size_t>(i)] = at(ts_[static_cast<size_t>(i)]);
    }
}

Point2 LocusScan::at(double t) const {
    return kernel::locus_center(table_, t, kind_ == CenterKind::incenter);
}

int LocusScan::covering_degree(const Point2& probe) const {
    const auto n = pts_.size();
    std::vector<double> dist(n);
    for (size_t i = 0; i < n; ++i) dist[i] = distance(pts_[i], probe);

    // Polish every local minimum of the distance by ternary search, then
    // keep those that actually land on the probe.  The scan grid alone is
    // too coarse for the fast-moving stretches of the locus, so even the
    // on/off-locus decision is made on polished distances.
    std::vector<double> hits;
    double best = std::numeric_limits<double>::infinity();
    const double step = two_pi / static_cast<double>(n);
    for (size_t i = 0; i < n; ++i) {
        const double here = dist[i];
        if (here > dist[(i + n - 1) % n] || here > dist[(i + 1) % n]) continue;
        double lo = ts_[i] - step, hi = ts_[i] + step;
        for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            if (distance(at(m1), probe) < distance(at(m2), probe))
                hi = m2;
            else
                lo = m1;
        }
        const double tm = 0.5 * (lo + hi);
        best = std::min(best, distance(at(tm), probe));
        if (distance(at(tm), probe) < 1e-7)
            hits.push_back(std::fmod(tm + two_pi, two_pi));
    }
    if (best > 1e-6)
        throw std::domain_error("covering_degree: probe is not on the locus");

    // Cluster by parameter distance (circular) within 1e-4.
    std::sort(hits.begin(), hits.end());
    int clusters = 0;
    for (size_t i = 0; i < hits.size(); ++i) {
        if (i == 0 || wrap_angle_dist(hits[i], hits[i - 1]) > 1e-4) ++clusters;
    }
    if (clusters > 1 && wrap_angle_dist(hits.back(), hits.front()) <= 1e-4) --clusters;
    return clusters;
}

int covering_degree(const Ellipse& E, CenterKind kind, const Point2& probe) {
    return LocusScan(E, kind).covering_degree(probe);
}

CoordinateZeros coordinate_zero_count(const Ellipse& E, CenterKind kind) {
    if (E.is_circle()) throw std::domain_error("coordinate_zero_count: degenerate for circles");
    constexpr int n = 100000;
    const bool inc = kind == CenterKind::incenter;
    std::vector<Point2> c(n);
    for (int i = 0; i < n; ++i)
        c[static_cast<size_t>(i)] = kernel::locus_center(E, two_pi * i / double(n), inc);

    auto collect = [&](auto coord) {
        std::vector<double> zeros;
        for (int i = 0; i < n; ++i) {
            const double vi = coord(c[static_cast<size_t>(i)]);
            if (vi == 0.0) {  // exact zero at a grid node counts once
                zeros.push_back(two_pi * i / double(n));
                continue;
            }
            const int j = (i + 1) % n;
            const double vj = coord(c[static_cast<size_t>(j)]);
            if (vj == 0.0 || !(vi * vj < 0.0)) continue;
            double lo = two_pi * i / double(n);
            double hi = lo + two_pi / n;
            double flo = vi;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = coord(kernel::locus_center(E, mid, inc));
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (flo * fm < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        return zeros;
    };
    CoordinateZeros z;
    z.zeros_x = collect([](const Point2& p) { return p.x; });
    z.zeros_y = collect([](const Point2& p) { return p.y; });
    return z;
}

double winding_angle(const Ellipse& E, CenterKind kind, int n) {
    if (E.is_circle()) throw std::domain_error("winding_angle: degenerate for circles");
    if (n < 64) throw std::invalid_argument("winding_angle: n too small");
    const bool inc = kind == CenterKind::incenter;
    double total = 0.0;
    Point2 prev = kernel::locus_center(E, 0.0, inc);
    const Point2 first = prev;
    for (int i = 1; i <= n; ++i) {
        const Point2 cur = i == n ? first : kernel::locus_center(E, two_pi * i / double(n), inc);
        total += std::atan2(cross(prev, cur), dot(prev, cur));
        prev = cur;
    }
    return total;
}

double containment_threshold(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("containment_threshold: a must be positive");
    return 0.25 * a * std::sqrt(std::sqrt(33.0) - 1.0);
}

bool locus_contained_in_table(const Ellipse& E) {
    const CanonicalEllipse ce = canonical_circumlocus(E);
    return std::abs(ce.sx) <= E.a && std::abs(ce.sy) <= E.b;
}

}  // namespace poncelet
