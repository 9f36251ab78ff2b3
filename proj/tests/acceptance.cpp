// Acceptance gate: one line per criterion, spec tolerances pinned inline.
// Runs as a plain binary (no test framework) so the output reads as a
// checklist; exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "poncelet/affine.hpp"
#include "poncelet/axes_map.hpp"
#include "poncelet/centers.hpp"
#include "poncelet/ellipse.hpp"
#include "poncelet/locus.hpp"
#include "poncelet/orbit.hpp"

#ifndef PONCELET_CLI_PATH
#error "PONCELET_CLI_PATH must point at the poncelet-loci binary"
#endif

using namespace poncelet;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

int failures = 0;

class Criterion {
  public:
    Criterion(int number, const char* label) : number_(number), label_(label) {
        start_ = std::chrono::steady_clock::now();
    }

    void require(bool ok, const char* what) {
        if (!ok) {
            ok_ = false;
            std::printf("        criterion %d violated: %s\n", number_, what);
        }
    }

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    ~Criterion() {
        std::printf("[%s] criterion %2d: %s (%.2f s)\n", ok_ ? "PASS" : "FAIL", number_, label_,
                    seconds());
        if (!ok_) ++failures;
    }

  private:
    int number_;
    const char* label_;
    bool ok_ = true;
    std::chrono::steady_clock::time_point start_;
};

std::vector<double> ratio_grid(int n) {
    std::vector<double> g;
    for (int i = 1; i <= n; ++i) g.push_back(1.01 + (5.0 - 1.01) * i / n);
    return g;
}

void criterion_1() {
    Criterion c(1, "caustic values, confocality, bilinear identity (50 ellipses)");
    const CausticAxes ca = caustic_axes(Ellipse(2.0, 1.0));
    c.require(std::abs(ca.a1 - 1.7370342) < 1e-7, "caustic a1 vs 1.7370342 (1e-7)");
    c.require(std::abs(ca.b1 - 0.1314829) < 1e-7, "caustic b1 vs 0.1314829 (1e-7)");
    for (const double ratio : ratio_grid(50)) {
        const Ellipse E(ratio, 1.0);
        const CausticAxes g = caustic_axes(E);
        const double conf = std::abs(g.a1 * g.a1 - g.b1 * g.b1 - E.c * E.c) / (E.c * E.c);
        const double bil = std::abs(E.b * g.a1 + E.a * g.b1 - E.a * E.b) / (E.a * E.b);
        c.require(conf < 1e-11, "confocality a1^2 - b1^2 = c^2 (1e-11 rel)");
        c.require(bil < 1e-11, "bilinear b a1 + a b1 = ab (1e-11 rel)");
    }
    c.require(c.seconds() < 1.0, "runtime under 1 s");
}

void criterion_2() {
    Criterion c(2, "orbit validity on 10^3 random (ellipse, t) pairs");
    std::mt19937_64 rng(2026'08'16);
    std::uniform_real_distribution<double> ur(1.01, 5.0);
    std::uniform_real_distribution<double> ut(0.0, two_pi);
    for (int i = 0; i < 1000; ++i) {
        const Ellipse E(ur(rng), 1.0);
        const Point2 p1 = point_at(E, ut(rng));
        const OrbitTriangle orb = build_orbit(E, p1);
        const OrbitResiduals res = orbit_residuals(E, orb);
        c.require(std::abs(res.reflection_p1) < 1e-10, "reflection residual p1 (1e-10)");
        c.require(std::abs(res.reflection_p2) < 1e-10, "reflection residual p2 (1e-10)");
        c.require(std::abs(res.reflection_p3) < 1e-10, "reflection residual p3 (1e-10)");
        c.require(std::abs(res.tangency_12) < 1e-8, "tangency residual 12 (1e-8)");
        c.require(std::abs(res.tangency_23) < 1e-8, "tangency residual 23 (1e-8)");
        c.require(std::abs(res.tangency_31) < 1e-8, "tangency residual 31 (1e-8)");
        const auto [q2, q3] = closed_form_vertices(E, p1, orb.alpha);
        const double agree =
            std::max(std::max(std::abs(q2.x - orb.p2.x), std::abs(q2.y - orb.p2.y)),
                     std::max(std::abs(q3.x - orb.p3.x), std::abs(q3.y - orb.p3.y)));
        c.require(agree < 1e-9, "closed form vs ray trace (1e-9)");
    }
    c.require(c.seconds() < 5.0, "runtime under 5 s");
}

void criterion_3() {
    Criterion c(3, "canonical locus identity, foci relation, caustic similarity");
    for (const Ellipse& E : {Ellipse(2.0, 1.0), Ellipse(3.0, 1.0)}) {
        const CanonicalEllipse L = canonical_circumlocus(E);
        for (int i = 0; i < 1000; ++i) {
            const double t = two_pi * i / 1000.0;
            const OrbitTriangle orb = build_orbit(E, point_at(E, t));
            const Point2 p = triangle_center(CenterKind::bisector, orb.p1, orb.p2, orb.p3);
            const double resid = std::abs(p.x * p.x / (L.sx * L.sx) +
                                          p.y * p.y / (L.sy * L.sy) - 1.0);
            c.require(resid < 1e-8, "|x^2/A^2 + y^2/B^2 - 1| < 1e-8");
        }
    }
    for (const double ratio : ratio_grid(50)) {
        const Ellipse E(ratio, 1.0);
        const CanonicalEllipse L = canonical_circumlocus(E);
        const CausticAxes ca = caustic_axes(E);
        const double want = E.c * E.c * E.c / (2.0 * E.a * E.b);
        const double foci = std::abs(std::sqrt(L.sy * L.sy - L.sx * L.sx) - want) / want;
        c.require(foci < 1e-10, "foci sqrt(B^2 - A^2) = c^3/(2ab) (1e-10 rel)");
        const double sim = std::abs(L.sx / -L.sy - ca.b1 / ca.a1) / (ca.b1 / ca.a1);
        c.require(sim < 1e-11, "similarity A/|B| = b1/a1 (1e-11 rel)");
    }
}

void criterion_4() {
    Criterion c(4, "constant affine curvature of the bisector locus of (2,1)");
    const Ellipse E(2.0, 1.0);
    const ConstancyReport rep = constancy_report(locus_jet_curve(E), 1000);
    c.require(rep.rel_std < 1e-6, "relative standard deviation < 1e-6");
    const CanonicalEllipse L = canonical_circumlocus(E);
    const double prod = rep.mean * rep.mean * rep.mean * (L.sx * L.sx * L.sy * L.sy);
    c.require(std::abs(prod - 1.0) < 1e-6, "mean^3 A^2 B^2 = 1 (1e-6)");
    c.require(std::abs(rep.mean - 3.92766) < 1e-4, "mean near 3.92766 for (2,1)");
}

void criterion_5() {
    Criterion c(5, "table affine curvature equals (ab)^(-2/3) on 10 ellipses");
    for (int i = 0; i < 10; ++i) {
        const double a = 1.0 + 0.45 * i;  // includes the circle at i = 0
        const Ellipse E(a, 1.0);
        const ConstancyReport rep = constancy_report(ellipse_jet_curve(E), 64);
        const double want = std::pow(E.a * E.b, -2.0 / 3.0);
        c.require(std::abs(rep.mean - want) / want < 1e-8, "mean vs (ab)^(-2/3) (1e-8 rel)");
        c.require(rep.rel_std < 1e-8, "curvature constant along the table");
    }
}

void criterion_6() {
    Criterion c(6, "triple covering: degree, zero counts, winding angle");
    for (const Ellipse& E : {Ellipse(2.0, 1.0), Ellipse(3.0, 1.0)}) {
        const LocusScan scan(E, CenterKind::bisector);
        std::mt19937_64 rng(606);
        std::uniform_real_distribution<double> ut(0.0, two_pi);
        for (int i = 0; i < 100; ++i) {
            const int deg = scan.covering_degree(scan.at(ut(rng)));
            c.require(deg == 3, "covering degree 3 at a random probe");
        }
        const CoordinateZeros z = coordinate_zero_count(E, CenterKind::bisector);
        c.require(z.zeros_x.size() == 6, "x_c has 6 zeros per period");
        c.require(z.zeros_y.size() == 6, "y_c has 6 zeros per period");
        const double w = winding_angle(E, CenterKind::bisector);
        c.require(std::abs(w - 6.0 * std::numbers::pi) < 1e-6, "winding angle 6 pi (1e-6)");
    }
}

void criterion_7() {
    Criterion c(7, "containment threshold b* and the single flip");
    c.require(std::abs(containment_threshold(1.0) - 0.5445504) < 1e-7,
              "b* = 0.5445504 a (1e-7)");
    for (const double a : {1.0, 2.0}) {
        const double bs = containment_threshold(a);
        const bool below = locus_contained_in_table(Ellipse(a, bs * (1.0 - 1e-3)));
        const bool above = locus_contained_in_table(Ellipse(a, bs * (1.0 + 1e-3)));
        c.require(!below, "locus escapes the table just below b*");
        c.require(above, "locus contained just above b*");
    }
}

void criterion_8() {
    Criterion c(8, "axes-map inversion: roundtrip, quartic structure, p(2) = 0");
    for (int i = 1; i <= 200; ++i) {
        const double ratio =
            std::exp(std::log(1.01) + (std::log(5.0) - std::log(1.01)) * i / 200.0);
        const auto [x, y] = forward_map(ratio, 1.0);
        const auto [a, b] = invert_map(x, y);
        c.require(std::abs(a - ratio) / ratio < 1e-9, "roundtrip a (1e-9 rel)");
        c.require(std::abs(b - 1.0) < 1e-9, "roundtrip b (1e-9 rel)");
        const double c2 = x * x - y * y;
        const QuarticRoots qr =
            quartic_real_roots(1.0, -2.0 * x, 0.0, 2.0 * c2 * x, -c2 * x * x);
        c.require(qr.discriminant_sign == -1, "quartic discriminant negative");
        int above = 0;
        for (const double r : qr.roots)
            if (r > x) ++above;
        c.require(above == 1, "exactly one quartic root exceeds x");
    }
    const auto [x, y] = forward_map(2.0, 1.0);
    const double c2 = x * x - y * y;
    const double p2 = ((2.0 - 2.0 * x) * 4.0 + 2.0 * c2 * x) * 2.0 - c2 * x * x;
    c.require(std::abs(p2) < 1e-10, "p(2) = 0 for the (2,1) caustic (1e-10)");
}

void criterion_9() {
    Criterion c(9, "center-kind discrimination on (3,1)");
    const Ellipse E(3.0, 1.0);
    std::vector<Point2> pts;
    for (const LocusSample& s : sample_locus(E, CenterKind::incenter, 1000))
        pts.push_back(s.center);
    const ConicFit inc = fit_axis_aligned_conic(pts);
    c.require(std::abs(inc.conic.sx - 2.5146679) < 1e-5, "incenter fit sx (1e-5)");
    c.require(std::abs(inc.conic.sy - 0.4559963) < 1e-5, "incenter fit sy (1e-5)");
    c.require(inc.fit_residual < 1e-8, "incenter fit residual < 1e-8");

    pts.clear();
    for (const LocusSample& s : sample_locus(E, CenterKind::bisector, 1000))
        pts.push_back(s.center);
    const ConicFit bis = fit_axis_aligned_conic(pts);
    c.require(std::abs(bis.conic.sx - 0.0759994) < 1e-5, "bisector fit matches sx (1e-5)");
    c.require(std::abs(bis.conic.sy - 3.7720019) < 1e-5, "bisector fit matches sy (1e-5)");
    c.require(bis.fit_residual < 1e-8, "bisector fit residual < 1e-8");

    // The incenter locus must NOT match the bisector-locus axes.
    c.require(std::abs(inc.conic.sx - 0.0759994) > 1e-2, "incenter differs from sx");
    c.require(std::abs(inc.conic.sy - 3.7720019) > 1e-2, "incenter differs from sy");
}

void criterion_10() {
    Criterion c(10, "full `check --grid` exits 0 in under 60 s");
    const std::string cmd = std::string(PONCELET_CLI_PATH) + " check --grid > /dev/null";
    const int raw = std::system(cmd.c_str());
    const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    c.require(code == 0, "exit code 0");
    c.require(c.seconds() < 60.0, "runtime under 60 s");
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
