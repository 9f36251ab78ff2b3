#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "poncelet/orbit.hpp"
#include "poncelet/pipeline.hpp"

using namespace poncelet;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Independent root check: scan the defining quartic in cos(alpha) for sign
// changes on (0, pi/2) and bisect the bracket, with no reference to the
// closed-form solution path.
double scan_reflection_angle(const Ellipse& E, const Point2& p1) {
    const double a2 = E.a * E.a, b2 = E.b * E.b;
    const double c4 = E.c * E.c * E.c * E.c;
    const double t2 = p1.x * p1.x / (a2 * a2) + p1.y * p1.y / (b2 * b2);
    const auto f = [&](double alpha) {
        const double u = std::cos(alpha) * std::cos(alpha);
        return c4 * t2 * t2 * u * u + 2.0 * (a2 + b2) * t2 * u - 3.0;
    };
    const int n = 20000;
    double lo = 0.0, hi = 0.0;
    int brackets = 0;
    for (int i = 0; i < n; ++i) {
        const double x0 = std::numbers::pi / 2.0 * i / n + 1e-9;
        const double x1 = std::numbers::pi / 2.0 * (i + 1) / n;
        if (f(x0) * f(x1) < 0.0) {
            lo = x0;
            hi = x1;
            ++brackets;
        }
    }
    REQUIRE(brackets == 1);  // the equation has a single solution in (0, pi/2)
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(lo) * f(mid) <= 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("reflection angle on the circle is pi/6") {
    const Ellipse E(1.0, 1.0);
    CHECK(reflection_cos2(E, {1.0, 0.0}) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(reflection_angle(E, {0.0, 1.0}) ==
          doctest::Approx(std::numbers::pi / 6.0).epsilon(1e-14));
}

TEST_CASE("reflection angle at the vertices of (2,1)") {
    const Ellipse E(2.0, 1.0);
    const double u_major = reflection_cos2(E, {2.0, 0.0});
    CHECK(std::abs(u_major - 0.9827122) < 1e-7);
    CHECK(u_major == doctest::Approx(0.982712244856879).epsilon(1e-12));
    const double u_minor = reflection_cos2(E, {0.0, 1.0});
    CHECK(std::abs(u_minor - 0.2456781) < 1e-7);
    CHECK(u_minor == doctest::Approx(0.245678061214357).epsilon(1e-11));
    CHECK_THROWS_AS(reflection_cos2(E, {1.0, 1.0}), std::domain_error);
}

TEST_CASE("closed-form root matches an independent sign scan of the quartic") {
    const Ellipse E(2.0, 1.0);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ut(0.0, two_pi);
    for (int i = 0; i < 25; ++i) {
        const Point2 p1 = point_at(E, ut(rng));
        const double alpha = reflection_angle(E, p1);
        const double ref = scan_reflection_angle(E, p1);
        CHECK(alpha == doctest::Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("root branch and quartic residual") {
    for (const Ellipse& E : {Ellipse(2.0, 1.0), Ellipse(3.0, 1.0), Ellipse(1.2, 1.0)}) {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> ut(0.0, two_pi);
        for (int i = 0; i < 200; ++i) {
            const Point2 p1 = point_at(E, ut(rng));
            const double u = reflection_cos2(E, p1);
            CHECK(u > 0.0);
            CHECK(u <= 1.0);
            const double a2 = E.a * E.a, b2 = E.b * E.b;
            const double c4 = E.c * E.c * E.c * E.c;
            const double t2 = p1.x * p1.x / (a2 * a2) + p1.y * p1.y / (b2 * b2);
            const double resid = c4 * t2 * t2 * u * u + 2.0 * (a2 + b2) * t2 * u - 3.0;
            CHECK(std::abs(resid) < 1e-12);
        }
    }
}

TEST_CASE("orbit through the major vertex of (2,1)") {
    const Ellipse E(2.0, 1.0);
    const OrbitTriangle orb = build_orbit(E, {2.0, 0.0});
    CHECK(std::abs(orb.p2.x - (-1.7370342)) < 1e-7);
    CHECK(std::abs(orb.p2.y - 0.4956592) < 1e-7);
    CHECK(orb.p2.x == doctest::Approx(-1.73703418364266).epsilon(1e-11));
    CHECK(orb.p2.y == doctest::Approx(0.495659218833081).epsilon(1e-11));
    CHECK(orb.p3.x == doctest::Approx(orb.p2.x).epsilon(1e-12));
    CHECK(orb.p3.y == doctest::Approx(-orb.p2.y).epsilon(1e-12));
    // The opposite side is the caustic's left vertical tangent.
    const CausticAxes ca = caustic_axes(E);
    CHECK(orb.p2.x == doctest::Approx(-ca.a1).epsilon(1e-11));
}

TEST_CASE("orbit through the minor vertex of (2,1)") {
    const Ellipse E(2.0, 1.0);
    const OrbitTriangle orb = build_orbit(E, {0.0, 1.0});
    // The x-coordinate is pinned by the ellipse equation at y = -b1:
    // x = -2 sqrt(1 - b1^2) = -1.98263687533232.
    CHECK(orb.p2.x == doctest::Approx(-1.98263687533232).epsilon(1e-11));
    CHECK(std::abs(orb.p2.y - (-0.1314829)) < 1e-7);
    CHECK(orb.p3.x == doctest::Approx(-orb.p2.x).epsilon(1e-12));
    CHECK(orb.p3.y == doctest::Approx(orb.p2.y).epsilon(1e-12));
    // The opposite side lies on y = -b1.
    const CausticAxes ca = caustic_axes(E);
    CHECK(orb.p2.y == doctest::Approx(-ca.b1).epsilon(1e-11));
}

TEST_CASE("orbit on the circle is equilateral") {
    const Ellipse E(1.0, 1.0);
    const OrbitTriangle orb = build_orbit(E, {1.0, 0.0});
    CHECK(orb.p2.x == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(orb.p2.y == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-13));
    CHECK(orb.p3.x == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(orb.p3.y == doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-13));
}

TEST_CASE("published piece values of the rational vertex formula") {
    // (2,1) through (2,0) with the rounded cos^2 t = 0.9827122: the three
    // rational pieces and their quotient, frozen at full precision.
    const Ellipse E(2.0, 1.0);
    const double u = 0.9827122;
    const double ct = std::sqrt(u), st = std::sqrt(1.0 - u);
    const kernel::RationalVertex<double> v =
        kernel::closed_form_vertex<double>(E, {2.0, 0.0}, ct, st);
    CHECK(std::abs(v.px - (-7.3084880)) < 5e-6);
    CHECK(std::abs(v.q - 4.2074536) < 5e-6);
    CHECK(v.px == doctest::Approx(-7.30848800).epsilon(1e-9));
    CHECK(v.py == doctest::Approx(2.08546555585).epsilon(1e-9));
    CHECK(v.q == doctest::Approx(4.20745360).epsilon(1e-9));
    CHECK(v.px / v.q == doctest::Approx(-1.73703353496).epsilon(1e-9));
    CHECK(v.py / v.q == doctest::Approx(0.495659787156).epsilon(1e-9));
    // Mirrored vertex: y1 = 0 kills the asymmetric terms.
    const kernel::RationalVertex<double> w =
        kernel::closed_form_vertex<double>(E, {2.0, 0.0}, ct, -st);
    CHECK(w.px == doctest::Approx(v.px).epsilon(1e-14));
    CHECK(w.py == doctest::Approx(-v.py).epsilon(1e-14));
    CHECK(w.q == doctest::Approx(v.q).epsilon(1e-14));
}

TEST_CASE("closed-form vertices agree with the ray trace") {
    for (const Ellipse& E : {Ellipse(2.0, 1.0), Ellipse(3.0, 1.0), Ellipse(1.2, 1.0)}) {
        std::mt19937_64 rng(23);
        std::uniform_real_distribution<double> ut(0.0, two_pi);
        for (int i = 0; i < 200; ++i) {
            const Point2 p1 = point_at(E, ut(rng));
            const OrbitTriangle orb = build_orbit(E, p1);
            const auto [q2, q3] = closed_form_vertices(E, p1, orb.alpha);
            CHECK(std::abs(q2.x - orb.p2.x) < 1e-9);
            CHECK(std::abs(q2.y - orb.p2.y) < 1e-9);
            CHECK(std::abs(q3.x - orb.p3.x) < 1e-9);
            CHECK(std::abs(q3.y - orb.p3.y) < 1e-9);
        }
    }
}

TEST_CASE("orbit invariants at random parameters") {
    for (const Ellipse& E : {Ellipse(2.0, 1.0), Ellipse(3.0, 1.0), Ellipse(1.2, 1.0)}) {
        std::mt19937_64 rng(31);
        std::uniform_real_distribution<double> ut(0.0, two_pi);
        for (int i = 0; i < 150; ++i) {
            const Point2 p1 = point_at(E, ut(rng));
            const OrbitTriangle orb = build_orbit(E, p1);
            CHECK(std::abs(E.implicit(orb.p2)) < 1e-12);
            CHECK(std::abs(E.implicit(orb.p3)) < 1e-12);
            const OrbitResiduals res = orbit_residuals(E, orb);
            CHECK(std::abs(res.reflection_p1) < 1e-10);
            CHECK(std::abs(res.reflection_p2) < 1e-10);
            CHECK(std::abs(res.reflection_p3) < 1e-10);
            CHECK(std::abs(res.tangency_12) < 1e-8);
            CHECK(std::abs(res.tangency_23) < 1e-8);
            CHECK(std::abs(res.tangency_31) < 1e-8);
        }
    }
}

TEST_CASE("orbit is unique: rebuilding from another vertex returns the same triangle") {
    const Ellipse E(2.0, 1.0);
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> ut(0.0, two_pi);
    for (int i = 0; i < 50; ++i) {
        const Point2 p1 = point_at(E, ut(rng));
        const OrbitTriangle orb = build_orbit(E, p1);
        const OrbitTriangle again = build_orbit(E, orb.p2);
        // The triangle {p1,p2,p3} reappears (as a set) through p2.
        const auto close = [](const Point2& u, const Point2& v) {
            return std::abs(u.x - v.x) < 1e-9 && std::abs(u.y - v.y) < 1e-9;
        };
        const bool has_p1 = close(again.p2, p1) || close(again.p3, p1);
        const bool has_p3 = close(again.p2, orb.p3) || close(again.p3, orb.p3);
        CHECK(has_p1);
        CHECK(has_p3);
    }
}

TEST_CASE("degenerate-symmetry spot checks") {
    for (const Ellipse& E : {Ellipse(2.0, 1.0), Ellipse(3.0, 1.0)}) {
        const CausticAxes ca = caustic_axes(E);
        const OrbitTriangle at_a = build_orbit(E, {E.a, 0.0});
        CHECK(std::abs(at_a.p2.x - at_a.p3.x) < 1e-10);  // vertical far side
        CHECK(at_a.p2.x == doctest::Approx(-ca.a1).epsilon(1e-10));
        const OrbitTriangle at_b = build_orbit(E, {0.0, E.b});
        CHECK(std::abs(at_b.p2.y - at_b.p3.y) < 1e-10);  // horizontal far side
        CHECK(at_b.p2.y == doctest::Approx(-ca.b1).epsilon(1e-10));
    }
}
