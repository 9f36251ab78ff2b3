#include "poncelet/axes_map.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "poncelet/ellipse.hpp"

namespace poncelet {

namespace {

double eval_poly(const std::array<double, 5>& c, double s) {
    // c[k] multiplies s^k.
    return (((c[4] * s + c[3]) * s + c[2]) * s + c[1]) * s + c[0];
}

double eval_dpoly(const std::array<double, 5>& c, double s) {
    return ((4.0 * c[4] * s + 3.0 * c[3]) * s + 2.0 * c[2]) * s + c[1];
}

double newton_polish(const std::array<double, 5>& c, double s) {
    for (int it = 0; it < 60; ++it) {
        const double d = eval_dpoly(c, s);
        if (d == 0.0) break;
        const double step = eval_poly(c, s) / d;
        s -= step;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(s))) break;
    }
    return s;
}

// Discriminant of a s^4 + b s^3 + c s^2 + d s + e (degree 6 in the
// coefficients; negative iff two real + two complex roots). Also reports
// the sum of the 16 monomial magnitudes: the rounding error of the sum is
// a small multiple of eps times that, which is the only sound scale for
// deciding "zero" — the discriminant itself can be legitimately tiny
// against coefficient scale (near-multiple-root quartics).
double quartic_discriminant(double a, double b, double c, double d, double e,
                            double* abs_sum) {
    const double terms[16] = {
        256.0 * a * a * a * e * e * e,  -192.0 * a * a * b * d * e * e,
        -128.0 * a * a * c * c * e * e, 144.0 * a * a * c * d * d * e,
        -27.0 * a * a * d * d * d * d,  144.0 * a * b * b * c * e * e,
        -6.0 * a * b * b * d * d * e,   -80.0 * a * b * c * c * d * e,
        18.0 * a * b * c * d * d * d,   16.0 * a * c * c * c * c * e,
        -4.0 * a * c * c * c * d * d,   -27.0 * b * b * b * b * e * e,
        18.0 * b * b * b * c * d * e,   -4.0 * b * b * b * d * d * d,
        -4.0 * b * b * c * c * c * e,   b * b * c * c * d * d};
    double disc = 0.0, mag = 0.0;
    for (const double t : terms) {
        disc += t;
        mag += std::abs(t);
    }
    if (abs_sum != nullptr) *abs_sum = mag;
    return disc;
}

}  // namespace

std::pair<double, double> forward_map(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !(a > b))
        throw std::domain_error("forward_map: requires a > b > 0");
    const CausticAxes ca = caustic_axes(Ellipse(a, b));
    return {ca.a1, ca.b1};
}

QuarticRoots quartic_real_roots(double c4, double c3, double c2, double c1, double c0) {
    if (c4 == 0.0) throw std::invalid_argument("quartic_real_roots: leading coefficient is zero");
    const std::array<double, 5> coef{c0, c1, c2, c3, c4};

    // Monic companion matrix; eigenvalues are the roots.
    const double p3 = c3 / c4, p2 = c2 / c4, p1 = c1 / c4, p0 = c0 / c4;
    Eigen::Matrix4d comp = Eigen::Matrix4d::Zero();
    comp(0, 0) = -p3;
    comp(0, 1) = -p2;
    comp(0, 2) = -p1;
    comp(0, 3) = -p0;
    comp(1, 0) = comp(2, 1) = comp(3, 2) = 1.0;
    const Eigen::EigenSolver<Eigen::Matrix4d> es(comp);

    // A defective double root comes back as a conjugate pair with imaginary
    // part ~sqrt(eps), so the realness filter is generous and the Newton
    // polish plus a residual check make the final call.
    const double root_scale =
        std::max({1.0, std::abs(p3), std::sqrt(std::abs(p2)), std::cbrt(std::abs(p1)),
                  std::pow(std::abs(p0), 0.25)});
    std::vector<double> candidates;
    for (int i = 0; i < 4; ++i) {
        const std::complex<double> z = es.eigenvalues()(i);
        if (std::abs(z.imag()) > 1e-6 * root_scale) continue;
        const double r = newton_polish(coef, z.real());
        double mag = std::abs(c0);
        double pw = 1.0;
        for (int k = 1; k <= 4; ++k) {
            pw *= std::abs(r);
            mag += std::abs(coef[static_cast<size_t>(k)]) * pw;
        }
        if (std::abs(eval_poly(coef, r)) <= 1e-9 * std::max(mag, 1e-300)) candidates.push_back(r);
    }
    std::sort(candidates.begin(), candidates.end());

    QuarticRoots out;
    for (size_t i = 0; i < candidates.size();) {
        size_t j = i + 1;
        while (j < candidates.size() &&
               candidates[j] - candidates[i] <= 1e-6 * std::max(1.0, std::abs(candidates[i])))
            ++j;
        if (j - i >= 2) {
            // Cluster of near-equal roots: a multiple root. Its location is a
            // simple root of the derivative, where Newton converges cleanly.
            const std::array<double, 5> dcoef{c1, 2.0 * c2, 3.0 * c3, 4.0 * c4, 0.0};
            double r = candidates[i + (j - i) / 2];
            for (int it = 0; it < 60; ++it) {
                const double d = (3.0 * dcoef[3] * r + 2.0 * dcoef[2]) * r + dcoef[1];
                if (d == 0.0) break;
                const double step = ((dcoef[3] * r + dcoef[2]) * r + dcoef[1]) * r + dcoef[0];
                const double delta = step / d;
                r -= delta;
                if (std::abs(delta) <= 1e-16 * std::max(1.0, std::abs(r))) break;
            }
            for (size_t k = i; k < j; ++k) out.roots.push_back(r);
        } else {
            out.roots.push_back(candidates[i]);
        }
        i = j;
    }

    double disc_mag = 0.0;
    const double disc = quartic_discriminant(c4, c3, c2, c1, c0, &disc_mag);
    // Noise floor for the 16-term sum: each monomial carries a few ulp of
    // relative error, so 100*eps*sum(|term|) covers the rounding while
    // staying far below any genuinely nonzero discriminant. Scaling by
    // max(|coef|)^6 instead would be wrong: near-multiple-root quartics
    // have discriminants that are legitimately tiny against that scale.
    const double disc_noise = 100.0 * std::numeric_limits<double>::epsilon() * disc_mag;
    if (std::abs(disc) <= disc_noise)
        out.discriminant_sign = 0;
    else
        out.discriminant_sign = disc > 0.0 ? 1 : -1;
    return out;
}

std::pair<double, double> invert_map(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0) || !(x > y))
        throw std::domain_error("invert_map: requires x > y > 0");
    if (!(x - y > 1e-9 * x))
        throw std::domain_error("invert_map: too close to the circle boundary x = y");
    const double c2 = (x - y) * (x + y);

    const QuarticRoots qr = quartic_real_roots(1.0, -2.0 * x, 0.0, 2.0 * c2 * x, -c2 * x * x);
    double a = 0.0;
    bool found = false;
    for (double r : qr.roots) {
        if (r > x && (!found || r > a)) {
            a = r;
            found = true;
        }
    }
    if (!found) throw std::runtime_error("invert_map: no quartic root exceeds x");
    const double b = a * y / (a - x);
    if (!(b > 0.0) || !(a > b)) throw std::runtime_error("invert_map: recovered axes out of order");
    return {a, b};
}

}  // namespace poncelet
