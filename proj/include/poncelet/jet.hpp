#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace poncelet {

/// Truncated Taylor jet: value plus derivatives of orders 1..4 with
/// respect to a single curve parameter. Arithmetic propagates derivatives
/// exactly (Leibniz / Faa di Bruno through order 4), so fourth derivatives
/// of long compositions come out to machine accuracy with no expression
/// swell and no finite-difference step to tune.
struct Jet4 {
    // d[0] = value, d[k] = k-th derivative.
    std::array<double, 5> d{};

    Jet4() = default;
    Jet4(double value) { d[0] = value; }  // NOLINT: implicit constant lift

    /// The independent variable: value t, first derivative 1.
    static Jet4 variable(double t) {
        Jet4 j;
        j.d[0] = t;
        j.d[1] = 1.0;
        return j;
    }

    double value() const { return d[0]; }
};

inline Jet4 operator+(const Jet4& u, const Jet4& v) {
    Jet4 w;
    for (int k = 0; k < 5; ++k) w.d[k] = u.d[k] + v.d[k];
    return w;
}

inline Jet4 operator-(const Jet4& u, const Jet4& v) {
    Jet4 w;
    for (int k = 0; k < 5; ++k) w.d[k] = u.d[k] - v.d[k];
    return w;
}

inline Jet4 operator-(const Jet4& u) {
    Jet4 w;
    for (int k = 0; k < 5; ++k) w.d[k] = -u.d[k];
    return w;
}

inline Jet4 operator*(const Jet4& u, const Jet4& v) {
    Jet4 w;
    w.d[0] = u.d[0] * v.d[0];
    w.d[1] = u.d[1] * v.d[0] + u.d[0] * v.d[1];
    w.d[2] = u.d[2] * v.d[0] + 2.0 * u.d[1] * v.d[1] + u.d[0] * v.d[2];
    w.d[3] = u.d[3] * v.d[0] + 3.0 * u.d[2] * v.d[1] + 3.0 * u.d[1] * v.d[2] + u.d[0] * v.d[3];
    w.d[4] = u.d[4] * v.d[0] + 4.0 * u.d[3] * v.d[1] + 6.0 * u.d[2] * v.d[2] +
             4.0 * u.d[1] * v.d[3] + u.d[0] * v.d[4];
    return w;
}

inline Jet4 operator/(const Jet4& u, const Jet4& v) {
    if (std::abs(v.d[0]) <= 1e-300) throw std::domain_error("Jet4: division by zero-valued jet");
    // Solve w * v = u order by order.
    Jet4 w;
    const double inv = 1.0 / v.d[0];
    w.d[0] = u.d[0] * inv;
    w.d[1] = (u.d[1] - w.d[0] * v.d[1]) * inv;
    w.d[2] = (u.d[2] - w.d[0] * v.d[2] - 2.0 * w.d[1] * v.d[1]) * inv;
    w.d[3] = (u.d[3] - w.d[0] * v.d[3] - 3.0 * w.d[1] * v.d[2] - 3.0 * w.d[2] * v.d[1]) * inv;
    w.d[4] = (u.d[4] - w.d[0] * v.d[4] - 4.0 * w.d[1] * v.d[3] - 6.0 * w.d[2] * v.d[2] -
              4.0 * w.d[3] * v.d[1]) * inv;
    return w;
}

inline Jet4 operator+(const Jet4& u, double s) { return u + Jet4(s); }
inline Jet4 operator+(double s, const Jet4& u) { return Jet4(s) + u; }
inline Jet4 operator-(const Jet4& u, double s) { return u - Jet4(s); }
inline Jet4 operator-(double s, const Jet4& u) { return Jet4(s) - u; }
inline Jet4 operator*(const Jet4& u, double s) {
    Jet4 w;
    for (int k = 0; k < 5; ++k) w.d[k] = u.d[k] * s;
    return w;
}
inline Jet4 operator*(double s, const Jet4& u) { return u * s; }
inline Jet4 operator/(const Jet4& u, double s) { return u * (1.0 / s); }
inline Jet4 operator/(double s, const Jet4& u) { return Jet4(s) / u; }

/// Univariate composition f(g) given the derivatives f0..f4 of f at g.value().
inline Jet4 compose(const Jet4& g, double f0, double f1, double f2, double f3, double f4) {
    const double g1 = g.d[1], g2 = g.d[2], g3 = g.d[3], g4 = g.d[4];
    Jet4 w;
    w.d[0] = f0;
    w.d[1] = f1 * g1;
    w.d[2] = f2 * g1 * g1 + f1 * g2;
    w.d[3] = f3 * g1 * g1 * g1 + 3.0 * f2 * g1 * g2 + f1 * g3;
    w.d[4] = f4 * g1 * g1 * g1 * g1 + 6.0 * f3 * g1 * g1 * g2 +
             f2 * (3.0 * g2 * g2 + 4.0 * g1 * g3) + f1 * g4;
    return w;
}

inline Jet4 sin(const Jet4& g) {
    const double s = std::sin(g.d[0]), c = std::cos(g.d[0]);
    return compose(g, s, c, -s, -c, s);
}

inline Jet4 cos(const Jet4& g) {
    const double s = std::sin(g.d[0]), c = std::cos(g.d[0]);
    return compose(g, c, -s, -c, s, c);
}

inline Jet4 sqrt(const Jet4& g) {
    if (!(g.d[0] > 0.0)) throw std::domain_error("Jet4: sqrt of nonpositive value");
    const double r = std::sqrt(g.d[0]);
    const double i = 1.0 / g.d[0];
    return compose(g, r, 0.5 * r * i, -0.25 * r * i * i, 0.375 * r * i * i * i,
                   -0.9375 * r * i * i * i * i);
}

/// Integer power by repeated multiplication (n >= 0).
inline Jet4 powi(const Jet4& g, int n) {
    Jet4 w(1.0);
    for (int k = 0; k < n; ++k) w = w * g;
    return w;
}

}  // namespace poncelet
