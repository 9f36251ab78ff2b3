#pragma once

#include <utility>
#include <vector>

namespace poncelet {

/// Table semi-axes -> caustic semi-axes. Requires a > b > 0 strictly
/// (throws std::domain_error otherwise); the image satisfies x > y > 0.
std::pair<double, double> forward_map(double a, double b);

struct QuarticRoots {
    std::vector<double> roots;  // real roots, ascending, with multiplicity
    int discriminant_sign;      // sign of the quartic discriminant: -1, 0, +1
};

/// All real roots of c4 s^4 + c3 s^3 + c2 s^2 + c1 s + c0 to ~1e-12
/// relative accuracy: companion-matrix eigenvalues, Newton-polished, with
/// double roots re-polished on the derivative. Requires c4 != 0. A quartic
/// with no real roots returns an empty list.
QuarticRoots quartic_real_roots(double c4, double c3, double c2, double c1, double c0);

/// Inverse of forward_map on the open region x > y > 0: recovers the
/// unique table (a, b) whose caustic has semi-axes (x, y), via the quartic
///   p(a) = a^4 - 2x a^3 + 2 c^2 x a - c^2 x^2,   c^2 = x^2 - y^2,
/// selecting the single real root with a > x and setting b = a y / (a - x).
/// Throws std::domain_error off the region (including x - y <= 1e-9 x) and
/// std::runtime_error if no admissible root exists (reported, not patched).
std::pair<double, double> invert_map(double x, double y);

}  // namespace poncelet
