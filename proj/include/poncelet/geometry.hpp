#pragma once

#include <cmath>

namespace poncelet {

// 2D vector/point over any scalar type with field arithmetic.
// Instantiated with double for the public API and with Jet4 for
// derivative-carrying evaluation of the same formulas.
template <class T>
struct Vec2T {
    T x{};
    T y{};
};

using Point2 = Vec2T<double>;

template <class T>
Vec2T<T> operator+(const Vec2T<T>& u, const Vec2T<T>& v) {
    return {u.x + v.x, u.y + v.y};
}

template <class T>
Vec2T<T> operator-(const Vec2T<T>& u, const Vec2T<T>& v) {
    return {u.x - v.x, u.y - v.y};
}

template <class T>
Vec2T<T> operator-(const Vec2T<T>& u) {
    return {-u.x, -u.y};
}

template <class T, class S>
Vec2T<T> operator*(const S& s, const Vec2T<T>& u) {
    return {s * u.x, s * u.y};
}

template <class T>
T dot(const Vec2T<T>& u, const Vec2T<T>& v) {
    return u.x * v.x + u.y * v.y;
}

// Determinant [u, v] = u.x v.y - u.y v.x.
template <class T>
T cross(const Vec2T<T>& u, const Vec2T<T>& v) {
    return u.x * v.y - u.y * v.x;
}

template <class T>
T norm(const Vec2T<T>& u) {
    using std::sqrt;
    return sqrt(dot(u, u));
}

inline double distance(const Point2& p, const Point2& q) {
    return std::hypot(p.x - q.x, p.y - q.y);
}

}  // namespace poncelet
