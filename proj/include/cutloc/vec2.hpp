#pragma once

#include <cmath>

namespace cutloc {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    constexpr Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    constexpr Vec2& operator*=(double c) { x *= c; y *= c; return *this; }
};

constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
constexpr Vec2 operator*(double c, Vec2 a) { return {c * a.x, c * a.y}; }
constexpr Vec2 operator*(Vec2 a, double c) { return {c * a.x, c * a.y}; }
constexpr Vec2 operator/(Vec2 a, double c) { return {a.x / c, a.y / c}; }

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
/// z-component of the 3D cross product.
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
constexpr double norm2(Vec2 a) { return dot(a, a); }
inline Vec2 normalized(Vec2 a) { return a / norm(a); }

/// Counterclockwise quarter turn, the matrix [[0,-1],[1,0]].
constexpr Vec2 rot90(Vec2 a) { return {-a.y, a.x}; }
inline Vec2 rotated(Vec2 a, double angle)
{
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

}  // namespace cutloc
