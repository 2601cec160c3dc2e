#pragma once

#include <cmath>

namespace svor {

struct Vec2 {
    double u = 0.0, v = 0.0;

    Vec2 operator+(const Vec2& o) const { return {u + o.u, v + o.v}; }
    Vec2 operator-(const Vec2& o) const { return {u - o.u, v - o.v}; }
    Vec2 operator*(double s) const { return {u * s, v * s}; }
    Vec2 operator-() const { return {-u, -v}; }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.u * b.u + a.v * b.v; }
inline double cross(const Vec2& a, const Vec2& b) { return a.u * b.v - a.v * b.u; }
inline double norm2(const Vec2& a) { return dot(a, a); }
inline double norm(const Vec2& a) { return std::sqrt(norm2(a)); }
inline Vec2 normalized(const Vec2& a) { double n = norm(a); return {a.u / n, a.v / n}; }
// counterclockwise quarter turn
inline Vec2 perp(const Vec2& a) { return {-a.v, a.u}; }

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }
inline Vec3 normalized(const Vec3& a) { double n = norm(a); return {a.x / n, a.y / n, a.z / n}; }
inline double det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

/// Point on the unit sphere. Unit norm is an invariant of the containing
/// structures, not of the type itself.
using SpherePoint = Vec3;
/// Point in the inversion image plane, in that plane's orthonormal 2-frame.
using PlanarPoint = Vec2;

} // namespace svor
