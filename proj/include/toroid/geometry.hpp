// Minimal planar geometry for the locomotion simulator.
#pragma once

#include <cmath>
#include <span>

namespace toroid::geom {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
    friend Vec2 operator*(Vec2 v, double s) { return {s * v.x, s * v.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }  // +90 degrees

/// Unit vector along v; v must be nonzero.
inline Vec2 normalized(Vec2 v) {
    const double n = norm(v);
    return {v.x / n, v.y / n};
}

struct Segment {
    Vec2 a;
    Vec2 b;

    Vec2 direction() const { return b - a; }
    double length() const { return norm(b - a); }
    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Closest point on the segment to p, with the clamped parameter t in [0, 1].
struct Projection {
    Vec2 point;
    double t = 0.0;
};

Projection closest_point(const Segment& s, Vec2 p);

inline double distance(const Segment& s, Vec2 p) { return norm(p - closest_point(s, p).point); }

/// Proper or touching intersection of two segments.
bool segments_intersect(const Segment& s, const Segment& u);

/// Point inside (or on the boundary of) a convex polygon given in either
/// winding order.
bool inside_convex(std::span<const Vec2> polygon, Vec2 p);

bool is_convex(std::span<const Vec2> polygon);

}  // namespace toroid::geom
