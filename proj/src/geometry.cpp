#include "toroid/geometry.hpp"

#include <algorithm>

namespace toroid::geom {

Projection closest_point(const Segment& s, Vec2 p) {
    const Vec2 d = s.direction();
    const double len2 = dot(d, d);
    if (len2 == 0.0) return {s.a, 0.0};
    const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
    return {s.a + t * d, t};
}

namespace {

int orientation(Vec2 a, Vec2 b, Vec2 c) {
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(const Segment& s, const Segment& u) {
    const int o1 = orientation(s.a, s.b, u.a);
    const int o2 = orientation(s.a, s.b, u.b);
    const int o3 = orientation(u.a, u.b, s.a);
    const int o4 = orientation(u.a, u.b, s.b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(s.a, s.b, u.a)) return true;
    if (o2 == 0 && on_segment(s.a, s.b, u.b)) return true;
    if (o3 == 0 && on_segment(u.a, u.b, s.a)) return true;
    if (o4 == 0 && on_segment(u.a, u.b, s.b)) return true;
    return false;
}

bool inside_convex(std::span<const Vec2> polygon, Vec2 p) {
    if (polygon.size() < 3) return false;
    int sign = 0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const Vec2 a = polygon[i];
        const Vec2 b = polygon[(i + 1) % polygon.size()];
        const double c = cross(b - a, p - a);
        const int s = (c > 0.0) - (c < 0.0);
        if (s == 0) continue;
        if (sign == 0) sign = s;
        else if (s != sign) return false;
    }
    return true;
}

bool is_convex(std::span<const Vec2> polygon) {
    if (polygon.size() < 3) return false;
    int sign = 0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const Vec2 a = polygon[i];
        const Vec2 b = polygon[(i + 1) % polygon.size()];
        const Vec2 c = polygon[(i + 2) % polygon.size()];
        const double z = cross(b - a, c - b);
        const int s = (z > 0.0) - (z < 0.0);
        if (s == 0) continue;
        if (sign == 0) sign = s;
        else if (s != sign) return false;
    }
    return sign != 0;
}

}  // namespace toroid::geom
