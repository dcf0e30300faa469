#pragma once

// Exact orientation and segment-intersection predicates on integer points.
// Coordinates are bounded by max_coordinate so every determinant fits in
// 128-bit arithmetic.

#include <algorithm>
#include <cstdint>
#include <cstdlib>

namespace petersen {

__extension__ typedef __int128 Wide;

inline constexpr std::int64_t max_coordinate = 1'000'000'000;

struct Point3 {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t z = 0;

    friend bool operator==(const Point3&, const Point3&) = default;
    friend auto operator<=>(const Point3&, const Point3&) = default;
};

struct Point2 {
    Wide x = 0;
    Wide y = 0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

struct Vec3 {
    Wide x = 0;
    Wide y = 0;
    Wide z = 0;
};

inline Vec3 operator-(const Point3& a, const Point3& b)
{
    return {Wide(a.x) - b.x, Wide(a.y) - b.y, Wide(a.z) - b.z};
}

inline Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Wide dot(const Vec3& a, const Vec3& b)
{
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline int sign(Wide v)
{
    return (v > 0) - (v < 0);
}

inline bool is_zero(const Vec3& v)
{
    return v.x == 0 && v.y == 0 && v.z == 0;
}

/// Sign of det[a, b, c] for three direction vectors.
inline int triple_sign(const Vec3& a, const Vec3& b, const Vec3& c)
{
    return sign(dot(cross(a, b), c));
}

/// Orientation of d relative to the plane through a, b, c.
inline int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d)
{
    return triple_sign(b - a, c - a, d - a);
}

inline bool collinear(const Point3& a, const Point3& b, const Point3& c)
{
    return is_zero(cross(b - a, c - a));
}

inline int orient2d(const Point2& a, const Point2& b, const Point2& c)
{
    return sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

/// Closed segments pq and rs in the plane share at least one point.
inline bool segments_meet_2d(const Point2& p, const Point2& q, const Point2& r, const Point2& s)
{
    const int o1 = orient2d(p, q, r);
    const int o2 = orient2d(p, q, s);
    const int o3 = orient2d(r, s, p);
    const int o4 = orient2d(r, s, q);
    if (o1 * o2 < 0 && o3 * o4 < 0) {
        return true;
    }
    const auto within = [](const Point2& a, const Point2& b, const Point2& c) {
        // c collinear with ab: inside the bounding box means on the segment.
        return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
               c.y <= std::max(a.y, b.y);
    };
    return (o1 == 0 && within(p, q, r)) || (o2 == 0 && within(p, q, s)) || (o3 == 0 && within(r, s, p)) ||
           (o4 == 0 && within(r, s, q));
}

/// Closed segments ab and cd in space share at least one point.
inline bool segments_meet_3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d)
{
    if (orient3d(a, b, c, d) != 0) {
        return false;
    }
    // Coplanar: drop the axis along which the plane's normal is largest.
    Vec3 n = cross(b - a, c - a);
    if (is_zero(n)) {
        n = cross(b - a, d - a);
    }
    if (is_zero(n)) {
        n = cross(d - c, a - c);
    }
    if (is_zero(n)) {
        // All four points collinear: pick any plane containing the line.
        const Vec3 dir = is_zero(b - a) ? d - c : b - a;
        n = cross(dir, Vec3{1, 0, 0});
        if (is_zero(n)) {
            n = cross(dir, Vec3{0, 1, 0});
        }
    }
    const auto ax = [](Wide v) { return v < 0 ? -v : v; };
    int drop = 2;
    if (ax(n.x) >= ax(n.y) && ax(n.x) >= ax(n.z)) {
        drop = 0;
    } else if (ax(n.y) >= ax(n.z)) {
        drop = 1;
    }
    const auto flat = [drop](const Point3& p) -> Point2 {
        switch (drop) {
        case 0:
            return {p.y, p.z};
        case 1:
            return {p.x, p.z};
        default:
            return {p.x, p.y};
        }
    };
    return segments_meet_2d(flat(a), flat(b), flat(c), flat(d));
}

} // namespace petersen
