#pragma once

#include <array>
#include <cmath>

namespace grpoplan {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
    bool operator==(const Vec2&) const = default;
};

// Axis-aligned rectangle rotated by `heading` about `center`.
struct OrientedRect {
    Vec2 center;
    double heading = 0.0;  // radians
    double length = 0.0;   // extent along heading
    double width = 0.0;    // extent across heading

    std::array<Vec2, 4> corners() const {
        const double c = std::cos(heading), s = std::sin(heading);
        const Vec2 fwd{c * length * 0.5, s * length * 0.5};
        const Vec2 left{-s * width * 0.5, c * width * 0.5};
        return {center + fwd + left, center + fwd - left,
                center - fwd - left, center - fwd + left};
    }

    bool contains(Vec2 p) const {
        const double c = std::cos(heading), s = std::sin(heading);
        const Vec2 d = p - center;
        const double u = d.x * c + d.y * s;   // along heading
        const double v = -d.x * s + d.y * c;  // across heading
        return std::abs(u) <= length * 0.5 && std::abs(v) <= width * 0.5;
    }
};

// Separating-axis test for two oriented rectangles. Touching counts as
// overlap (no strictly positive gap on any of the four candidate axes).
bool rects_overlap(const OrientedRect& a, const OrientedRect& b);

double normalize_angle(double a);  // wrap to (-pi, pi]

}  // namespace grpoplan
