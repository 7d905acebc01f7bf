#include "grpoplan/geometry.hpp"

#include <algorithm>
#include <limits>

namespace grpoplan {

namespace {

// Project both corner sets onto `axis`; true when the intervals are disjoint.
bool separated_on(Vec2 axis, const std::array<Vec2, 4>& ca, const std::array<Vec2, 4>& cb) {
    double amin = std::numeric_limits<double>::infinity(), amax = -amin;
    double bmin = amin, bmax = -amin;
    for (const Vec2& p : ca) {
        const double t = p.dot(axis);
        amin = std::min(amin, t);
        amax = std::max(amax, t);
    }
    for (const Vec2& p : cb) {
        const double t = p.dot(axis);
        bmin = std::min(bmin, t);
        bmax = std::max(bmax, t);
    }
    return amax < bmin || bmax < amin;
}

}  // namespace

bool rects_overlap(const OrientedRect& a, const OrientedRect& b) {
    const auto ca = a.corners();
    const auto cb = b.corners();
    const Vec2 axes[4] = {
        {std::cos(a.heading), std::sin(a.heading)},
        {-std::sin(a.heading), std::cos(a.heading)},
        {std::cos(b.heading), std::sin(b.heading)},
        {-std::sin(b.heading), std::cos(b.heading)},
    };
    for (const Vec2& axis : axes) {
        if (separated_on(axis, ca, cb)) return false;
    }
    return true;
}

double normalize_angle(double a) {
    while (a > M_PI) a -= 2.0 * M_PI;
    while (a <= -M_PI) a += 2.0 * M_PI;
    return a;
}

}  // namespace grpoplan
