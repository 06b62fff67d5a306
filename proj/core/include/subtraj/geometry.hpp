#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace subtraj {

/// Global vertex index into a concatenated trajectory store. 1-based.
using Index = std::int32_t;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
}

inline double dist_sq(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

inline double dist(const Point& a, const Point& b) {
    return std::sqrt(dist_sq(a, b));
}

/// Axis-aligned bounding box. Empty boxes have lo > hi per axis.
struct Box {
    double lo_x = 1.0, lo_y = 1.0;
    double hi_x = 0.0, hi_y = 0.0;

    bool empty() const { return lo_x > hi_x; }

    void expand(const Point& p) {
        if (empty()) {
            lo_x = hi_x = p.x;
            lo_y = hi_y = p.y;
            return;
        }
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }

    void expand(const Box& b) {
        if (b.empty()) return;
        expand(Point{b.lo_x, b.lo_y});
        expand(Point{b.hi_x, b.hi_y});
    }

    /// Squared distance from q to the closest point of the box (0 if inside).
    double min_dist_sq(const Point& q) const {
        const double dx = std::max({lo_x - q.x, 0.0, q.x - hi_x});
        const double dy = std::max({lo_y - q.y, 0.0, q.y - hi_y});
        return dx * dx + dy * dy;
    }

    /// Squared distance from q to the farthest corner of the box.
    double max_dist_sq(const Point& q) const {
        const double dx = std::max(std::abs(q.x - lo_x), std::abs(q.x - hi_x));
        const double dy = std::max(std::abs(q.y - lo_y), std::abs(q.y - hi_y));
        return dx * dx + dy * dy;
    }

    double diagonal() const {
        if (empty()) return 0.0;
        return dist(Point{lo_x, lo_y}, Point{hi_x, hi_y});
    }
};

} // namespace subtraj
