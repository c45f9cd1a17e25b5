#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>

namespace modlap {

struct Point {
    int64_t x = 0;
    int64_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

inline int64_t chebyshev(Point a, Point b) {
    return std::max(std::llabs(a.x - b.x), std::llabs(a.y - b.y));
}

inline int64_t manhattan(Point a, Point b) {
    return std::llabs(a.x - b.x) + std::llabs(a.y - b.y);
}

// Closed axis-aligned cell box, inclusive on both corners.
struct Box {
    Point min;
    Point max;

    int64_t width() const { return max.x - min.x + 1; }
    int64_t height() const { return max.y - min.y + 1; }
    int64_t side() const { return std::max(width(), height()); }

    bool contains(Point p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
    }
    bool contains(const Box& other) const {
        return contains(other.min) && contains(other.max);
    }
    bool overlaps(const Box& other) const {
        return min.x <= other.max.x && other.min.x <= max.x &&
               min.y <= other.max.y && other.min.y <= max.y;
    }
    Box dilated(int64_t r) const {
        return Box{{min.x - r, min.y - r}, {max.x + r, max.y + r}};
    }

    friend bool operator==(const Box&, const Box&) = default;
};

// Chebyshev distance between two boxes: min over cell pairs, 0 if they overlap.
inline int64_t box_chebyshev(const Box& a, const Box& b) {
    auto axis_gap = [](int64_t lo1, int64_t hi1, int64_t lo2, int64_t hi2) {
        if (lo2 > hi1) return lo2 - hi1;
        if (lo1 > hi2) return lo1 - hi2;
        return int64_t{0};
    };
    return std::max(axis_gap(a.min.x, a.max.x, b.min.x, b.max.x),
                    axis_gap(a.min.y, a.max.y, b.min.y, b.max.y));
}

} // namespace modlap
