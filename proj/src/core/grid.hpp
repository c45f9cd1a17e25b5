#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/geometry.hpp"

namespace modlap {

// Finite-support integer field on the infinite square lattice. The stored
// array is the region that can be nonzero; reads outside it yield 0. `origin`
// is the array position of lattice coordinate (0,0), so the array may sit
// anywhere on the lattice (including entirely away from the origin).
class Grid {
public:
    Grid() : cells_(1, 0) {}

    // Builds an iteration-0 seed from digit rows ('0'..'9'), e.g. {"101","010","101"}.
    // Rows must be rectangular and contain at least one nonzero digit. The lattice
    // origin lands on the central cell, ties broken toward the top-left.
    static Grid from_pattern(const std::vector<std::string>& rows);

    // Same, with rows joined by '/' ("101/010/101").
    static Grid from_pattern_string(const std::string& pattern);

    // Assembles a grid from raw parts, validating the value range.
    static Grid from_parts(int64_t width, int64_t height, Point origin, int64_t iteration,
                           int32_t max_state, std::vector<int32_t> cells);

    int64_t width() const { return width_; }
    int64_t height() const { return height_; }
    int64_t iteration() const { return iteration_; }
    int32_t max_state() const { return max_state_; }
    Point origin() const { return origin_; }

    // Lattice extent covered by the backing array (may include zero margins).
    Box array_box() const {
        return Box{{-origin_.x, -origin_.y}, {width_ - 1 - origin_.x, height_ - 1 - origin_.y}};
    }

    int32_t at(Point lattice) const {
        const int64_t ax = lattice.x + origin_.x;
        const int64_t ay = lattice.y + origin_.y;
        if (ax < 0 || ax >= width_ || ay < 0 || ay >= height_) return 0;
        return cells_[static_cast<size_t>(ay * width_ + ax)];
    }

    const std::vector<int32_t>& cells() const { return cells_; }

    int64_t occupied_count() const;

    // Tight bounding box of nonzero cells in lattice coordinates, or nullopt
    // when the grid is all zero.
    std::optional<Box> support() const;

    // Same pattern shifted by (dx, dy) on the lattice; O(1), array untouched.
    Grid translated(int64_t dx, int64_t dy) const;

    // Invariance of the support-cropped pattern under all eight symmetries of
    // the square (about the support box center). Empty grids count as symmetric.
    bool d4_symmetric() const;

    // Cellwise equality as lattice functions (array margins ignored).
    bool same_cells(const Grid& other) const;

    friend class GridBuilder;

private:
    int64_t width_ = 1;
    int64_t height_ = 1;
    Point origin_{0, 0};
    int64_t iteration_ = 0;
    int32_t max_state_ = 2;
    std::vector<int32_t> cells_;
};

// Mutable staging area for constructing grids cell by cell.
class GridBuilder {
public:
    GridBuilder(int64_t width, int64_t height, Point origin);

    void set(int64_t ax, int64_t ay, int32_t value) {
        grid_.cells_[static_cast<size_t>(ay * grid_.width_ + ax)] = value;
    }
    void set_lattice(Point p, int32_t value) {
        set(p.x + grid_.origin_.x, p.y + grid_.origin_.y, value);
    }
    Grid finish(int64_t iteration, int32_t max_state);

private:
    Grid grid_;
};

// Parses rectangular digit rows into row-major values; shared by seeds,
// snapshots and stencil masks.
struct DigitRows {
    int64_t width = 0;
    int64_t height = 0;
    std::vector<int32_t> values;
};
DigitRows parse_digit_rows(const std::vector<std::string>& rows);

} // namespace modlap
