#include "core/grid.hpp"

#include <algorithm>
#include <sstream>

#include "core/error.hpp"

namespace modlap {

DigitRows parse_digit_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) fail(ErrorCode::parse, "pattern has no rows");
    DigitRows out;
    out.height = static_cast<int64_t>(rows.size());
    out.width = static_cast<int64_t>(rows.front().size());
    if (out.width == 0) fail(ErrorCode::parse, "pattern rows are empty");
    out.values.reserve(static_cast<size_t>(out.width * out.height));
    for (const auto& row : rows) {
        if (static_cast<int64_t>(row.size()) != out.width)
            fail(ErrorCode::parse, "pattern rows have unequal lengths");
        for (char c : row) {
            if (c < '0' || c > '9')
                fail(ErrorCode::parse, std::string("pattern contains non-digit character '") + c + "'");
            out.values.push_back(c - '0');
        }
    }
    return out;
}

Grid Grid::from_pattern(const std::vector<std::string>& rows) {
    DigitRows parsed = parse_digit_rows(rows);
    int32_t max_digit = 0;
    for (int32_t v : parsed.values) max_digit = std::max(max_digit, v);
    if (max_digit == 0) fail(ErrorCode::invalid_argument, "pattern is all zero");

    Grid g;
    g.width_ = parsed.width;
    g.height_ = parsed.height;
    g.origin_ = Point{(parsed.width - 1) / 2, (parsed.height - 1) / 2};
    g.iteration_ = 0;
    g.max_state_ = std::max(max_digit + 1, 2);
    g.cells_ = std::move(parsed.values);
    return g;
}

Grid Grid::from_pattern_string(const std::string& pattern) {
    std::vector<std::string> rows;
    std::string row;
    std::istringstream in(pattern);
    while (std::getline(in, row, '/')) rows.push_back(row);
    return from_pattern(rows);
}

Grid Grid::from_parts(int64_t width, int64_t height, Point origin, int64_t iteration,
                      int32_t max_state, std::vector<int32_t> cells) {
    if (width < 1 || height < 1) fail(ErrorCode::invalid_argument, "grid dimensions must be positive");
    if (iteration < 0) fail(ErrorCode::invalid_argument, "iteration must be non-negative");
    if (max_state < 2) fail(ErrorCode::invalid_argument, "max_state must be at least 2");
    if (static_cast<int64_t>(cells.size()) != width * height)
        fail(ErrorCode::invalid_argument, "cell count does not match dimensions");
    for (int32_t v : cells)
        if (v < 0 || v >= max_state)
            fail(ErrorCode::invalid_argument, "cell value outside [0, max_state)");
    Grid g;
    g.width_ = width;
    g.height_ = height;
    g.origin_ = origin;
    g.iteration_ = iteration;
    g.max_state_ = max_state;
    g.cells_ = std::move(cells);
    return g;
}

int64_t Grid::occupied_count() const {
    int64_t n = 0;
    for (int32_t v : cells_)
        if (v > 0) ++n;
    return n;
}

std::optional<Box> Grid::support() const {
    int64_t min_x = width_, max_x = -1, min_y = height_, max_y = -1;
    for (int64_t y = 0; y < height_; ++y) {
        const int32_t* row = cells_.data() + y * width_;
        for (int64_t x = 0; x < width_; ++x) {
            if (row[x] != 0) {
                min_x = std::min(min_x, x);
                max_x = std::max(max_x, x);
                min_y = std::min(min_y, y);
                max_y = y;
            }
        }
    }
    if (max_x < 0) return std::nullopt;
    return Box{{min_x - origin_.x, min_y - origin_.y}, {max_x - origin_.x, max_y - origin_.y}};
}

Grid Grid::translated(int64_t dx, int64_t dy) const {
    Grid g = *this;
    g.origin_.x -= dx;
    g.origin_.y -= dy;
    return g;
}

bool Grid::d4_symmetric() const {
    auto box = support();
    if (!box) return true;
    const int64_t w = box->width();
    const int64_t h = box->height();
    if (w != h) return false;  // a 90-degree rotation cannot map the box to itself

    auto value = [&](int64_t col, int64_t row) {
        return at(Point{box->min.x + col, box->min.y + row});
    };
    const int64_t n = w;
    for (int64_t r = 0; r < n; ++r) {
        for (int64_t c = 0; c < n; ++c) {
            const int32_t v = value(c, r);
            if (v != value(n - 1 - c, r)) return false;          // horizontal mirror
            if (v != value(c, n - 1 - r)) return false;          // vertical mirror
            if (v != value(r, c)) return false;                  // main diagonal
            if (v != value(n - 1 - r, n - 1 - c)) return false;  // anti-diagonal
        }
    }
    // The four reflections generate all of D4; rotations follow.
    return true;
}

bool Grid::same_cells(const Grid& other) const {
    auto a = support();
    auto b = other.support();
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    if (*a != *b) return false;
    for (int64_t y = a->min.y; y <= a->max.y; ++y)
        for (int64_t x = a->min.x; x <= a->max.x; ++x)
            if (at(Point{x, y}) != other.at(Point{x, y})) return false;
    return true;
}

GridBuilder::GridBuilder(int64_t width, int64_t height, Point origin) {
    if (width < 1 || height < 1) fail(ErrorCode::invalid_argument, "grid dimensions must be positive");
    grid_.width_ = width;
    grid_.height_ = height;
    grid_.origin_ = origin;
    grid_.cells_.assign(static_cast<size_t>(width * height), 0);
}

Grid GridBuilder::finish(int64_t iteration, int32_t max_state) {
    grid_.iteration_ = iteration;
    grid_.max_state_ = std::max(max_state, 2);
    return std::move(grid_);
}

} // namespace modlap
