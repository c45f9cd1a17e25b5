#include "core/stencil.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "core/error.hpp"
#include "core/grid.hpp"

namespace modlap {

Stencil::Stencil(std::vector<Point> offsets, std::string name)
    : offsets_(std::move(offsets)), name_(std::move(name)) {
    if (offsets_.empty()) fail(ErrorCode::invalid_argument, "stencil has no offsets");
    std::sort(offsets_.begin(), offsets_.end());
    if (std::adjacent_find(offsets_.begin(), offsets_.end()) != offsets_.end())
        fail(ErrorCode::invalid_argument, "stencil has duplicate offsets");
    radius_ = 0;
    for (const Point& o : offsets_) {
        if (o.x == 0 && o.y == 0)
            fail(ErrorCode::invalid_argument, "stencil must not contain the center cell");
        radius_ = std::max(radius_, chebyshev(o, Point{0, 0}));
    }
}

Stencil Stencil::von_neumann() {
    return Stencil({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, "von-neumann");
}

Stencil Stencil::diag() {
    return Stencil({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}, "diag");
}

Stencil Stencil::moore() {
    return Stencil({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}},
                   "moore");
}

Stencil Stencil::builtin(std::string_view name) {
    std::string n(name);
    std::replace(n.begin(), n.end(), '_', '-');
    if (n == "von-neumann" || n == "vn") return von_neumann();
    if (n == "diag" || n == "diag-neumann") return diag();
    if (n == "moore") return moore();
    fail(ErrorCode::parse, "unknown neighborhood '" + std::string(name) +
                               "' (expected von-neumann, diag or moore)");
}

Stencil Stencil::from_mask_rows(const std::vector<std::string>& rows) {
    DigitRows mask = parse_digit_rows(rows);
    if (mask.width % 2 == 0 || mask.height % 2 == 0)
        fail(ErrorCode::parse, "stencil mask must have odd width and height");
    const int64_t cx = mask.width / 2;
    const int64_t cy = mask.height / 2;
    std::vector<Point> offsets;
    for (int64_t y = 0; y < mask.height; ++y) {
        for (int64_t x = 0; x < mask.width; ++x) {
            const int32_t v = mask.values[static_cast<size_t>(y * mask.width + x)];
            if (v == 0) continue;
            if (v != 1) fail(ErrorCode::parse, "stencil mask entries must be 0 or 1");
            if (x == cx && y == cy)
                fail(ErrorCode::parse, "stencil mask center must be 0");
            offsets.push_back(Point{x - cx, y - cy});
        }
    }
    if (offsets.empty()) fail(ErrorCode::parse, "stencil mask selects no neighbors");
    return Stencil(std::move(offsets), "custom");
}

Stencil Stencil::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::io, "cannot open stencil mask file: " + path.string());
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        rows.push_back(line);
    }
    return from_mask_rows(rows);
}

bool Stencil::d4_symmetric() const {
    std::set<std::pair<int64_t, int64_t>> base;
    for (const Point& o : offsets_) base.insert({o.x, o.y});
    auto check = [&](auto&& transform) {
        for (const Point& o : offsets_) {
            auto [tx, ty] = transform(o.x, o.y);
            if (!base.count({tx, ty})) return false;
        }
        return true;
    };
    return check([](int64_t x, int64_t y) { return std::pair{-x, y}; }) &&
           check([](int64_t x, int64_t y) { return std::pair{x, -y}; }) &&
           check([](int64_t x, int64_t y) { return std::pair{y, x}; }) &&
           check([](int64_t x, int64_t y) { return std::pair{-y, -x}; });
}

} // namespace modlap
