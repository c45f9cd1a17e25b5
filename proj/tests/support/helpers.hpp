#pragma once

#include <random>
#include <string>
#include <vector>

#include "core/grid.hpp"
#include "support/oracles.hpp"

namespace testutil {

// Random nonzero digit pattern; digits below `max_digit` + 1.
inline std::vector<std::string> random_pattern(std::mt19937& rng, int64_t width, int64_t height,
                                               int32_t max_digit = 1, double fill = 0.5) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int32_t> digit(1, max_digit);
    while (true) {
        std::vector<std::string> rows;
        bool any = false;
        for (int64_t y = 0; y < height; ++y) {
            std::string row;
            for (int64_t x = 0; x < width; ++x) {
                if (coin(rng) < fill) {
                    row += static_cast<char>('0' + digit(rng));
                    any = true;
                } else {
                    row += '0';
                }
            }
            rows.push_back(row);
        }
        if (any) return rows;
    }
}

// Engine grid and oracle map built from the same rows; the oracle anchors at
// the same central cell as Grid::from_pattern.
inline oracle::CellMap oracle_of_pattern(const std::vector<std::string>& rows) {
    const int64_t w = static_cast<int64_t>(rows.front().size());
    const int64_t h = static_cast<int64_t>(rows.size());
    return oracle::from_rows(rows, (w - 1) / 2, (h - 1) / 2);
}

inline bool grid_matches_oracle(const modlap::Grid& grid, const oracle::CellMap& cells) {
    for (const auto& [cell, v] : cells)
        if (grid.at(modlap::Point{cell.first, cell.second}) != v) return false;
    int64_t nonzero = 0;
    for (const auto& [cell, v] : cells)
        if (v != 0) ++nonzero;
    return nonzero == grid.occupied_count();
}

// Applies one of the eight square symmetries to the lattice pattern.
inline modlap::Grid transform_grid(const modlap::Grid& g, int which) {
    using modlap::Point;
    auto map = [&](int64_t x, int64_t y) -> Point {
        switch (which) {
            case 0: return {x, y};
            case 1: return {-x, y};
            case 2: return {x, -y};
            case 3: return {-x, -y};
            case 4: return {y, x};
            case 5: return {-y, x};
            case 6: return {y, -x};
            default: return {-y, -x};
        }
    };
    const modlap::Box box = g.array_box();
    const Point c0 = map(box.min.x, box.min.y);
    const Point c1 = map(box.max.x, box.max.y);
    const modlap::Box out_box{{std::min(c0.x, c1.x), std::min(c0.y, c1.y)},
                              {std::max(c0.x, c1.x), std::max(c0.y, c1.y)}};
    modlap::GridBuilder builder(out_box.width(), out_box.height(),
                                {-out_box.min.x, -out_box.min.y});
    for (int64_t y = box.min.y; y <= box.max.y; ++y)
        for (int64_t x = box.min.x; x <= box.max.x; ++x) {
            const Point t = map(x, y);
            builder.set(t.x - out_box.min.x, t.y - out_box.min.y, g.at({x, y}));
        }
    return builder.finish(g.iteration(), g.max_state());
}

} // namespace testutil
