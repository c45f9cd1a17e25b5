#include "analysis/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "core/error.hpp"

namespace modlap::analysis {

DensityMode DensityMode::general(int32_t seed_side, int32_t radius) {
    if (seed_side < 1) fail(ErrorCode::invalid_argument, "seed side must be at least 1");
    if (radius < 1) fail(ErrorCode::invalid_argument, "radius must be at least 1");
    return DensityMode{false, seed_side, radius};
}

double density(const Grid& grid, const DensityMode& mode) {
    const int64_t i = grid.iteration();
    const int64_t side = mode.frame3 ? 3 + 2 * i
                                    : mode.seed_side + 2 * static_cast<int64_t>(mode.radius) * i;
    const double denom = static_cast<double>(side) * static_cast<double>(side);
    return static_cast<double>(grid.occupied_count()) / denom;
}

Labeling connected_components(const Grid& grid, Adjacency adjacency) {
    Labeling out;
    out.width = grid.width();
    out.height = grid.height();
    out.origin = grid.origin();
    out.labels.assign(static_cast<size_t>(out.width * out.height), 0);

    static constexpr Point kOrtho[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    static constexpr Point kAll[] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                     {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
    const std::span<const Point> nbrs =
        adjacency == Adjacency::four ? std::span<const Point>(kOrtho) : std::span<const Point>(kAll);

    const auto& cells = grid.cells();
    auto idx = [&](int64_t ax, int64_t ay) { return static_cast<size_t>(ay * out.width + ax); };

    std::queue<std::pair<int64_t, int64_t>> frontier;
    for (int64_t ay = 0; ay < out.height; ++ay) {
        for (int64_t ax = 0; ax < out.width; ++ax) {
            if (cells[idx(ax, ay)] == 0 || out.labels[idx(ax, ay)] != 0) continue;
            const int32_t label = static_cast<int32_t>(++out.count);
            out.labels[idx(ax, ay)] = label;
            frontier.push({ax, ay});
            while (!frontier.empty()) {
                auto [cx, cy] = frontier.front();
                frontier.pop();
                for (const Point& d : nbrs) {
                    const int64_t nx = cx + d.x;
                    const int64_t ny = cy + d.y;
                    if (nx < 0 || nx >= out.width || ny < 0 || ny >= out.height) continue;
                    if (cells[idx(nx, ny)] == 0 || out.labels[idx(nx, ny)] != 0) continue;
                    out.labels[idx(nx, ny)] = label;
                    frontier.push({nx, ny});
                }
            }
        }
    }
    return out;
}

namespace {

// Cells of each component that have at least one neighbor outside the
// component; minimum inter-component distances are always realized there.
std::vector<std::vector<Point>> component_boundaries(const Grid& grid, const Labeling& lab) {
    std::vector<std::vector<Point>> boundary(static_cast<size_t>(lab.count));
    static constexpr Point kAll[] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                     {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};
    const Box box = grid.array_box();
    for (int64_t y = box.min.y; y <= box.max.y; ++y) {
        for (int64_t x = box.min.x; x <= box.max.x; ++x) {
            const int32_t label = lab.label_at(Point{x, y});
            if (label == 0) continue;
            bool edge = false;
            for (const Point& d : kAll) {
                if (lab.label_at(Point{x + d.x, y + d.y}) != label) {
                    edge = true;
                    break;
                }
            }
            if (edge) boundary[static_cast<size_t>(label - 1)].push_back(Point{x, y});
        }
    }
    return boundary;
}

} // namespace

int64_t connectivity_distance(const Grid& grid, const Labeling& lab, Adjacency adjacency) {
    if (lab.count == 0) fail(ErrorCode::invalid_argument, "connectivity distance of an empty grid");
    if (lab.count == 1) return 0;

    const auto boundary = component_boundaries(grid, lab);
    const size_t n = static_cast<size_t>(lab.count);
    auto metric = [&](Point a, Point b) {
        return adjacency == Adjacency::eight ? chebyshev(a, b) : manhattan(a, b);
    };

    std::vector<std::vector<int64_t>> weight(n, std::vector<int64_t>(n, 0));
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = a + 1; b < n; ++b) {
            int64_t best = std::numeric_limits<int64_t>::max();
            for (const Point& pa : boundary[a])
                for (const Point& pb : boundary[b])
                    best = std::min(best, metric(pa, pb));
            weight[a][b] = weight[b][a] = best - 1;
        }
    }

    // Prim over the complete component graph; the bottleneck edge of any MST
    // is the minimal worst-case bridge length.
    std::vector<int64_t> reach(n, std::numeric_limits<int64_t>::max());
    std::vector<bool> done(n, false);
    reach[0] = 0;
    int64_t bottleneck = 0;
    for (size_t it = 0; it < n; ++it) {
        size_t u = n;
        for (size_t v = 0; v < n; ++v)
            if (!done[v] && (u == n || reach[v] < reach[u])) u = v;
        done[u] = true;
        bottleneck = std::max(bottleneck, reach[u]);
        for (size_t v = 0; v < n; ++v)
            if (!done[v]) reach[v] = std::min(reach[v], weight[u][v]);
    }
    return bottleneck;
}

int64_t connectivity_distance(const Grid& grid, Adjacency adjacency) {
    return connectivity_distance(grid, connected_components(grid, adjacency), adjacency);
}

std::optional<BoxCountFit> box_counting_dimension(const Grid& grid) {
    const auto support = grid.support();
    if (!support) return std::nullopt;
    if (grid.occupied_count() < 2) return std::nullopt;
    const int64_t side = support->side();
    if (side < 4) return std::nullopt;

    BoxCountFit fit;
    for (int64_t eps = 1; eps * 2 <= side; eps *= 2) {
        const int64_t bw = (support->width() + eps - 1) / eps;
        const int64_t bh = (support->height() + eps - 1) / eps;
        std::vector<uint8_t> hit(static_cast<size_t>(bw * bh), 0);
        for (int64_t y = support->min.y; y <= support->max.y; ++y) {
            for (int64_t x = support->min.x; x <= support->max.x; ++x) {
                if (grid.at(Point{x, y}) == 0) continue;
                const int64_t bx = (x - support->min.x) / eps;
                const int64_t by = (y - support->min.y) / eps;
                hit[static_cast<size_t>(by * bw + bx)] = 1;
            }
        }
        int64_t count = 0;
        for (uint8_t h : hit) count += h;
        fit.sizes.push_back(eps);
        fit.counts.push_back(count);
    }

    const size_t m = fit.sizes.size();
    double sx = 0, sy = 0;
    std::vector<double> xs(m), ys(m);
    for (size_t j = 0; j < m; ++j) {
        xs[j] = -std::log(static_cast<double>(fit.sizes[j]));  // log(1/eps)
        ys[j] = std::log(static_cast<double>(fit.counts[j]));
        sx += xs[j];
        sy += ys[j];
    }
    const double mx = sx / static_cast<double>(m);
    const double my = sy / static_cast<double>(m);
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t j = 0; j < m; ++j) {
        sxx += (xs[j] - mx) * (xs[j] - mx);
        sxy += (xs[j] - mx) * (ys[j] - my);
        syy += (ys[j] - my) * (ys[j] - my);
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

MetricsRow metrics_for(const Grid& grid, Adjacency adjacency, const DensityMode& mode) {
    MetricsRow row;
    row.iteration = grid.iteration();
    row.density = density(grid, mode);
    const Labeling lab = connected_components(grid, adjacency);
    row.occupied = grid.occupied_count();
    row.components = lab.count;
    row.connectivity_distance = lab.count <= 1 ? 0 : connectivity_distance(grid, lab, adjacency);
    if (auto fit = box_counting_dimension(grid)) row.box_dimension = fit->slope;
    return row;
}

std::vector<MetricsRow> metrics_over(const Trajectory& trajectory, Adjacency adjacency,
                                     const DensityMode& mode) {
    std::vector<MetricsRow> rows;
    rows.reserve(trajectory.states.size());
    for (const Grid& state : trajectory.states) rows.push_back(metrics_for(state, adjacency, mode));
    return rows;
}

} // namespace modlap::analysis
