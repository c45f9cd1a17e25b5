#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/evolve.hpp"
#include "core/grid.hpp"

namespace modlap::analysis {

enum class Adjacency { four, eight };

// Denominator convention for the occupancy density of the figure at
// iteration i: the reachable area (3 + 2i)^2 of a 3x3 seed frame under a
// radius-1 stencil (frame3), or the general (s + 2*r*i)^2.
struct DensityMode {
    bool frame3 = true;
    int32_t seed_side = 3;
    int32_t radius = 1;

    static DensityMode frame3_mode() { return DensityMode{true, 3, 1}; }
    static DensityMode general(int32_t seed_side, int32_t radius);
};

// Occupied cells (value > 0) divided by the reachable lattice area at the
// grid's iteration.
double density(const Grid& grid, const DensityMode& mode);

struct Labeling {
    int64_t count = 0;             // number of connected components
    int64_t width = 0;             // label field covers the grid array
    int64_t height = 0;
    Point origin;
    std::vector<int32_t> labels;   // 0 = background, components numbered from 1

    int32_t label_at(Point lattice) const {
        const int64_t ax = lattice.x + origin.x;
        const int64_t ay = lattice.y + origin.y;
        if (ax < 0 || ax >= width || ay < 0 || ay >= height) return 0;
        return labels[static_cast<size_t>(ay * width + ax)];
    }
};

// Flood-fill labeling of occupied cells; labels are assigned in row-major
// discovery order, so the result is deterministic.
Labeling connected_components(const Grid& grid, Adjacency adjacency);

// How far the figure is from being connected: bridge components with paths,
// where joining two components costs the number of strictly-between cells on
// a shortest path (Chebyshev-1 under 8-adjacency, Manhattan-1 under
// 4-adjacency); the result is the largest bridge on a bottleneck-optimal
// connection plan (max edge of a minimum spanning tree over components).
// 0 for a single component; error on an empty grid.
int64_t connectivity_distance(const Grid& grid, Adjacency adjacency);
int64_t connectivity_distance(const Grid& grid, const Labeling& labeling, Adjacency adjacency);

struct BoxCountFit {
    std::vector<int64_t> sizes;   // strictly increasing powers of two
    std::vector<int64_t> counts;  // occupied boxes per size, non-increasing
    double slope = 0.0;           // box-counting dimension estimate
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Box-counting dimension over the support bounding box: box sizes
// 1, 2, 4, ... up to half the larger box side, anchored at the box's top-left
// corner; the estimate is the least-squares slope of log N(eps) against
// log(1/eps). Returns nullopt for degenerate figures (fewer than 2 occupied
// cells or support side < 4).
std::optional<BoxCountFit> box_counting_dimension(const Grid& grid);

struct MetricsRow {
    int64_t iteration = 0;
    double density = 0.0;
    int64_t occupied = 0;
    int64_t components = 0;
    int64_t connectivity_distance = 0;
    std::optional<double> box_dimension;
};

MetricsRow metrics_for(const Grid& grid, Adjacency adjacency, const DensityMode& mode);

// One row per trajectory state.
std::vector<MetricsRow> metrics_over(const Trajectory& trajectory, Adjacency adjacency,
                                     const DensityMode& mode);

} // namespace modlap::analysis
