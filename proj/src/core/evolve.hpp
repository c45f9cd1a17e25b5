#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "core/grid.hpp"
#include "core/schedule.hpp"
#include "core/stencil.hpp"

namespace modlap {

// Signed integer field produced by the Laplacian before modular reduction.
struct LaplacianField {
    int64_t width = 0;
    int64_t height = 0;
    Point origin;  // array position of lattice (0,0)
    std::vector<int64_t> values;

    int64_t at(Point lattice) const {
        const int64_t ax = lattice.x + origin.x;
        const int64_t ay = lattice.y + origin.y;
        if (ax < 0 || ax >= width || ay < 0 || ay >= height) return 0;
        return values[static_cast<size_t>(ay * width + ax)];
    }
};

// Graph Laplacian over the integers: at each cell p the value is
// sum over neighbors g of (v(g) - v(p)), with off-array reads as 0. The output
// covers the input array dilated by the stencil radius.
LaplacianField laplacian(const Grid& grid, const Stencil& stencil);

// One evolution step: Laplacian followed by the non-negative (Euclidean)
// residue mod `modulus`. Iteration advances by one and the array grows by the
// stencil radius on every side.
Grid step(const Grid& grid, const Stencil& stencil, int32_t modulus);

struct Trajectory {
    Grid seed;
    Stencil stencil;
    Schedule schedule;
    std::vector<Grid> states;  // states[i] is the configuration at iteration i

    const Grid& at(int64_t i) const { return states[static_cast<size_t>(i)]; }
    int64_t steps() const { return static_cast<int64_t>(states.size()) - 1; }
};

// Runs `steps` evolution steps and keeps every intermediate state.
Trajectory evolve(const Grid& seed, const Stencil& stencil, const Schedule& schedule,
                  int64_t steps);

// Streaming variant: visits states i = 0..steps without retaining them.
void evolve_visit(const Grid& seed, const Stencil& stencil, const Schedule& schedule,
                  int64_t steps, const std::function<void(const Grid&)>& visit);

} // namespace modlap
