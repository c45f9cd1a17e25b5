#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/evolve.hpp"
#include "core/grid.hpp"

namespace modlap::structure {

// Result of decomposing a grid into translated copies of a seed pattern.
struct CopyReport {
    bool matched = false;          // every occupied cell covered by exactly one disjoint copy
    std::vector<Point> offsets;    // copy translations relative to the first copy found
    std::optional<int64_t> gap;    // min Chebyshev clearance between copy boxes; nullopt for one copy
    int64_t residue = 0;           // occupied cells not covered by any copy
    int64_t iteration = 0;         // iteration of the examined grid
};

// Greedy row-major scan: at each uncovered occupied cell, anchor the seed's
// full pattern window (zeros included) and require an exact cellwise match.
// Copies must not reuse cells and their windows must be pairwise disjoint.
CopyReport detect_seed_copies(const Grid& grid, const Grid& seed);

// Runs the binary dynamics once to 8*k_max and reports the copy decomposition
// at every iteration 8k. In strict mode the seed must fit in a 3x3 box and the
// stencil must be the diagonal one (the hypothesis under which dissociation is
// guaranteed); exploratory mode lifts both restrictions.
std::vector<CopyReport> verify_dissociation(const Grid& seed, const Stencil& stencil,
                                            int32_t k_max, bool strict = true);

struct TraceEntry {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Checks the first four binary iterations of a 3x3 seed under the diagonal
// neighborhood: F2 and F4 must be four seed copies at spacings 4 and 8, F1 and
// F3 are checked structurally (support containment, and pattern symmetry when
// the seed is symmetric).
std::vector<TraceEntry> block_trace(const Grid& seed);

struct SierpinskiCheckpoint {
    int32_t k = 0;
    int64_t iteration = 0;  // 2^(k+1) - 1
    std::optional<double> box_dimension;
    bool d4_symmetric = false;
};

struct SierpinskiReport {
    std::vector<SierpinskiCheckpoint> checkpoints;
};

// Binary evolution probed at iterations 2^(k+1)-1 for k = 0..k_max (k_max <= 6).
SierpinskiReport sierpinski_report(const Grid& seed, const Stencil& stencil, int32_t k_max);

// One seed of the exhaustive 3x3 sweep.
struct PropositionResult {
    int32_t mask = 0;  // 9-bit occupancy pattern, row-major
    bool pass = false;
    std::string failure;                // empty when pass
    std::vector<CopyReport> reports;    // at iterations 8, 16, ..., 8*k_max
    double density_at_8 = 0.0;
    int64_t occupied_at_8 = 0;
};

// Checks dissociation for all 511 nonzero 3x3 binary seeds under the diagonal
// neighborhood and the constant-2 schedule: matched copies at every 8k, exact
// offsets {(0,0),(16,0),(0,16),(16,16)} and gap 13 at iteration 8, and the
// density bound 36/19^2. Seeds are distributed over `threads` workers
// (0 = hardware default); results are ordered by mask regardless.
std::vector<PropositionResult> proposition_sweep(int32_t k_max, int32_t threads = 0);

Grid seed_from_mask(int32_t mask);

} // namespace modlap::structure
