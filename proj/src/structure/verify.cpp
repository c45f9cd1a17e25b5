#include "structure/verify.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <sstream>
#include <thread>

#include "analysis/metrics.hpp"
#include "core/error.hpp"

namespace modlap::structure {

namespace {

// First occupied cell of the seed's array in row-major order.
Point seed_anchor(const Grid& seed) {
    const Box box = seed.array_box();
    for (int64_t y = box.min.y; y <= box.max.y; ++y)
        for (int64_t x = box.min.x; x <= box.max.x; ++x)
            if (seed.at(Point{x, y}) != 0) return Point{x, y};
    fail(ErrorCode::invalid_argument, "seed pattern is all zero");
}

std::string format_offsets(const std::vector<Point>& offsets) {
    std::ostringstream out;
    for (size_t i = 0; i < offsets.size(); ++i) {
        if (i) out << ' ';
        out << '(' << offsets[i].x << ',' << offsets[i].y << ')';
    }
    return out.str();
}

} // namespace

CopyReport detect_seed_copies(const Grid& grid, const Grid& seed) {
    if (seed.occupied_count() == 0)
        fail(ErrorCode::invalid_argument, "copy detection needs a nonzero seed");

    CopyReport report;
    report.iteration = grid.iteration();

    const Box grid_box = grid.array_box();
    const Box seed_box = seed.array_box();
    const Point anchor = seed_anchor(seed);

    const int64_t gw = grid.width();
    const int64_t gh = grid.height();
    std::vector<uint8_t> covered(static_cast<size_t>(gw * gh), 0);
    auto covered_at = [&](Point p) -> uint8_t& {
        return covered[static_cast<size_t>((p.y + grid.origin().y) * gw + (p.x + grid.origin().x))];
    };

    std::vector<Point> window_origins;  // lattice position of each copy's box min corner
    for (int64_t y = grid_box.min.y; y <= grid_box.max.y; ++y) {
        for (int64_t x = grid_box.min.x; x <= grid_box.max.x; ++x) {
            const Point cell{x, y};
            if (grid.at(cell) == 0 || covered_at(cell)) continue;

            // Align the seed's first occupied cell with this one and compare
            // the whole pattern window, zeros included.
            const Point window_min{x - (anchor.x - seed_box.min.x),
                                   y - (anchor.y - seed_box.min.y)};
            bool match = true;
            for (int64_t v = 0; match && v < seed.height(); ++v) {
                for (int64_t u = 0; u < seed.width(); ++u) {
                    const Point sp{seed_box.min.x + u, seed_box.min.y + v};
                    const Point gp{window_min.x + u, window_min.y + v};
                    const int32_t sv = seed.at(sp);
                    if (grid.at(gp) != sv || (sv != 0 && grid_box.contains(gp) && covered_at(gp))) {
                        match = false;
                        break;
                    }
                }
            }
            if (!match) continue;  // stays uncovered; counted as residue below

            for (int64_t v = 0; v < seed.height(); ++v)
                for (int64_t u = 0; u < seed.width(); ++u) {
                    const Point sp{seed_box.min.x + u, seed_box.min.y + v};
                    const Point gp{window_min.x + u, window_min.y + v};
                    if (seed.at(sp) != 0) covered_at(gp) = 1;
                }
            window_origins.push_back(window_min);
        }
    }

    for (int64_t y = grid_box.min.y; y <= grid_box.max.y; ++y)
        for (int64_t x = grid_box.min.x; x <= grid_box.max.x; ++x)
            if (grid.at(Point{x, y}) != 0 && !covered_at(Point{x, y})) ++report.residue;

    bool disjoint = true;
    if (window_origins.size() >= 2) {
        int64_t min_distance = std::numeric_limits<int64_t>::max();
        for (size_t a = 0; a < window_origins.size(); ++a) {
            const Box box_a{window_origins[a],
                            {window_origins[a].x + seed.width() - 1,
                             window_origins[a].y + seed.height() - 1}};
            for (size_t b = a + 1; b < window_origins.size(); ++b) {
                const Box box_b{window_origins[b],
                                {window_origins[b].x + seed.width() - 1,
                                 window_origins[b].y + seed.height() - 1}};
                const int64_t d = box_chebyshev(box_a, box_b);
                if (d == 0) disjoint = false;
                min_distance = std::min(min_distance, d);
            }
        }
        report.gap = min_distance - 1;
    }

    report.offsets.reserve(window_origins.size());
    for (const Point& w : window_origins)
        report.offsets.push_back(Point{w.x - window_origins.front().x,
                                       w.y - window_origins.front().y});
    report.matched = !window_origins.empty() && report.residue == 0 && disjoint;
    return report;
}

namespace {

bool is_diag_stencil(const Stencil& stencil) {
    auto offs = stencil.offsets();
    std::vector<Point> got(offs.begin(), offs.end());
    std::vector<Point> want{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    std::sort(got.begin(), got.end());
    return got == want;
}

} // namespace

std::vector<CopyReport> verify_dissociation(const Grid& seed, const Stencil& stencil,
                                            int32_t k_max, bool strict) {
    if (k_max < 1) fail(ErrorCode::invalid_argument, "k_max must be at least 1");
    if (seed.iteration() != 0)
        fail(ErrorCode::invalid_argument, "dissociation check starts from an iteration-0 seed");
    if (strict) {
        const auto support = seed.support();
        if (!support || support->width() > 3 || support->height() > 3)
            fail(ErrorCode::invalid_argument,
                 "strict mode requires a nonzero seed within a 3x3 box");
        if (!is_diag_stencil(stencil))
            fail(ErrorCode::invalid_argument,
                 "strict mode requires the diag neighborhood");
    }

    std::vector<CopyReport> reports;
    reports.reserve(static_cast<size_t>(k_max));
    evolve_visit(seed, stencil, Schedule::constant(2), 8LL * k_max, [&](const Grid& state) {
        if (state.iteration() > 0 && state.iteration() % 8 == 0)
            reports.push_back(detect_seed_copies(state, seed));
    });
    return reports;
}

std::vector<TraceEntry> block_trace(const Grid& seed) {
    if (seed.width() != 3 || seed.height() != 3)
        fail(ErrorCode::invalid_argument, "block trace expects a 3x3 seed pattern");
    if (seed.iteration() != 0)
        fail(ErrorCode::invalid_argument, "block trace starts from an iteration-0 seed");

    const Stencil stencil = Stencil::diag();
    const bool symmetric_seed = seed.d4_symmetric();
    std::vector<TraceEntry> entries;

    Grid state = seed;
    for (int step_index = 1; step_index <= 4; ++step_index) {
        state = step(state, stencil, 2);
        TraceEntry entry;
        entry.name = "F" + std::to_string(step_index);

        if (step_index % 2 == 1) {
            // Odd iterations: structural checks only.
            const Box predicted = seed.array_box().dilated(step_index);
            const auto support = state.support();
            const bool contained = !support || predicted.contains(*support);
            const bool symmetry_ok = !symmetric_seed || state.d4_symmetric();
            entry.passed = contained && symmetry_ok;
            std::ostringstream detail;
            detail << "support within dilated box: " << (contained ? "yes" : "no");
            if (symmetric_seed)
                detail << "; D4 pattern consistency: " << (symmetry_ok ? "yes" : "no");
            entry.detail = detail.str();
        } else {
            // Even iterations: exactly four seed copies at spacing 4 (F2) or 8 (F4).
            const int64_t spacing = step_index == 2 ? 4 : 8;
            const CopyReport copies = detect_seed_copies(state, seed);
            std::vector<Point> want{{0, 0}, {spacing, 0}, {0, spacing}, {spacing, spacing}};
            std::vector<Point> got = copies.offsets;
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            entry.passed = copies.matched && got == want;
            std::ostringstream detail;
            detail << (copies.matched ? "matched" : "not matched") << "; offsets "
                   << format_offsets(copies.offsets) << "; expected spacing " << spacing;
            entry.detail = detail.str();
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

SierpinskiReport sierpinski_report(const Grid& seed, const Stencil& stencil, int32_t k_max) {
    if (k_max < 0 || k_max > 6)
        fail(ErrorCode::invalid_argument, "sierpinski report supports k_max in [0, 6]");
    if (seed.iteration() != 0)
        fail(ErrorCode::invalid_argument, "sierpinski report starts from an iteration-0 seed");

    const int64_t last = (int64_t{1} << (k_max + 1)) - 1;
    SierpinskiReport report;
    evolve_visit(seed, stencil, Schedule::constant(2), last, [&](const Grid& state) {
        const int64_t i = state.iteration();
        if (((i + 1) & i) != 0 || i == 0) return;  // keep iterations 2^(k+1) - 1
        SierpinskiCheckpoint checkpoint;
        checkpoint.iteration = i;
        int32_t k = -1;
        for (int64_t v = i + 1; v > 1; v >>= 1) ++k;
        checkpoint.k = k;
        if (auto fit = analysis::box_counting_dimension(state))
            checkpoint.box_dimension = fit->slope;
        checkpoint.d4_symmetric = state.d4_symmetric();
        report.checkpoints.push_back(std::move(checkpoint));
    });
    return report;
}

Grid seed_from_mask(int32_t mask) {
    if (mask < 1 || mask > 511)
        fail(ErrorCode::invalid_argument, "seed mask must be in [1, 511]");
    std::vector<std::string> rows(3, "000");
    for (int bit = 0; bit < 9; ++bit)
        if (mask & (1 << bit)) rows[static_cast<size_t>(bit / 3)][static_cast<size_t>(bit % 3)] = '1';
    return Grid::from_pattern(rows);
}

namespace {

PropositionResult check_one_seed(int32_t mask, int32_t k_max) {
    PropositionResult result;
    result.mask = mask;
    const Grid seed = seed_from_mask(mask);
    result.reports = verify_dissociation(seed, Stencil::diag(), k_max, /*strict=*/true);

    const CopyReport& at8 = result.reports.front();
    {
        const Trajectory traj = evolve(seed, Stencil::diag(), Schedule::constant(2), 8);
        const Grid& state8 = traj.states.back();
        result.occupied_at_8 = state8.occupied_count();
        result.density_at_8 = analysis::density(state8, analysis::DensityMode::frame3_mode());
    }

    auto fail_with = [&](const std::string& why) {
        result.pass = false;
        result.failure = why;
    };

    result.pass = true;
    for (size_t k = 0; k < result.reports.size(); ++k) {
        const CopyReport& report = result.reports[k];
        if (!report.matched) {
            fail_with("iteration " + std::to_string(8 * (k + 1)) + " is not a clean copy spread");
            return result;
        }
        if (report.gap && *report.gap < 13) {
            fail_with("gap " + std::to_string(*report.gap) + " below 13 at iteration " +
                      std::to_string(8 * (k + 1)));
            return result;
        }
    }

    std::vector<Point> got = at8.offsets;
    std::vector<Point> want{{0, 0}, {16, 0}, {0, 16}, {16, 16}};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) {
        fail_with("offsets at iteration 8 are " + format_offsets(at8.offsets));
        return result;
    }
    if (!at8.gap || *at8.gap != 13) {
        fail_with("gap at iteration 8 is " +
                  (at8.gap ? std::to_string(*at8.gap) : std::string("undefined")));
        return result;
    }
    if (result.occupied_at_8 > 36 || result.density_at_8 > 36.0 / 361.0 + 1e-12) {
        fail_with("density " + std::to_string(result.density_at_8) + " exceeds 36/361");
        return result;
    }
    return result;
}

} // namespace

std::vector<PropositionResult> proposition_sweep(int32_t k_max, int32_t threads) {
    if (k_max < 1) fail(ErrorCode::invalid_argument, "k_max must be at least 1");
    int32_t workers = threads > 0 ? threads
                                  : static_cast<int32_t>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min(workers, 511);

    std::vector<PropositionResult> results(511);
    std::vector<std::future<void>> futures;
    const int32_t chunk = (511 + workers - 1) / workers;
    for (int32_t w = 0; w < workers; ++w) {
        const int32_t lo = 1 + w * chunk;
        const int32_t hi = std::min(512, lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [lo, hi, k_max, &results] {
            for (int32_t mask = lo; mask < hi; ++mask)
                results[static_cast<size_t>(mask - 1)] = check_one_seed(mask, k_max);
        }));
    }
    for (auto& f : futures) f.get();
    return results;
}

} // namespace modlap::structure
