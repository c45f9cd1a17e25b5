#include "core/evolve.hpp"

#include <utility>

#include "core/error.hpp"

namespace modlap {

LaplacianField laplacian(const Grid& grid, const Stencil& stencil) {
    const int64_t r = stencil.radius();
    LaplacianField field;
    field.width = grid.width() + 2 * r;
    field.height = grid.height() + 2 * r;
    field.origin = Point{grid.origin().x + r, grid.origin().y + r};
    field.values.assign(static_cast<size_t>(field.width * field.height), 0);

    const int64_t degree = static_cast<int64_t>(stencil.size());
    const Box in_box = grid.array_box();
    for (int64_t y = in_box.min.y - r; y <= in_box.max.y + r; ++y) {
        for (int64_t x = in_box.min.x - r; x <= in_box.max.x + r; ++x) {
            const Point p{x, y};
            int64_t sum = 0;
            for (const Point& o : stencil.offsets())
                sum += grid.at(Point{x + o.x, y + o.y});
            sum -= degree * static_cast<int64_t>(grid.at(p));
            field.values[static_cast<size_t>((y + field.origin.y) * field.width +
                                             (x + field.origin.x))] = sum;
        }
    }
    return field;
}

namespace {

int32_t euclid_mod(int64_t v, int64_t k) {
    const int64_t m = v % k;
    return static_cast<int32_t>(m < 0 ? m + k : m);
}

} // namespace

Grid step(const Grid& grid, const Stencil& stencil, int32_t modulus) {
    if (modulus < 2) fail(ErrorCode::invalid_argument, "modulus must be at least 2");
    LaplacianField field = laplacian(grid, stencil);
    GridBuilder out(field.width, field.height, field.origin);
    for (int64_t ay = 0; ay < field.height; ++ay)
        for (int64_t ax = 0; ax < field.width; ++ax)
            out.set(ax, ay, euclid_mod(field.values[static_cast<size_t>(ay * field.width + ax)],
                                       modulus));
    return out.finish(grid.iteration() + 1, modulus);
}

namespace {

void check_schedule_covers(const Schedule& schedule, const Grid& seed, int64_t steps) {
    if (steps < 0) fail(ErrorCode::invalid_argument, "step count must be non-negative");
    if (auto len = schedule.length(); len && seed.iteration() + steps > *len)
        fail(ErrorCode::range, "explicit schedule of length " + std::to_string(*len) +
                                   " is shorter than the requested " + std::to_string(steps) +
                                   " steps");
}

} // namespace

Trajectory evolve(const Grid& seed, const Stencil& stencil, const Schedule& schedule,
                  int64_t steps) {
    check_schedule_covers(schedule, seed, steps);
    Trajectory traj{seed, stencil, schedule, {}};
    traj.states.reserve(static_cast<size_t>(steps) + 1);
    traj.states.push_back(seed);
    for (int64_t i = 1; i <= steps; ++i)
        traj.states.push_back(
            step(traj.states.back(), stencil, schedule.modulus_at(seed.iteration() + i)));
    return traj;
}

void evolve_visit(const Grid& seed, const Stencil& stencil, const Schedule& schedule,
                  int64_t steps, const std::function<void(const Grid&)>& visit) {
    check_schedule_covers(schedule, seed, steps);
    Grid current = seed;
    visit(current);
    for (int64_t i = 1; i <= steps; ++i) {
        current = step(current, stencil, schedule.modulus_at(seed.iteration() + i));
        visit(current);
    }
}

} // namespace modlap
