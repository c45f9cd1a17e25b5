#pragma once

#include <optional>
#include <string>

#include "core/evolve.hpp"
#include "signal/series.hpp"

namespace modlap::signal {

// Fixed-cell diagnostics for one schedule: series statistics, spectrum,
// autocorrelation and the box dimension of the final figure. Runs stream the
// evolution, so long horizons stay cheap on memory.
struct StyleReport {
    std::string schedule;
    CellSeries series;
    double mean = 0.0;
    double variance = 0.0;
    double entropy_bits = 0.0;
    SpectrumReport spectrum;
    std::optional<std::vector<double>> acf;  // nullopt when the series is constant
    std::optional<double> final_box_dimension;
    int64_t final_iteration = 0;
};

StyleReport style_report(const Grid& seed, const Stencil& stencil, const Schedule& schedule,
                         int64_t steps, Point cell);

// The canonical pairing: constant(2) against two_n_two_two(3) from the same
// seed, stencil, horizon and cell. Requires steps >= 100.
struct StyleComparison {
    StyleReport binary;   // 2222
    StyleReport ternary;  // 2322
};

StyleComparison compare_styles(const Grid& seed, const Stencil& stencil, int64_t steps,
                               Point cell);

} // namespace modlap::signal
