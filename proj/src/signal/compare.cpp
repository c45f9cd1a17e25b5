#include "signal/compare.hpp"

#include "analysis/metrics.hpp"
#include "core/error.hpp"

namespace modlap::signal {

StyleReport style_report(const Grid& seed, const Stencil& stencil, const Schedule& schedule,
                         int64_t steps, Point cell) {
    StyleReport report;
    report.schedule = schedule.spec_string();
    report.series.cell = cell;
    report.series.values.reserve(static_cast<size_t>(steps) + 1);

    int32_t alphabet = 2;
    std::optional<Grid> final_state;
    evolve_visit(seed, stencil, schedule, steps, [&](const Grid& state) {
        report.series.values.push_back(state.at(cell));
        alphabet = std::max(alphabet, state.max_state());
        if (state.iteration() == seed.iteration() + steps) final_state = state;
    });
    report.series.alphabet = alphabet;

    report.mean = mean(report.series);
    report.variance = variance(report.series);
    report.entropy_bits = shannon_entropy_bits(report.series);
    report.spectrum = dft_amplitude(report.series);
    report.acf = autocorrelation(report.series);
    report.final_iteration = final_state->iteration();
    if (auto fit = analysis::box_counting_dimension(*final_state))
        report.final_box_dimension = fit->slope;
    return report;
}

StyleComparison compare_styles(const Grid& seed, const Stencil& stencil, int64_t steps,
                               Point cell) {
    if (steps < 100)
        fail(ErrorCode::invalid_argument, "style comparison needs at least 100 steps");
    return StyleComparison{
        style_report(seed, stencil, Schedule::constant(2), steps, cell),
        style_report(seed, stencil, Schedule::two_n_two_two(3), steps, cell),
    };
}

} // namespace modlap::signal
