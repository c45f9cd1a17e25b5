#include "modlap.h"

#include <cstring>
#include <sstream>
#include <string>

#include "analysis/metrics.hpp"
#include "core/error.hpp"
#include "core/evolve.hpp"
#include "core/grid.hpp"
#include "core/schedule.hpp"
#include "core/stencil.hpp"
#include "io/csv.hpp"
#include "io/render.hpp"
#include "io/snapshot.hpp"
#include "signal/compare.hpp"
#include "signal/series.hpp"
#include "structure/verify.hpp"

struct modlap_grid {
    modlap::Grid value;
};
struct modlap_stencil {
    modlap::Stencil value;
};
struct modlap_schedule {
    modlap::Schedule value;
};
struct modlap_sim {
    modlap::Stencil stencil;
    modlap::Schedule schedule;
    modlap_grid current;
};
struct modlap_copy_report {
    modlap::structure::CopyReport value;
};

namespace {

thread_local std::string g_last_error;

modlap_status to_status(modlap::ErrorCode code) {
    using modlap::ErrorCode;
    switch (code) {
        case ErrorCode::invalid_argument: return MODLAP_ERR_INVALID;
        case ErrorCode::parse: return MODLAP_ERR_PARSE;
        case ErrorCode::io: return MODLAP_ERR_IO;
        case ErrorCode::range: return MODLAP_ERR_RANGE;
        case ErrorCode::degenerate: return MODLAP_ERR_DEGENERATE;
    }
    return MODLAP_ERR_INVALID;
}

template <typename Fn>
modlap_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return MODLAP_OK;
    } catch (const modlap::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MODLAP_ERR_INVALID;
    }
}

modlap_status require(bool condition, const char* message) {
    if (condition) return MODLAP_OK;
    g_last_error = message;
    return MODLAP_ERR_INVALID;
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

modlap::analysis::Adjacency to_adjacency(int adjacency) {
    if (adjacency == 4) return modlap::analysis::Adjacency::four;
    if (adjacency == 8) return modlap::analysis::Adjacency::eight;
    modlap::fail(modlap::ErrorCode::invalid_argument, "adjacency must be 4 or 8");
}

modlap::analysis::DensityMode to_density_mode(int frame3_mode, int32_t seed_side, int32_t radius) {
    return frame3_mode ? modlap::analysis::DensityMode::frame3_mode()
                      : modlap::analysis::DensityMode::general(seed_side, radius);
}

std::vector<int32_t> to_vector(const int32_t* values, size_t count) {
    if (values == nullptr || count == 0)
        modlap::fail(modlap::ErrorCode::invalid_argument, "series is empty");
    return std::vector<int32_t>(values, values + count);
}

} // namespace

extern "C" {

const char* modlap_version(void) { return "1.0.0"; }

const char* modlap_last_error(void) { return g_last_error.c_str(); }

void modlap_buffer_free(void* buffer) { delete[] static_cast<char*>(buffer); }
void modlap_string_free(char* text) { delete[] text; }

/* ---------------- grids ---------------- */

modlap_status modlap_grid_from_pattern(const char* pattern, modlap_grid** out) {
    if (auto s = require(pattern && out, "pattern and out must be non-null")) return s;
    return guarded([&] { *out = new modlap_grid{modlap::Grid::from_pattern_string(pattern)}; });
}

modlap_grid* modlap_grid_clone(const modlap_grid* grid) {
    return grid ? new modlap_grid{grid->value} : nullptr;
}

void modlap_grid_free(modlap_grid* grid) { delete grid; }

int64_t modlap_grid_width(const modlap_grid* grid) { return grid ? grid->value.width() : 0; }
int64_t modlap_grid_height(const modlap_grid* grid) { return grid ? grid->value.height() : 0; }
int64_t modlap_grid_iteration(const modlap_grid* grid) {
    return grid ? grid->value.iteration() : 0;
}
int32_t modlap_grid_max_state(const modlap_grid* grid) {
    return grid ? grid->value.max_state() : 0;
}
int64_t modlap_grid_occupied(const modlap_grid* grid) {
    return grid ? grid->value.occupied_count() : 0;
}

void modlap_grid_bounds(const modlap_grid* grid, int64_t* min_x, int64_t* min_y, int64_t* max_x,
                        int64_t* max_y) {
    if (!grid) return;
    const modlap::Box box = grid->value.array_box();
    if (min_x) *min_x = box.min.x;
    if (min_y) *min_y = box.min.y;
    if (max_x) *max_x = box.max.x;
    if (max_y) *max_y = box.max.y;
}

int32_t modlap_grid_cell(const modlap_grid* grid, int64_t x, int64_t y) {
    return grid ? grid->value.at(modlap::Point{x, y}) : 0;
}

int modlap_grid_support(const modlap_grid* grid, int64_t* min_x, int64_t* min_y, int64_t* max_x,
                        int64_t* max_y) {
    if (!grid) return 0;
    const auto box = grid->value.support();
    if (!box) return 0;
    if (min_x) *min_x = box->min.x;
    if (min_y) *min_y = box->min.y;
    if (max_x) *max_x = box->max.x;
    if (max_y) *max_y = box->max.y;
    return 1;
}

/* ---------------- snapshots and rendering ---------------- */

modlap_status modlap_grid_write_snapshot(const modlap_grid* grid, const char* path) {
    if (auto s = require(grid && path, "grid and path must be non-null")) return s;
    return guarded([&] { modlap::io::write_snapshot(grid->value, path); });
}

modlap_status modlap_grid_read_snapshot(const char* path, modlap_grid** out) {
    if (auto s = require(path && out, "path and out must be non-null")) return s;
    return guarded([&] { *out = new modlap_grid{modlap::io::read_snapshot(path)}; });
}

modlap_status modlap_grid_render(const modlap_grid* grid, const char* format, int32_t scale,
                                 uint8_t** data, size_t* size) {
    if (auto s = require(grid && format && data && size, "all arguments must be non-null"))
        return s;
    return guarded([&] {
        const std::string bytes =
            modlap::io::render(grid->value, modlap::io::parse_render_format(format), scale);
        *size = bytes.size();
        char* buffer = new char[bytes.size()];
        std::memcpy(buffer, bytes.data(), bytes.size());
        *data = reinterpret_cast<uint8_t*>(buffer);
    });
}

modlap_status modlap_grid_render_to_file(const modlap_grid* grid, const char* format,
                                         int32_t scale, const char* path) {
    if (auto s = require(grid && format && path, "all arguments must be non-null")) return s;
    return guarded([&] {
        modlap::io::render_to_file(grid->value, modlap::io::parse_render_format(format), scale,
                                   path);
    });
}

/* ---------------- stencils and schedules ---------------- */

modlap_status modlap_stencil_builtin(const char* name, modlap_stencil** out) {
    if (auto s = require(name && out, "name and out must be non-null")) return s;
    return guarded([&] { *out = new modlap_stencil{modlap::Stencil::builtin(name)}; });
}

modlap_status modlap_stencil_from_file(const char* path, modlap_stencil** out) {
    if (auto s = require(path && out, "path and out must be non-null")) return s;
    return guarded([&] { *out = new modlap_stencil{modlap::Stencil::from_file(path)}; });
}

void modlap_stencil_free(modlap_stencil* stencil) { delete stencil; }

int64_t modlap_stencil_radius(const modlap_stencil* stencil) {
    return stencil ? stencil->value.radius() : 0;
}

size_t modlap_stencil_size(const modlap_stencil* stencil) {
    return stencil ? stencil->value.size() : 0;
}

modlap_status modlap_schedule_parse(const char* spec, modlap_schedule** out) {
    if (auto s = require(spec && out, "spec and out must be non-null")) return s;
    return guarded([&] { *out = new modlap_schedule{modlap::Schedule::parse(spec)}; });
}

void modlap_schedule_free(modlap_schedule* schedule) { delete schedule; }

modlap_status modlap_schedule_modulus_at(const modlap_schedule* schedule, int64_t i,
                                         int32_t* out) {
    if (auto s = require(schedule && out, "schedule and out must be non-null")) return s;
    return guarded([&] { *out = schedule->value.modulus_at(i); });
}

/* ---------------- evolution ---------------- */

modlap_status modlap_sim_new(const modlap_grid* seed, const modlap_stencil* stencil,
                             const modlap_schedule* schedule, modlap_sim** out) {
    if (auto s = require(seed && stencil && schedule && out, "all arguments must be non-null"))
        return s;
    return guarded([&] {
        *out = new modlap_sim{stencil->value, schedule->value, modlap_grid{seed->value}};
    });
}

void modlap_sim_free(modlap_sim* sim) { delete sim; }

modlap_status modlap_sim_step(modlap_sim* sim) {
    if (auto s = require(sim != nullptr, "sim must be non-null")) return s;
    return guarded([&] {
        const int64_t next = sim->current.value.iteration() + 1;
        sim->current.value =
            modlap::step(sim->current.value, sim->stencil, sim->schedule.modulus_at(next));
    });
}

const modlap_grid* modlap_sim_grid(const modlap_sim* sim) { return sim ? &sim->current : nullptr; }

int64_t modlap_sim_iteration(const modlap_sim* sim) {
    return sim ? sim->current.value.iteration() : 0;
}

modlap_status modlap_evolve(const modlap_grid* seed, const modlap_stencil* stencil,
                            const modlap_schedule* schedule, int64_t steps, modlap_grid** out) {
    if (auto s = require(seed && stencil && schedule && out, "all arguments must be non-null"))
        return s;
    return guarded([&] {
        modlap::Grid state = seed->value;
        modlap::evolve_visit(seed->value, stencil->value, schedule->value, steps,
                             [&](const modlap::Grid& g) { state = g; });
        *out = new modlap_grid{std::move(state)};
    });
}

/* ---------------- spatial analysis ---------------- */

modlap_status modlap_grid_density(const modlap_grid* grid, int frame3_mode, int32_t seed_side,
                                  int32_t radius, double* out) {
    if (auto s = require(grid && out, "grid and out must be non-null")) return s;
    return guarded([&] {
        *out = modlap::analysis::density(grid->value,
                                         to_density_mode(frame3_mode, seed_side, radius));
    });
}

modlap_status modlap_grid_components(const modlap_grid* grid, int adjacency, int64_t* out) {
    if (auto s = require(grid && out, "grid and out must be non-null")) return s;
    return guarded([&] {
        *out = modlap::analysis::connected_components(grid->value, to_adjacency(adjacency)).count;
    });
}

modlap_status modlap_grid_connectivity_distance(const modlap_grid* grid, int adjacency,
                                                int64_t* out) {
    if (auto s = require(grid && out, "grid and out must be non-null")) return s;
    return guarded([&] {
        *out = modlap::analysis::connectivity_distance(grid->value, to_adjacency(adjacency));
    });
}

modlap_status modlap_grid_box_dimension(const modlap_grid* grid, modlap_box_fit* out) {
    if (auto s = require(grid && out, "grid and out must be non-null")) return s;
    return guarded([&] {
        const auto fit = modlap::analysis::box_counting_dimension(grid->value);
        if (fit) {
            *out = modlap_box_fit{1, fit->slope, fit->intercept, fit->r_squared};
        } else {
            *out = modlap_box_fit{0, 0.0, 0.0, 0.0};
        }
    });
}

const char* modlap_metrics_csv_header(void) {
    static const std::string header{modlap::io::kMetricsCsvHeader};
    return header.c_str();
}

modlap_status modlap_grid_metrics_csv_row(const modlap_grid* grid, int adjacency, int frame3_mode,
                                          int32_t seed_side, int32_t radius, char** row) {
    if (auto s = require(grid && row, "grid and row must be non-null")) return s;
    return guarded([&] {
        const auto metrics_row = modlap::analysis::metrics_for(
            grid->value, to_adjacency(adjacency), to_density_mode(frame3_mode, seed_side, radius));
        *row = copy_string(modlap::io::metrics_csv_row(metrics_row));
    });
}

/* ---------------- fixed-cell series ---------------- */

modlap_status modlap_series_mean(const int32_t* values, size_t count, double* out) {
    if (auto s = require(out != nullptr, "out must be non-null")) return s;
    return guarded([&] {
        const auto v = to_vector(values, count);
        const auto d = modlap::signal::to_doubles(v);
        *out = modlap::signal::mean(std::span<const double>(d));
    });
}

modlap_status modlap_series_variance(const int32_t* values, size_t count, double* out) {
    if (auto s = require(out != nullptr, "out must be non-null")) return s;
    return guarded([&] {
        const auto v = to_vector(values, count);
        const auto d = modlap::signal::to_doubles(v);
        *out = modlap::signal::variance(std::span<const double>(d));
    });
}

modlap_status modlap_series_entropy(const int32_t* values, size_t count, double* out) {
    if (auto s = require(out != nullptr, "out must be non-null")) return s;
    return guarded([&] {
        const auto v = to_vector(values, count);
        *out = modlap::signal::shannon_entropy_bits(std::span<const int32_t>(v));
    });
}

modlap_status modlap_series_spectrum(const int32_t* values, size_t count, double** amplitudes,
                                     size_t* bins, modlap_spectrum_summary* summary) {
    return guarded([&] {
        const auto v = to_vector(values, count);
        const auto d = modlap::signal::to_doubles(v);
        const auto report = modlap::signal::dft_amplitude(std::span<const double>(d));
        if (amplitudes && bins) {
            char* buffer = new char[report.amplitudes.size() * sizeof(double)];
            std::memcpy(buffer, report.amplitudes.data(),
                        report.amplitudes.size() * sizeof(double));
            *amplitudes = reinterpret_cast<double*>(buffer);
            *bins = report.amplitudes.size();
        }
        if (summary)
            *summary = modlap_spectrum_summary{report.dominant_bin, report.peak_to_median,
                                               report.flatness};
    });
}

modlap_status modlap_series_autocorrelation(const int32_t* values, size_t count, size_t max_lag,
                                            double** r, size_t* lags) {
    if (auto s = require(r && lags, "r and lags must be non-null")) return s;
    return guarded([&] {
        const auto v = to_vector(values, count);
        const auto d = modlap::signal::to_doubles(v);
        const auto acf = modlap::signal::autocorrelation(std::span<const double>(d),
                                                         static_cast<int64_t>(max_lag));
        if (!acf)
            modlap::fail(modlap::ErrorCode::degenerate,
                         "autocorrelation is undefined for a constant series");
        char* buffer = new char[acf->size() * sizeof(double)];
        std::memcpy(buffer, acf->data(), acf->size() * sizeof(double));
        *r = reinterpret_cast<double*>(buffer);
        *lags = acf->size();
    });
}

/* ---------------- structural verification ---------------- */

modlap_status modlap_detect_copies(const modlap_grid* grid, const modlap_grid* seed,
                                   modlap_copy_report** out) {
    if (auto s = require(grid && seed && out, "all arguments must be non-null")) return s;
    return guarded([&] {
        *out = new modlap_copy_report{
            modlap::structure::detect_seed_copies(grid->value, seed->value)};
    });
}

void modlap_copy_report_free(modlap_copy_report* report) { delete report; }

int modlap_copy_report_matched(const modlap_copy_report* report) {
    return report && report->value.matched ? 1 : 0;
}

size_t modlap_copy_report_count(const modlap_copy_report* report) {
    return report ? report->value.offsets.size() : 0;
}

modlap_status modlap_copy_report_offset(const modlap_copy_report* report, size_t index,
                                        int64_t* dx, int64_t* dy) {
    if (auto s = require(report && dx && dy, "all arguments must be non-null")) return s;
    return guarded([&] {
        if (index >= report->value.offsets.size())
            modlap::fail(modlap::ErrorCode::range, "copy offset index out of range");
        *dx = report->value.offsets[index].x;
        *dy = report->value.offsets[index].y;
    });
}

int64_t modlap_copy_report_residue(const modlap_copy_report* report) {
    return report ? report->value.residue : 0;
}

int modlap_copy_report_gap(const modlap_copy_report* report, int64_t* gap) {
    if (!report || !report->value.gap) return 0;
    if (gap) *gap = *report->value.gap;
    return 1;
}

modlap_status modlap_sierpinski_report(const modlap_grid* seed, const modlap_stencil* stencil,
                                       int32_t k_max, modlap_sierpinski_checkpoint** checkpoints,
                                       size_t* count) {
    if (auto s = require(seed && stencil && checkpoints && count, "all arguments must be non-null"))
        return s;
    return guarded([&] {
        const auto report =
            modlap::structure::sierpinski_report(seed->value, stencil->value, k_max);
        const size_t n = report.checkpoints.size();
        char* buffer = new char[n * sizeof(modlap_sierpinski_checkpoint)];
        auto* out = reinterpret_cast<modlap_sierpinski_checkpoint*>(buffer);
        for (size_t i = 0; i < n; ++i) {
            const auto& cp = report.checkpoints[i];
            out[i] = modlap_sierpinski_checkpoint{cp.k, cp.iteration,
                                                  cp.box_dimension.has_value() ? 1 : 0,
                                                  cp.box_dimension.value_or(0.0),
                                                  cp.d4_symmetric ? 1 : 0};
        }
        *checkpoints = out;
        *count = n;
    });
}

modlap_status modlap_verify_proposition(int32_t k_max, int32_t threads, int32_t* failures,
                                        char** report) {
    if (auto s = require(failures != nullptr, "failures must be non-null")) return s;
    return guarded([&] {
        const auto results = modlap::structure::proposition_sweep(k_max, threads);
        int32_t failed = 0;
        std::ostringstream text;
        for (const auto& result : results) {
            if (result.pass) continue;
            ++failed;
            text << "seed mask " << result.mask << ": " << result.failure << '\n';
        }
        std::ostringstream head;
        head << "proposition sweep: " << (results.size() - static_cast<size_t>(failed)) << '/'
             << results.size() << " seeds dissociate cleanly through iteration " << 8 * k_max
             << '\n';
        *failures = failed;
        if (report) *report = copy_string(head.str() + text.str());
    });
}

modlap_status modlap_verify_blocks(const modlap_grid* seed, int32_t* failures, char** report) {
    if (auto s = require(seed && failures, "seed and failures must be non-null")) return s;
    return guarded([&] {
        const auto entries = modlap::structure::block_trace(seed->value);
        int32_t failed = 0;
        std::ostringstream text;
        for (const auto& entry : entries) {
            if (!entry.passed) ++failed;
            text << entry.name << ": " << (entry.passed ? "pass" : "FAIL") << " (" << entry.detail
                 << ")\n";
        }
        *failures = failed;
        if (report) *report = copy_string(text.str());
    });
}

/* ---------------- schedule comparison ---------------- */

modlap_status modlap_style_report(const modlap_grid* seed, const modlap_stencil* stencil,
                                  const char* schedule_spec, int64_t steps, int64_t cell_x,
                                  int64_t cell_y, modlap_style_summary* out) {
    if (auto s = require(seed && stencil && schedule_spec && out,
                         "all arguments must be non-null"))
        return s;
    return guarded([&] {
        const auto report = modlap::signal::style_report(
            seed->value, stencil->value, modlap::Schedule::parse(schedule_spec), steps,
            modlap::Point{cell_x, cell_y});
        *out = modlap_style_summary{report.mean,
                                    report.variance,
                                    report.entropy_bits,
                                    report.spectrum.dominant_bin,
                                    report.spectrum.peak_to_median,
                                    report.spectrum.flatness,
                                    report.final_box_dimension.has_value() ? 1 : 0,
                                    report.final_box_dimension.value_or(0.0),
                                    report.final_iteration};
    });
}

} /* extern "C" */
