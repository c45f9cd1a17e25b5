// modlap command-line front end. Everything here goes through the public C
// API in modlap.h; the shared library owns all simulation and analysis logic.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <modlap.h>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void die(modlap_status status) {
    const int code = status == MODLAP_ERR_IO ? kExitIo : kExitUsage;
    throw CliError{code, modlap_last_error()};
}

void check(modlap_status status) {
    if (status != MODLAP_OK) die(status);
}

using GridPtr = std::unique_ptr<modlap_grid, decltype(&modlap_grid_free)>;
using StencilPtr = std::unique_ptr<modlap_stencil, decltype(&modlap_stencil_free)>;
using SchedulePtr = std::unique_ptr<modlap_schedule, decltype(&modlap_schedule_free)>;
using SimPtr = std::unique_ptr<modlap_sim, decltype(&modlap_sim_free)>;

GridPtr load_seed(const std::string& pattern, const std::string& file) {
    if (!pattern.empty() && !file.empty())
        throw CliError{kExitUsage, "--seed and --seed-file are mutually exclusive"};
    modlap_grid* grid = nullptr;
    if (!file.empty()) {
        check(modlap_grid_read_snapshot(file.c_str(), &grid));
    } else {
        const std::string rows = pattern.empty() ? "1" : pattern;
        check(modlap_grid_from_pattern(rows.c_str(), &grid));
    }
    return GridPtr(grid, modlap_grid_free);
}

StencilPtr load_stencil(const std::string& name, const std::string& file) {
    if (!file.empty() && name != "diag")
        throw CliError{kExitUsage, "--nbhd and --nbhd-file are mutually exclusive"};
    modlap_stencil* stencil = nullptr;
    if (!file.empty()) {
        check(modlap_stencil_from_file(file.c_str(), &stencil));
    } else {
        check(modlap_stencil_builtin(name.c_str(), &stencil));
    }
    return StencilPtr(stencil, modlap_stencil_free);
}

SchedulePtr load_schedule(const std::string& spec) {
    modlap_schedule* schedule = nullptr;
    check(modlap_schedule_parse(spec.c_str(), &schedule));
    return SchedulePtr(schedule, modlap_schedule_free);
}

std::pair<int64_t, int64_t> parse_cell(const std::string& text) {
    int64_t x = 0, y = 0;
    if (std::sscanf(text.c_str(), "%" SCNd64 ",%" SCNd64, &x, &y) != 2)
        throw CliError{kExitUsage, "--cell expects 'x,y'"};
    return {x, y};
}

std::vector<int64_t> parse_iteration_list(const std::string& text) {
    std::vector<int64_t> out;
    std::string item;
    for (size_t pos = 0; pos <= text.size(); ++pos) {
        if (pos == text.size() || text[pos] == ',') {
            if (!item.empty()) {
                try {
                    out.push_back(std::stoll(item));
                } catch (const std::exception&) {
                    throw CliError{kExitUsage, "--snap-at expects comma-separated iterations"};
                }
                item.clear();
            }
        } else {
            item += text[pos];
        }
    }
    return out;
}

FILE* open_or_die(const std::string& path, const char* what) {
    FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw CliError{kExitIo, std::string("cannot open ") + what + ": " + path};
    return f;
}

std::string padded_iteration(int64_t i) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%06" PRId64, i);
    return buffer;
}

// ---------------- run ----------------

struct RunOptions {
    std::string seed;
    std::string seed_file;
    std::string nbhd = "diag";
    std::string nbhd_file;
    std::string sched = "2222";
    int64_t steps = 8;
    std::string snapshot_dir;
    std::string snap_at;
    int64_t snap_every = 0;
    std::string metrics_path;
    std::string render_format;
    std::string render_dir;
    int32_t scale = 1;
    int32_t adjacency = 8;
    std::string density = "frame3";
    int32_t seed_side = 0;
    int32_t radius = 0;
};

int cmd_run(const RunOptions& opt) {
    GridPtr seed = load_seed(opt.seed, opt.seed_file);
    StencilPtr stencil = load_stencil(opt.nbhd, opt.nbhd_file);
    SchedulePtr schedule = load_schedule(opt.sched);
    if (opt.steps < 0) throw CliError{kExitUsage, "--steps must be non-negative"};
    if (opt.adjacency != 4 && opt.adjacency != 8)
        throw CliError{kExitUsage, "--adjacency must be 4 or 8"};
    if (opt.density != "frame3" && opt.density != "general")
        throw CliError{kExitUsage, "--density must be frame3 or general"};

    const int frame3_mode = opt.density == "frame3" ? 1 : 0;
    int32_t seed_side = opt.seed_side;
    if (seed_side <= 0)
        seed_side = static_cast<int32_t>(
            std::max(modlap_grid_width(seed.get()), modlap_grid_height(seed.get())));
    int32_t radius = opt.radius;
    if (radius <= 0) radius = static_cast<int32_t>(modlap_stencil_radius(stencil.get()));

    std::vector<int64_t> snap_iterations = parse_iteration_list(opt.snap_at);
    auto wants_output = [&](int64_t i) {
        if (snap_iterations.empty() && opt.snap_every == 0)
            return i == opt.steps;  // default: final state only
        for (int64_t want : snap_iterations)
            if (want == i) return true;
        return opt.snap_every > 0 && i % opt.snap_every == 0;
    };

    if (!opt.snapshot_dir.empty()) std::filesystem::create_directories(opt.snapshot_dir);
    if (!opt.render_dir.empty()) std::filesystem::create_directories(opt.render_dir);

    FILE* metrics = nullptr;
    if (!opt.metrics_path.empty()) {
        metrics = open_or_die(opt.metrics_path, "metrics CSV");
        std::fprintf(metrics, "%s\n", modlap_metrics_csv_header());
    }

    SimPtr sim(nullptr, modlap_sim_free);
    {
        modlap_sim* raw = nullptr;
        check(modlap_sim_new(seed.get(), stencil.get(), schedule.get(), &raw));
        sim.reset(raw);
    }

    for (int64_t i = 0; i <= opt.steps; ++i) {
        if (i > 0) check(modlap_sim_step(sim.get()));
        const modlap_grid* state = modlap_sim_grid(sim.get());

        if (metrics) {
            char* row = nullptr;
            check(modlap_grid_metrics_csv_row(state, opt.adjacency, frame3_mode, seed_side, radius,
                                              &row));
            std::fprintf(metrics, "%s\n", row);
            modlap_string_free(row);
        }
        if (!opt.snapshot_dir.empty() && wants_output(i)) {
            const std::string path =
                (std::filesystem::path(opt.snapshot_dir) / ("state_" + padded_iteration(i) + ".snap"))
                    .string();
            check(modlap_grid_write_snapshot(state, path.c_str()));
        }
        if (!opt.render_dir.empty() && wants_output(i)) {
            const std::string format = opt.render_format.empty() ? "pgm" : opt.render_format;
            const std::string path =
                (std::filesystem::path(opt.render_dir) / ("state_" + padded_iteration(i) + "." + format))
                    .string();
            check(modlap_grid_render_to_file(state, format.c_str(), opt.scale, path.c_str()));
        }
    }

    if (metrics) std::fclose(metrics);

    const modlap_grid* final_state = modlap_sim_grid(sim.get());
    std::printf("ran %s for %" PRId64 " steps: %" PRId64 " occupied cells, %" PRId64 "x%" PRId64
                " array\n",
                opt.sched.c_str(), opt.steps, modlap_grid_occupied(final_state),
                modlap_grid_width(final_state), modlap_grid_height(final_state));
    return kExitOk;
}

// ---------------- series ----------------

struct SeriesOptions {
    std::string seed;
    std::string seed_file;
    std::string nbhd = "diag";
    std::string nbhd_file;
    std::string sched = "2322";
    int64_t steps = 500;
    std::string cell = "0,0";
    std::string out_dir = ".";
    int64_t max_lag = -1;
};

int cmd_series(const SeriesOptions& opt) {
    GridPtr seed = load_seed(opt.seed, opt.seed_file);
    StencilPtr stencil = load_stencil(opt.nbhd, opt.nbhd_file);
    SchedulePtr schedule = load_schedule(opt.sched);
    if (opt.steps < 3) throw CliError{kExitUsage, "--steps must be at least 3 for spectra"};
    const auto [cx, cy] = parse_cell(opt.cell);

    std::vector<int32_t> values;
    values.reserve(static_cast<size_t>(opt.steps) + 1);
    {
        SimPtr sim(nullptr, modlap_sim_free);
        modlap_sim* raw = nullptr;
        check(modlap_sim_new(seed.get(), stencil.get(), schedule.get(), &raw));
        sim.reset(raw);
        values.push_back(modlap_grid_cell(modlap_sim_grid(sim.get()), cx, cy));
        for (int64_t i = 1; i <= opt.steps; ++i) {
            check(modlap_sim_step(sim.get()));
            values.push_back(modlap_grid_cell(modlap_sim_grid(sim.get()), cx, cy));
        }
    }

    std::filesystem::create_directories(opt.out_dir);
    const std::filesystem::path dir(opt.out_dir);

    {
        FILE* f = open_or_die((dir / "series.csv").string(), "series CSV");
        std::fprintf(f, "iteration,value\n");
        for (size_t i = 0; i < values.size(); ++i)
            std::fprintf(f, "%zu,%d\n", i, values[i]);
        std::fclose(f);
    }

    double mean = 0.0, variance = 0.0, entropy = 0.0;
    check(modlap_series_mean(values.data(), values.size(), &mean));
    check(modlap_series_variance(values.data(), values.size(), &variance));
    check(modlap_series_entropy(values.data(), values.size(), &entropy));

    double* amplitudes = nullptr;
    size_t bins = 0;
    modlap_spectrum_summary summary;
    check(modlap_series_spectrum(values.data(), values.size(), &amplitudes, &bins, &summary));
    {
        FILE* f = open_or_die((dir / "spectrum.csv").string(), "spectrum CSV");
        std::fprintf(f, "bin,amplitude\n");
        for (size_t k = 0; k < bins; ++k) std::fprintf(f, "%zu,%.12g\n", k, amplitudes[k]);
        std::fclose(f);
    }
    modlap_buffer_free(amplitudes);

    {
        FILE* f = open_or_die((dir / "stats.csv").string(), "stats CSV");
        std::fprintf(f,
                     "length,mean,variance,entropy_bits,dominant_bin,peak_to_median,flatness\n");
        std::fprintf(f, "%zu,%.12g,%.12g,%.12g,%" PRId64 ",%.12g,%.12g\n", values.size(), mean,
                     variance, entropy, summary.dominant_bin, summary.peak_to_median,
                     summary.flatness);
        std::fclose(f);
    }

    const size_t max_lag =
        opt.max_lag < 0 ? values.size() / 2 : static_cast<size_t>(opt.max_lag);
    double* acf = nullptr;
    size_t lags = 0;
    const modlap_status acf_status =
        modlap_series_autocorrelation(values.data(), values.size(), max_lag, &acf, &lags);
    if (acf_status == MODLAP_OK) {
        FILE* f = open_or_die((dir / "acf.csv").string(), "autocorrelation CSV");
        std::fprintf(f, "lag,r\n");
        for (size_t k = 0; k < lags; ++k) std::fprintf(f, "%zu,%.12g\n", k, acf[k]);
        std::fclose(f);
        modlap_buffer_free(acf);
    } else if (acf_status == MODLAP_ERR_DEGENERATE) {
        std::fprintf(stderr, "note: constant series, autocorrelation undefined; acf.csv skipped\n");
    } else {
        die(acf_status);
    }

    std::printf("series of %zu values at (%" PRId64 ",%" PRId64
                "): mean %.6g, variance %.6g, entropy %.6g bits\n",
                values.size(), cx, cy, mean, variance, entropy);
    return kExitOk;
}

// ---------------- verify ----------------

struct VerifyOptions {
    bool proposition = false;
    bool blocks = false;
    bool sierpinski = false;
    int32_t kmax = 2;
    int32_t sierp_kmax = 6;
    int32_t threads = 0;
};

int cmd_verify(const VerifyOptions& opt) {
    const bool run_all = !opt.proposition && !opt.blocks && !opt.sierpinski;
    bool all_ok = true;

    if (opt.proposition || run_all) {
        int32_t failures = 0;
        char* report = nullptr;
        check(modlap_verify_proposition(opt.kmax, opt.threads, &failures, &report));
        std::fputs(report, stdout);
        modlap_string_free(report);
        std::printf("[%s] proposition sweep (k_max=%d)\n", failures == 0 ? "PASS" : "FAIL",
                    opt.kmax);
        all_ok = all_ok && failures == 0;
    }

    if (opt.blocks || run_all) {
        const char* seeds[] = {"111/111/111", "101/010/101", "100/000/000"};
        for (const char* pattern : seeds) {
            modlap_grid* seed = nullptr;
            check(modlap_grid_from_pattern(pattern, &seed));
            GridPtr guard(seed, modlap_grid_free);
            int32_t failures = 0;
            char* report = nullptr;
            check(modlap_verify_blocks(seed, &failures, &report));
            std::printf("block trace for %s:\n%s", pattern, report);
            modlap_string_free(report);
            std::printf("[%s] block trace %s\n", failures == 0 ? "PASS" : "FAIL", pattern);
            all_ok = all_ok && failures == 0;
        }
    }

    if (opt.sierpinski || run_all) {
        GridPtr point = load_seed("1", "");
        StencilPtr diag = load_stencil("diag", "");
        modlap_sierpinski_checkpoint* checkpoints = nullptr;
        size_t count = 0;
        check(modlap_sierpinski_report(point.get(), diag.get(), opt.sierp_kmax, &checkpoints,
                                       &count));
        bool symmetry_ok = true;
        bool band_ok = false;
        bool band_applicable = false;
        for (size_t i = 0; i < count; ++i) {
            const auto& cp = checkpoints[i];
            std::printf("checkpoint k=%d i=%" PRId64 ": dimension %s, %s\n", cp.k, cp.iteration,
                        cp.has_dimension ? std::to_string(cp.dimension).c_str() : "n/a",
                        cp.d4_symmetric ? "D4-symmetric" : "asymmetric");
            symmetry_ok = symmetry_ok && cp.d4_symmetric;
            if (cp.iteration == 63 || cp.iteration == 127) {
                band_applicable = true;
                if (cp.has_dimension && cp.dimension >= 1.4 && cp.dimension <= 1.7)
                    band_ok = true;
            }
        }
        modlap_buffer_free(checkpoints);
        std::printf("[%s] checkpoint symmetry\n", symmetry_ok ? "PASS" : "FAIL");
        all_ok = all_ok && symmetry_ok;
        if (band_applicable) {
            std::printf("[%s] dimension band [1.4, 1.7] at iteration 63 or 127\n",
                        band_ok ? "PASS" : "FAIL");
            all_ok = all_ok && band_ok;
        }
    }

    return all_ok ? kExitOk : kExitVerifyFailed;
}

// ---------------- sweep ----------------

struct SweepOptions {
    std::string seed = "1";
    std::string seed_file;
    std::string nbhd = "diag";
    std::string nbhd_file;
    std::string n_list = "2,3,5,7,9";
    int64_t steps = 500;
    std::string cell = "0,0";
    std::string out;
};

int cmd_sweep(const SweepOptions& opt) {
    GridPtr seed = load_seed(opt.seed, opt.seed_file);
    StencilPtr stencil = load_stencil(opt.nbhd, opt.nbhd_file);
    const auto [cx, cy] = parse_cell(opt.cell);
    if (opt.steps < 100) throw CliError{kExitUsage, "--steps must be at least 100"};

    std::vector<int64_t> ns = parse_iteration_list(opt.n_list);
    if (ns.empty()) throw CliError{kExitUsage, "--n-list selects no schedules"};

    FILE* out = stdout;
    if (!opt.out.empty()) out = open_or_die(opt.out, "sweep CSV");
    std::fprintf(out,
                 "schedule,n,mean,variance,entropy_bits,dominant_bin,peak_to_median,flatness,"
                 "final_box_dimension\n");

    for (int64_t n : ns) {
        if (n < 2 || n > 9) throw CliError{kExitUsage, "--n-list entries must be in [2, 9]"};
        const std::string spec = "2" + std::to_string(n) + "22";
        modlap_style_summary summary;
        check(modlap_style_report(seed.get(), stencil.get(), spec.c_str(), opt.steps, cx, cy,
                                  &summary));
        std::fprintf(out, "%s,%" PRId64 ",%.12g,%.12g,%.12g,%" PRId64 ",%.12g,%.12g,", spec.c_str(),
                     n, summary.mean, summary.variance, summary.entropy_bits, summary.dominant_bin,
                     summary.peak_to_median, summary.flatness);
        if (summary.has_box_dimension)
            std::fprintf(out, "%.12g\n", summary.box_dimension);
        else
            std::fprintf(out, "\n");
    }
    if (out != stdout) std::fclose(out);
    return kExitOk;
}

// ---------------- render ----------------

struct RenderOptions {
    std::string input;
    std::string format = "pgm";
    std::string output;
    int32_t scale = 1;
};

int cmd_render(const RenderOptions& opt) {
    modlap_grid* grid = nullptr;
    check(modlap_grid_read_snapshot(opt.input.c_str(), &grid));
    GridPtr guard(grid, modlap_grid_free);
    if (opt.output.empty()) {
        if (opt.format != "ascii")
            throw CliError{kExitUsage, "--out is required for binary formats"};
        uint8_t* data = nullptr;
        size_t size = 0;
        check(modlap_grid_render(grid, "ascii", opt.scale, &data, &size));
        std::fwrite(data, 1, size, stdout);
        modlap_buffer_free(data);
    } else {
        check(modlap_grid_render_to_file(grid, opt.format.c_str(), opt.scale, opt.output.c_str()));
    }
    return kExitOk;
}

void add_seed_options(CLI::App* cmd, std::string& seed, std::string& seed_file, std::string& nbhd,
                      std::string& nbhd_file) {
    cmd->add_option("--seed", seed, "Seed pattern as digit rows, e.g. 101/010/101");
    cmd->add_option("--seed-file", seed_file, "Seed from a snapshot file");
    cmd->add_option("--nbhd", nbhd, "Neighborhood: von-neumann, diag or moore");
    cmd->add_option("--nbhd-file", nbhd_file, "Neighborhood from a 0/1 mask file");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"modlap: modular Laplacian dynamics on 2D lattices"};
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "Evolve a seed and emit snapshots/metrics/renders");
    run->set_config("--config", "", "KEY=VALUE config file (flags override file)");
    add_seed_options(run, run_opt.seed, run_opt.seed_file, run_opt.nbhd, run_opt.nbhd_file);
    run->add_option("--sched", run_opt.sched, "Schedule spec (2222, 2322, 2n22:5, const:3, ...)");
    run->add_option("--steps", run_opt.steps, "Number of evolution steps");
    run->add_option("--snapshot-dir", run_opt.snapshot_dir, "Directory for snapshot files");
    run->add_option("--snap-at", run_opt.snap_at, "Comma-separated iterations to snapshot");
    run->add_option("--snap-every", run_opt.snap_every, "Snapshot every N iterations");
    run->add_option("--metrics", run_opt.metrics_path, "Write per-iteration metrics CSV here");
    run->add_option("--render-format", run_opt.render_format, "ascii, pgm or ppm");
    run->add_option("--render-dir", run_opt.render_dir, "Directory for rendered images");
    run->add_option("--scale", run_opt.scale, "Pixels per cell for renders");
    run->add_option("--adjacency", run_opt.adjacency, "Component adjacency: 4 or 8");
    run->add_option("--density", run_opt.density, "Density denominator: frame3 or general");
    run->add_option("--seed-side", run_opt.seed_side, "Seed side for general density");
    run->add_option("--radius", run_opt.radius, "Radius for general density");

    SeriesOptions series_opt;
    CLI::App* series = app.add_subcommand("series", "Fixed-cell series with statistics and spectra");
    series->set_config("--config", "", "KEY=VALUE config file (flags override file)");
    add_seed_options(series, series_opt.seed, series_opt.seed_file, series_opt.nbhd,
                     series_opt.nbhd_file);
    series->add_option("--sched", series_opt.sched, "Schedule spec");
    series->add_option("--steps", series_opt.steps, "Number of evolution steps");
    series->add_option("--cell", series_opt.cell, "Lattice cell to sample, as x,y");
    series->add_option("--out-dir", series_opt.out_dir, "Directory for the CSV outputs");
    series->add_option("--max-lag", series_opt.max_lag, "Autocorrelation lag bound");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "Machine-check the structural properties");
    verify->add_flag("--proposition", verify_opt.proposition, "Exhaustive 3x3 dissociation sweep");
    verify->add_flag("--blocks", verify_opt.blocks, "Block-structure trace of F1..F4");
    verify->add_flag("--sierpinski", verify_opt.sierpinski, "Doubling-checkpoint report");
    verify->add_option("--kmax", verify_opt.kmax, "Check dissociation through iteration 8*kmax");
    verify->add_option("--sierp-kmax", verify_opt.sierp_kmax, "Checkpoint count (k = 0..kmax)");
    verify->add_option("--threads", verify_opt.threads, "Worker threads (0 = auto)");

    SweepOptions sweep_opt;
    CLI::App* sweep = app.add_subcommand("sweep", "Compare 2n22 schedules side by side");
    sweep->set_config("--config", "", "KEY=VALUE config file (flags override file)");
    add_seed_options(sweep, sweep_opt.seed, sweep_opt.seed_file, sweep_opt.nbhd,
                     sweep_opt.nbhd_file);
    sweep->add_option("--n-list", sweep_opt.n_list, "Comma-separated n values");
    sweep->add_option("--steps", sweep_opt.steps, "Steps per schedule (>= 100)");
    sweep->add_option("--cell", sweep_opt.cell, "Lattice cell to sample, as x,y");
    sweep->add_option("--out", sweep_opt.out, "Summary CSV path (default stdout)");

    RenderOptions render_opt;
    CLI::App* render = app.add_subcommand("render", "Convert a snapshot to an image");
    render->add_option("--in", render_opt.input, "Snapshot file")->required();
    render->add_option("--format", render_opt.format, "ascii, pgm or ppm");
    render->add_option("--out", render_opt.output, "Output path (stdout for ascii)");
    render->add_option("--scale", render_opt.scale, "Pixels per cell");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) return cmd_run(run_opt);
        if (series->parsed()) return cmd_series(series_opt);
        if (verify->parsed()) return cmd_verify(verify_opt);
        if (sweep->parsed()) return cmd_sweep(sweep_opt);
        if (render->parsed()) return cmd_render(render_opt);
    } catch (const CliError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return e.exit_code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
