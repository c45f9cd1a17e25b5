// Acceptance suite: one check per structural or statistical claim the project
// commits to, each printed as a single PASS/FAIL line with the measured
// values. Exits nonzero if any check fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "analysis/metrics.hpp"
#include "core/evolve.hpp"
#include "core/grid.hpp"
#include "io/csv.hpp"
#include "io/snapshot.hpp"
#include "signal/compare.hpp"
#include "signal/series.hpp"
#include "structure/verify.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace modlap;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int g_failures = 0;

void report(int index, const std::string& name, const Outcome& outcome) {
    std::printf("[%s] criterion %d: %s%s%s\n", outcome.pass ? "PASS" : "FAIL", index, name.c_str(),
                outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++g_failures;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// ---- 1 & 2: exhaustive dissociation sweep --------------------------------

std::vector<structure::PropositionResult> g_sweep;

Outcome criterion_proposition_at_8() {
    g_sweep = structure::proposition_sweep(2, 0);
    Outcome out;
    int failing = 0;
    for (const auto& result : g_sweep)
        if (!result.pass) {
            ++failing;
            if (out.detail.empty())
                out.detail = "first failure: mask " + std::to_string(result.mask) + " (" +
                             result.failure + ")";
        }
    out.pass = failing == 0;
    if (out.pass)
        out.detail = "511/511 seeds: 4 copies at offsets {(0,0),(16,0),(0,16),(16,16)}, gap 13, "
                     "density <= 36/361";
    return out;
}

Outcome criterion_repetition_at_16() {
    Outcome out;
    int failing = 0;
    for (const auto& result : g_sweep) {
        const bool ok = result.reports.size() >= 2 && result.reports[1].matched;
        if (!ok) {
            ++failing;
            if (out.detail.empty()) out.detail = "mask " + std::to_string(result.mask);
        }
    }
    out.pass = failing == 0;
    if (out.pass) out.detail = "511/511 seeds matched at iteration 16";
    return out;
}

// ---- 3: early-iteration block trace ----------------------------------------------

Outcome criterion_block_trace() {
    Outcome out;
    for (const char* pattern : {"111/111/111", "101/010/101", "100/000/000"}) {
        const auto entries = structure::block_trace(Grid::from_pattern_string(pattern));
        for (const auto& entry : entries) {
            if ((entry.name == "F2" || entry.name == "F4") && !entry.passed) {
                out.pass = false;
                out.detail += std::string(pattern) + " " + entry.name + " failed (" +
                              entry.detail + "); ";
            }
        }
    }
    if (out.pass) out.detail = "F2 spacing 4 and F4 spacing 8 for all three seeds";
    return out;
}

// ---- 4: density minima ----------------------------------------------------

Outcome criterion_density_minima() {
    const Grid seed = Grid::from_pattern({"1"});
    const auto mode = analysis::DensityMode::frame3_mode();

    std::vector<double> binary, ternary;
    evolve_visit(seed, Stencil::diag(), Schedule::constant(2), 25,
                 [&](const Grid& g) { binary.push_back(analysis::density(g, mode)); });
    evolve_visit(seed, Stencil::diag(), Schedule::two_n_two_two(3), 25,
                 [&](const Grid& g) { ternary.push_back(analysis::density(g, mode)); });

    Outcome out;
    std::ostringstream detail;
    for (int k = 1; k <= 3; ++k) {
        const size_t i = static_cast<size_t>(8 * k);
        const bool dip = binary[i] < binary[i - 1] && binary[i] < binary[i + 1];
        if (!dip) {
            out.pass = false;
            detail << "2222 lacks the dip at i=" << i << "; ";
        }
        const bool ternary_dip = ternary[i] < ternary[i - 1] && ternary[i] < ternary[i + 1];
        if (ternary_dip) {
            out.pass = false;
            detail << "2322 dips at i=" << i << " (rho " << io::format_double(ternary[i - 1])
                   << " -> " << io::format_double(ternary[i]) << " -> "
                   << io::format_double(ternary[i + 1]) << "); ";
        }
    }
    if (out.pass)
        detail << "2222 dips at 8,16,24 and 2322 does not";
    out.detail = detail.str();
    return out;
}

// ---- 5: doubling-checkpoint dimensions ------------------------------------

Outcome criterion_sierpinski_band() {
    const Grid seed = Grid::from_pattern({"1"});
    const auto report = structure::sierpinski_report(seed, Stencil::diag(), 6);

    Outcome out;
    std::ostringstream detail;
    bool symmetry_ok = true;
    for (const auto& cp : report.checkpoints) symmetry_ok = symmetry_ok && cp.d4_symmetric;
    if (!symmetry_ok) {
        out.pass = false;
        detail << "a checkpoint lost D4 symmetry; ";
    }

    bool band_ok = false;
    for (const auto& cp : report.checkpoints) {
        if (cp.iteration != 63 && cp.iteration != 127) continue;
        detail << "dim(i=" << cp.iteration << ") = "
               << (cp.box_dimension ? io::format_double(*cp.box_dimension) : "n/a") << "; ";
        if (cp.box_dimension && *cp.box_dimension >= 1.4 && *cp.box_dimension <= 1.7)
            band_ok = true;
    }
    if (!band_ok) {
        out.pass = false;
        detail << "no dimension in [1.4, 1.7] at iteration 63 or 127";
    } else {
        detail << "dimension band [1.4, 1.7] met; D4 symmetry at all checkpoints";
    }
    out.detail = detail.str();
    return out;
}

// ---- 6 & 7: schedule comparison at the origin cell -------------------------

signal::StyleComparison* g_comparison = nullptr;

Outcome criterion_table_orderings() {
    static signal::StyleComparison comparison =
        signal::compare_styles(Grid::from_pattern({"1"}), Stencil::diag(), 500, {0, 0});
    g_comparison = &comparison;

    const auto& b = comparison.binary;
    const auto& t = comparison.ternary;
    Outcome out;
    std::ostringstream detail;
    detail << "entropy " << io::format_double(t.entropy_bits) << " vs "
           << io::format_double(b.entropy_bits) << ", variance " << io::format_double(t.variance)
           << " vs " << io::format_double(b.variance);
    if (!(t.entropy_bits > b.entropy_bits)) {
        out.pass = false;
        detail << " [entropy ordering violated]";
    }
    if (!(t.variance > b.variance)) {
        out.pass = false;
        detail << " [variance ordering violated]";
    }
    if (!t.final_box_dimension || !b.final_box_dimension) {
        out.pass = false;
        detail << " [missing box dimension]";
    } else {
        detail << ", box dim " << io::format_double(*t.final_box_dimension) << " vs "
               << io::format_double(*b.final_box_dimension);
        if (!(*t.final_box_dimension > *b.final_box_dimension)) {
            out.pass = false;
            detail << " [dimension ordering violated]";
        }
    }
    out.detail = detail.str();
    return out;
}

Outcome criterion_spectral_contrast() {
    const auto& b = g_comparison->binary;
    const auto& t = g_comparison->ternary;
    Outcome out;
    std::ostringstream detail;
    detail << "peak/median " << io::format_double(b.spectrum.peak_to_median) << " (2222) vs "
           << io::format_double(t.spectrum.peak_to_median) << " (2322), flatness "
           << io::format_double(t.spectrum.flatness) << " (2322) vs "
           << io::format_double(b.spectrum.flatness) << " (2222)";
    if (!(b.spectrum.peak_to_median > t.spectrum.peak_to_median)) {
        out.pass = false;
        detail << " [peak contrast violated]";
    }
    if (!(t.spectrum.flatness > b.spectrum.flatness)) {
        out.pass = false;
        detail << " [flatness contrast violated]";
    }
    out.detail = detail.str();
    return out;
}

// ---- 8: property suites ----------------------------------------------------

Grid mod_sum(const Grid& a, const Grid& b, int32_t n) {
    const Box box{{std::min(a.array_box().min.x, b.array_box().min.x),
                   std::min(a.array_box().min.y, b.array_box().min.y)},
                  {std::max(a.array_box().max.x, b.array_box().max.x),
                   std::max(a.array_box().max.y, b.array_box().max.y)}};
    GridBuilder builder(box.width(), box.height(), {-box.min.x, -box.min.y});
    for (int64_t y = box.min.y; y <= box.max.y; ++y)
        for (int64_t x = box.min.x; x <= box.max.x; ++x)
            builder.set(x - box.min.x, y - box.min.y, (a.at({x, y}) + b.at({x, y})) % n);
    return builder.finish(a.iteration(), n);
}

Outcome criterion_property_suites() {
    Outcome out;
    std::ostringstream detail;
    std::mt19937 rng(46710);

    // mod-2 superposition on 200 random pairs
    int superposition_failures = 0;
    for (int round = 0; round < 200; ++round) {
        const Grid a = Grid::from_pattern(testutil::random_pattern(rng, 5, 5));
        const Grid b = Grid::from_pattern(testutil::random_pattern(rng, 5, 5));
        const int64_t steps = 1 + static_cast<int64_t>(rng() % 16);
        const Stencil stencil = round % 2 ? Stencil::diag() : Stencil::von_neumann();
        Grid ea = a, eb = b, es = mod_sum(a, b, 2);
        for (int64_t i = 0; i < steps; ++i) {
            ea = step(ea, stencil, 2);
            eb = step(eb, stencil, 2);
            es = step(es, stencil, 2);
        }
        if (!es.same_cells(mod_sum(ea, eb, 2))) ++superposition_failures;
    }
    if (superposition_failures) {
        out.pass = false;
        detail << superposition_failures << " superposition failures; ";
    }

    // symmetry preservation
    for (const char* pattern : {"1", "111/111/111"})
        for (int s = 0; s < 3 && out.pass; ++s) {
            const Stencil stencil = s == 0   ? Stencil::von_neumann()
                                    : s == 1 ? Stencil::diag()
                                             : Stencil::moore();
            Grid state = Grid::from_pattern_string(pattern);
            for (int i = 0; i < 10; ++i) {
                state = step(state, stencil, i % 4 == 1 ? 3 : 2);
                if (!state.d4_symmetric()) {
                    out.pass = false;
                    detail << "symmetry lost for " << pattern << "; ";
                    break;
                }
            }
        }

    // support dilation and translation equivariance
    for (int round = 0; round < 30; ++round) {
        const auto rows = testutil::random_pattern(rng, 4, 4, 2);
        const Grid seed = Grid::from_pattern(rows);
        const Stencil stencil = round % 2 ? Stencil::moore() : Stencil::diag();
        const Trajectory traj = evolve(seed, stencil, Schedule::two_n_two_two(3), 5);
        for (int64_t i = 0; i < 5; ++i) {
            const auto before = traj.at(i).support();
            const auto after = traj.at(i + 1).support();
            if (after && (!before || !before->dilated(stencil.radius()).contains(*after))) {
                out.pass = false;
                detail << "support dilation violated; ";
            }
        }
        const Trajectory moved =
            evolve(seed.translated(7, -3), stencil, Schedule::two_n_two_two(3), 5);
        if (!moved.at(5).same_cells(traj.at(5).translated(7, -3))) {
            out.pass = false;
            detail << "translation equivariance violated; ";
        }
    }

    // autocorrelation bounds and entropy bounds on random series
    for (int round = 0; round < 40; ++round) {
        const int32_t alphabet = 2 + static_cast<int32_t>(rng() % 6);
        std::vector<int32_t> values(64 + rng() % 128);
        for (auto& v : values) v = static_cast<int32_t>(rng() % alphabet);
        const double h = signal::shannon_entropy_bits(std::span<const int32_t>(values));
        if (h < 0.0 || h > std::log2(static_cast<double>(alphabet)) + 1e-12) {
            out.pass = false;
            detail << "entropy bound violated; ";
        }
        const auto doubles = signal::to_doubles(values);
        const auto acf = signal::autocorrelation(std::span<const double>(doubles));
        if (acf)
            for (double r : *acf)
                if (std::abs(r) > 1.0 + 1e-12) {
                    out.pass = false;
                    detail << "autocorrelation bound violated; ";
                    break;
                }
    }

    // transform vs direct-summation oracle, plus Parseval
    for (const size_t n : {8, 100, 501, 1024}) {
        std::vector<double> values(n);
        for (auto& v : values) v = static_cast<double>(rng() % 4);
        const double m = signal::mean(std::span<const double>(values));
        std::vector<double> centered = values;
        for (auto& v : centered) v -= m;
        const auto oracle_bins = oracle::direct_dft(centered);
        const auto report = signal::dft_amplitude(std::span<const double>(values));

        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        double peak = 0.0;
        for (const auto& bin : oracle_bins) peak = std::max(peak, std::abs(bin) * scale);
        for (size_t k = 0; k <= n / 2; ++k) {
            const double expected = std::abs(oracle_bins[k]) * scale;
            if (std::abs(report.amplitudes[k] - expected) > 1e-9 * std::max(1.0, peak)) {
                out.pass = false;
                detail << "transform deviates from the oracle at n=" << n << "; ";
                break;
            }
        }

        double energy = 0.0;
        for (const auto& bin : oracle_bins) energy += std::norm(bin);
        energy /= static_cast<double>(n);
        const double expected_energy =
            static_cast<double>(n) * signal::variance(std::span<const double>(values));
        if (std::abs(energy - expected_energy) > 1e-6 * std::max(1.0, expected_energy)) {
            out.pass = false;
            detail << "Parseval violated at n=" << n << "; ";
        }
    }

    if (out.pass)
        out.detail = "superposition (200 pairs), symmetry, dilation, translation, bounds, "
                     "Parseval, transform oracle";
    else
        out.detail = detail.str();
    return out;
}

// ---- 9: round trips and CLI determinism ------------------------------------

Outcome criterion_roundtrip_determinism() {
    Outcome out;
    std::ostringstream detail;
    std::mt19937 rng(90210);

    const char* specs[] = {"2222", "2322", "2n22:5", "2922", "explicit:2,3,4,5,2,3,4,5,2,3,4,5"};
    for (int round = 0; round < 100; ++round) {
        const Grid seed = Grid::from_pattern(testutil::random_pattern(rng, 4, 4, 3));
        const Schedule schedule = Schedule::parse(specs[rng() % 5]);
        const Stencil stencil = round % 3 == 0   ? Stencil::von_neumann()
                                : round % 3 == 1 ? Stencil::diag()
                                                 : Stencil::moore();
        Grid state = seed;
        evolve_visit(seed, stencil, schedule, static_cast<int64_t>(rng() % 12),
                     [&](const Grid& g) { state = g; });
        const std::string text = io::snapshot_to_string(state);
        const Grid back = io::snapshot_from_string(text);
        if (!back.same_cells(state) || io::snapshot_to_string(back) != text) {
            out.pass = false;
            detail << "snapshot round trip broke at round " << round << "; ";
            break;
        }
    }

    const char* cli_env = std::getenv("MODLAP_CLI");
    if (!cli_env) {
        out.pass = false;
        detail << "MODLAP_CLI not set, CLI determinism unchecked";
    } else {
        const auto base = std::filesystem::temp_directory_path() / "modlap_acceptance";
        std::filesystem::remove_all(base);
        std::filesystem::create_directories(base);
        std::string outputs[2];
        for (int run = 0; run < 2; ++run) {
            const auto dir = base / ("run" + std::to_string(run));
            std::filesystem::create_directories(dir);
            const std::string command = std::string(cli_env) +
                                        " run --seed 101/010/101 --nbhd diag --sched 2322"
                                        " --steps 16 --snapshot-dir " +
                                        (dir / "snaps").string() + " --snap-every 4 --metrics " +
                                        (dir / "metrics.csv").string() + " > " +
                                        (dir / "stdout.txt").string();
            if (std::system(command.c_str()) != 0) {
                out.pass = false;
                detail << "CLI run exited nonzero; ";
                break;
            }
            std::ostringstream all;
            all << read_file(dir / "metrics.csv") << '\0' << read_file(dir / "stdout.txt");
            std::vector<std::filesystem::path> snaps;
            for (const auto& entry : std::filesystem::directory_iterator(dir / "snaps"))
                snaps.push_back(entry.path());
            std::sort(snaps.begin(), snaps.end());
            for (const auto& snap : snaps)
                all << snap.filename().string() << '\0' << read_file(snap);
            outputs[run] = all.str();
        }
        if (out.pass && outputs[0] != outputs[1]) {
            out.pass = false;
            detail << "repeated CLI runs differ";
        }
        std::filesystem::remove_all(base);
    }

    if (out.pass) out.detail = "100 snapshot round trips; repeated CLI runs byte-identical";
    else out.detail = detail.str();
    return out;
}

} // namespace

int main() {
    report(1, "dissociation sweep at iteration 8", criterion_proposition_at_8());
    report(2, "dissociation repeats at iteration 16", criterion_repetition_at_16());
    report(3, "early-iteration block trace (F2, F4)", criterion_block_trace());
    report(4, "binary density minima at multiples of 8", criterion_density_minima());
    report(5, "doubling-checkpoint dimension band", criterion_sierpinski_band());
    report(6, "entropy/variance/dimension orderings over 500 iterations",
           criterion_table_orderings());
    report(7, "spectral contrast between schedules", criterion_spectral_contrast());
    report(8, "property suites", criterion_property_suites());
    report(9, "round trips and CLI determinism", criterion_roundtrip_determinism());

    if (g_failures == 0) {
        std::printf("acceptance: all 9 criteria hold\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
