// Integration tests for the command-line front end; the binary path arrives
// through the MODLAP_CLI environment variable set by CTest.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "core/grid.hpp"
#include "io/snapshot.hpp"
#include "structure/verify.hpp"

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
    const char* env = std::getenv("MODLAP_CLI");
    REQUIRE_MESSAGE(env != nullptr, "MODLAP_CLI must point at the built binary");
    return env;
}

int run_command(const std::string& args, const fs::path& stdout_path = {}) {
    std::string command = cli_path() + " " + args;
    if (!stdout_path.empty()) command += " > " + stdout_path.string();
    command += " 2> /dev/null";
    const int raw = std::system(command.c_str());
    return WEXITSTATUS(raw);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("run emits a dissociated snapshot") {
    TempDir dir("modlap_cli_run");
    const int code = run_command("run --seed 1 --nbhd diag --sched 2222 --steps 8 --snapshot-dir " +
                                 dir.path.string());
    CHECK(code == 0);

    const fs::path snap = dir.path / "state_000008.snap";
    REQUIRE(fs::exists(snap));
    const modlap::Grid state = modlap::io::read_snapshot(snap);
    CHECK(state.iteration() == 8);
    const auto report =
        modlap::structure::detect_seed_copies(state, modlap::Grid::from_pattern({"1"}));
    CHECK(report.matched);
    CHECK(report.offsets.size() == 4);
}

TEST_CASE("run writes metrics with the canonical header") {
    TempDir dir("modlap_cli_metrics");
    const fs::path csv = dir.path / "metrics.csv";
    const int code = run_command(
        "run --seed 111/111/111 --nbhd diag --sched 2222 --steps 8 --metrics " + csv.string());
    CHECK(code == 0);
    const std::string text = slurp(csv);
    CHECK(text.rfind("iteration,density,occupied,components,connectivity_distance,box_dimension\n",
                     0) == 0);
    CHECK(text.find("\n8,0.0997229916898,36,4,13,") != std::string::npos);
}

TEST_CASE("series writes the four CSVs") {
    TempDir dir("modlap_cli_series");
    const int code = run_command("series --seed 1 --nbhd diag --sched 2322 --steps 64 --out-dir " +
                                 dir.path.string());
    CHECK(code == 0);
    for (const char* name : {"series.csv", "stats.csv", "spectrum.csv", "acf.csv"})
        CHECK(fs::exists(dir.path / name));
    const std::string series = slurp(dir.path / "series.csv");
    CHECK(series.rfind("iteration,value\n0,1\n", 0) == 0);
}

TEST_CASE("render converts snapshots") {
    TempDir dir("modlap_cli_render");
    const fs::path snap = dir.path / "in.snap";
    modlap::io::write_snapshot(modlap::Grid::from_pattern({"012", "120", "201"}), snap);

    const fs::path pgm = dir.path / "out.pgm";
    CHECK(run_command("render --in " + snap.string() + " --format pgm --out " + pgm.string()) == 0);
    const std::string bytes = slurp(pgm);
    CHECK(bytes.rfind("P5\n3 3\n255\n", 0) == 0);

    const fs::path text = dir.path / "out.txt";
    CHECK(run_command("render --in " + snap.string() + " --format ascii", text) == 0);
    CHECK(slurp(text).find("12\n") != std::string::npos);
}

TEST_CASE("verify proposition exits zero") {
    CHECK(run_command("verify --proposition --kmax 1") == 0);
}

TEST_CASE("config file values are overridden by flags") {
    TempDir dir("modlap_cli_config");
    const fs::path config = dir.path / "run.conf";
    {
        std::ofstream out(config);
        out << "# sample config\n";
        out << "seed=101/010/101\n";
        out << "sched=2222\n";
        out << "steps=4\n";
    }
    const fs::path csv = dir.path / "metrics.csv";
    // --steps on the command line wins over steps=4 in the file
    const int code = run_command("run --config " + config.string() + " --steps 2 --metrics " +
                                 csv.string());
    CHECK(code == 0);
    const std::string text = slurp(csv);
    CHECK(text.find("\n2,") != std::string::npos);
    CHECK(text.find("\n4,") == std::string::npos);
}

TEST_CASE("exit codes distinguish usage, io and verification failures") {
    CHECK(run_command("run --no-such-flag") == 2);
    CHECK(run_command("run --seed 00") == 2);
    CHECK(run_command("run --sched warp") == 2);
    CHECK(run_command("run --seed-file /nonexistent.snap") == 3);
    CHECK(run_command("render --in /nonexistent.snap --format ascii") == 3);
    CHECK(run_command("nonsense") == 2);
}

TEST_CASE("repeated runs are byte identical") {
    TempDir dir("modlap_cli_determinism");
    std::string contents[2];
    for (int i = 0; i < 2; ++i) {
        const fs::path csv = dir.path / ("metrics" + std::to_string(i) + ".csv");
        const fs::path snaps = dir.path / ("snaps" + std::to_string(i));
        CHECK(run_command("run --seed 101/010/101 --sched 2322 --steps 12 --metrics " +
                          csv.string() + " --snapshot-dir " + snaps.string() +
                          " --snap-every 3") == 0);
        contents[i] = slurp(csv) + '\0' + slurp(snaps / "state_000012.snap") + '\0' +
                      slurp(snaps / "state_000003.snap");
    }
    CHECK(contents[0] == contents[1]);
}
