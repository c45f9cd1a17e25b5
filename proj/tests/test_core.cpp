#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "core/error.hpp"
#include "core/grid.hpp"
#include "core/schedule.hpp"
#include "core/stencil.hpp"

using namespace modlap;

TEST_CASE("seed construction from patterns") {
    SUBCASE("minimal single-cell seed") {
        const Grid g = Grid::from_pattern({"1"});
        CHECK(g.width() == 1);
        CHECK(g.height() == 1);
        CHECK(g.iteration() == 0);
        CHECK(g.max_state() == 2);
        CHECK(g.at({0, 0}) == 1);
        CHECK(g.occupied_count() == 1);
    }

    SUBCASE("3x3 all ones parses verbatim") {
        const Grid g = Grid::from_pattern({"111", "111", "111"});
        CHECK(g.occupied_count() == 9);
        CHECK(g.origin() == Point{1, 1});
        for (int64_t y = -1; y <= 1; ++y)
            for (int64_t x = -1; x <= 1; ++x) CHECK(g.at({x, y}) == 1);
        CHECK(g.at({2, 0}) == 0);
    }

    SUBCASE("X seed round-trips through its pattern") {
        const Grid g = Grid::from_pattern_string("101/010/101");
        CHECK(g.occupied_count() == 5);
        CHECK(g.at({0, 0}) == 1);
        CHECK(g.at({1, 0}) == 0);
        CHECK(g.at({-1, -1}) == 1);
        CHECK(g.d4_symmetric());
    }

    SUBCASE("max_state follows the largest digit") {
        CHECK(Grid::from_pattern({"102"}).max_state() == 3);
        CHECK(Grid::from_pattern({"9"}).max_state() == 10);
        CHECK(Grid::from_pattern({"010"}).max_state() == 2);
    }

    SUBCASE("origin centering breaks ties toward the top-left") {
        const Grid even = Grid::from_pattern({"1111", "1111"});
        CHECK(even.origin() == Point{1, 0});
        const Grid odd = Grid::from_pattern({"11111"});
        CHECK(odd.origin() == Point{2, 0});
    }

    SUBCASE("rejects ragged, empty and all-zero patterns") {
        CHECK_THROWS_AS(Grid::from_pattern({"10", "100"}), Error);
        CHECK_THROWS_AS(Grid::from_pattern({}), Error);
        CHECK_THROWS_AS(Grid::from_pattern({"00", "00"}), Error);
        CHECK_THROWS_AS(Grid::from_pattern({"1a"}), Error);
    }
}

TEST_CASE("support bounds") {
    CHECK(*Grid::from_pattern({"1"}).support() == Box{{0, 0}, {0, 0}});
    CHECK(*Grid::from_pattern({"111", "111", "111"}).support() == Box{{-1, -1}, {1, 1}});

    // zero margins do not widen the support
    const Grid padded = Grid::from_pattern({"000", "010", "000"});
    CHECK(*padded.support() == Box{{0, 0}, {0, 0}});

    const Grid empty = Grid::from_parts(3, 3, {1, 1}, 0, 2, std::vector<int32_t>(9, 0));
    CHECK_FALSE(empty.support().has_value());
}

TEST_CASE("translation moves the lattice pattern") {
    const Grid g = Grid::from_pattern({"10", "01"});
    const Grid t = g.translated(5, -2);
    CHECK(t.at({5, -2}) == g.at({0, 0}));
    CHECK(t.at({6, -1}) == g.at({1, 1}));
    CHECK(t.occupied_count() == g.occupied_count());
    CHECK(t.support()->min == Point{g.support()->min.x + 5, g.support()->min.y - 2});
}

TEST_CASE("modulus schedules") {
    SUBCASE("two_n_two_two applies n at steps 2 mod 4") {
        const Schedule s = Schedule::two_n_two_two(3);
        CHECK(s.modulus_at(2) == 3);
        CHECK(s.modulus_at(1) == 2);
        CHECK(s.modulus_at(6) == 3);
        CHECK(s.modulus_at(3) == 2);
        CHECK(s.modulus_at(4) == 2);
        CHECK(s.modulus_at(5) == 2);
        CHECK(s.modulus_at(10) == 3);
    }

    SUBCASE("constant ignores the index") {
        CHECK(Schedule::constant(2).modulus_at(17) == 2);
        CHECK(Schedule::constant(7).modulus_at(1) == 7);
    }

    SUBCASE("two_n_two_two(2) equals constant(2) pointwise") {
        const Schedule a = Schedule::two_n_two_two(2);
        const Schedule b = Schedule::constant(2);
        for (int64_t i = 1; i <= 100; ++i) CHECK(a.modulus_at(i) == b.modulus_at(i));
    }

    SUBCASE("explicit lists index 1-based and bound-check") {
        const Schedule s = Schedule::explicit_list({2, 3, 2, 2});
        CHECK(s.modulus_at(1) == 2);
        CHECK(s.modulus_at(2) == 3);
        CHECK(s.modulus_at(4) == 2);
        CHECK_THROWS_AS(s.modulus_at(5), Error);
        CHECK(s.length() == 4);
    }

    SUBCASE("index below 1 is rejected") {
        CHECK_THROWS_AS(Schedule::constant(2).modulus_at(0), Error);
    }

    SUBCASE("spec string parsing") {
        CHECK(Schedule::parse("2222").kind() == Schedule::Kind::constant);
        CHECK(Schedule::parse("2322").kind() == Schedule::Kind::two_n_two_two);
        CHECK(Schedule::parse("2322").n() == 3);
        CHECK(Schedule::parse("2922").n() == 9);
        CHECK(Schedule::parse("2n22:5").n() == 5);
        CHECK(Schedule::parse("const:3").modulus_at(100) == 3);
        CHECK(Schedule::parse("explicit:2,3,2,2").modulus_at(2) == 3);
        CHECK_THROWS_AS(Schedule::parse("fast"), Error);
        CHECK_THROWS_AS(Schedule::parse("2122"), Error);
        CHECK_THROWS_AS(Schedule::parse("const:1"), Error);
        CHECK_THROWS_AS(Schedule::parse("explicit:"), Error);
    }
}

TEST_CASE("stencils") {
    SUBCASE("builtins") {
        CHECK(Stencil::von_neumann().size() == 4);
        CHECK(Stencil::diag().size() == 4);
        CHECK(Stencil::moore().size() == 8);
        CHECK(Stencil::von_neumann().radius() == 1);
        CHECK(Stencil::diag().radius() == 1);
        CHECK(Stencil::builtin("von-neumann").size() == 4);
        CHECK(Stencil::builtin("moore").size() == 8);
        CHECK_THROWS_AS(Stencil::builtin("hexagonal"), Error);
    }

    SUBCASE("all builtins are D4 symmetric") {
        CHECK(Stencil::von_neumann().d4_symmetric());
        CHECK(Stencil::diag().d4_symmetric());
        CHECK(Stencil::moore().d4_symmetric());
    }

    SUBCASE("mask rows define custom neighborhoods") {
        const Stencil diag = Stencil::from_mask_rows({"101", "000", "101"});
        CHECK(diag.size() == 4);
        CHECK(diag.radius() == 1);
        const Stencil wide = Stencil::from_mask_rows({"10001", "00000", "00000", "00000", "10000"});
        CHECK(wide.radius() == 2);
        CHECK_FALSE(wide.d4_symmetric());
    }

    SUBCASE("mask files allow comments and blank lines") {
        const auto path = std::filesystem::temp_directory_path() / "modlap_mask_test.txt";
        {
            std::ofstream out(path);
            out << "# diagonal neighbors\n\n101\n000\n101\n";
        }
        const Stencil s = Stencil::from_file(path);
        CHECK(s.size() == 4);
        CHECK(s.radius() == 1);
        CHECK(s.d4_symmetric());
        std::filesystem::remove(path);
        CHECK_THROWS_AS(Stencil::from_file(path), Error);
    }

    SUBCASE("mask validation") {
        CHECK_THROWS_AS(Stencil::from_mask_rows({"10", "01"}), Error);        // even size
        CHECK_THROWS_AS(Stencil::from_mask_rows({"000", "010", "000"}), Error);  // center set
        CHECK_THROWS_AS(Stencil::from_mask_rows({"000", "000", "000"}), Error);  // empty
        CHECK_THROWS_AS(Stencil::from_mask_rows({"001", "020", "100"}), Error);  // non-binary
    }
}
