#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "core/grid.hpp"

namespace modlap::io {

// Plain-text grid snapshot, bit-exact on round trip:
//
//   MODLAP 1
//   <width> <height> <iteration> <origin_x> <origin_y> <max_state>
//   <height rows of width digit characters>
//
// States are single digits, so max_state is capped at 10. origin_x/origin_y
// give the array position of lattice coordinate (0,0), LF line endings only.

inline constexpr std::string_view kSnapshotMagic = "MODLAP";
inline constexpr int kSnapshotVersion = 1;

std::string snapshot_to_string(const Grid& grid);
Grid snapshot_from_string(std::string_view text);

void write_snapshot(const Grid& grid, const std::filesystem::path& path);
Grid read_snapshot(const std::filesystem::path& path);

} // namespace modlap::io
