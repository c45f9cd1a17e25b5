#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "core/grid.hpp"

namespace modlap::io {

enum class RenderFormat { ascii, pgm, ppm };

RenderFormat parse_render_format(std::string_view name);

// Flat per-cell rendering, one cell per pixel times an integer scale factor.
//
//   ascii  UTF-8 text, middle dot for 0 and the digit glyph otherwise
//   pgm    binary P5, states mapped to evenly spaced gray levels
//          (0 lightest at 255, max_state-1 darkest at 0)
//   ppm    binary P6 through a fixed palette: 0 white, 1 black, 2 red,
//          3 blue, higher states on evenly spaced hues from 30 degrees
//          in 60-degree steps
std::string render(const Grid& grid, RenderFormat format, int32_t scale = 1);

void render_to_file(const Grid& grid, RenderFormat format, int32_t scale,
                    const std::filesystem::path& path);

} // namespace modlap::io
