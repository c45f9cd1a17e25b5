#include "io/render.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace modlap::io {

RenderFormat parse_render_format(std::string_view name) {
    if (name == "ascii") return RenderFormat::ascii;
    if (name == "pgm") return RenderFormat::pgm;
    if (name == "ppm") return RenderFormat::ppm;
    fail(ErrorCode::parse, "unknown render format '" + std::string(name) +
                               "' (expected ascii, pgm or ppm)");
}

namespace {

std::array<uint8_t, 3> hue_to_rgb(int32_t degrees) {
    degrees %= 360;
    const int32_t sector = degrees / 60;
    const int32_t ramp = (255 * (degrees % 60)) / 60;
    switch (sector) {
        case 0: return {255, static_cast<uint8_t>(ramp), 0};
        case 1: return {static_cast<uint8_t>(255 - ramp), 255, 0};
        case 2: return {0, 255, static_cast<uint8_t>(ramp)};
        case 3: return {0, static_cast<uint8_t>(255 - ramp), 255};
        case 4: return {static_cast<uint8_t>(ramp), 0, 255};
        default: return {255, 0, static_cast<uint8_t>(255 - ramp)};
    }
}

std::array<uint8_t, 3> palette_rgb(int32_t state) {
    switch (state) {
        case 0: return {255, 255, 255};
        case 1: return {0, 0, 0};
        case 2: return {255, 0, 0};
        case 3: return {0, 0, 255};
        default: return hue_to_rgb(30 + (state - 4) * 60);
    }
}

} // namespace

std::string render(const Grid& grid, RenderFormat format, int32_t scale) {
    if (scale < 1) fail(ErrorCode::invalid_argument, "render scale must be at least 1");
    const Box box = grid.array_box();
    const int64_t w = grid.width() * scale;
    const int64_t h = grid.height() * scale;

    std::ostringstream out;
    switch (format) {
        case RenderFormat::ascii: {
            for (int64_t y = box.min.y; y <= box.max.y; ++y) {
                std::string line;
                for (int64_t x = box.min.x; x <= box.max.x; ++x) {
                    const int32_t v = grid.at(Point{x, y});
                    std::string glyph = v == 0 ? "·"
                                      : v <= 9 ? std::string(1, static_cast<char>('0' + v))
                                               : "#";
                    for (int32_t s = 0; s < scale; ++s) line += glyph;
                }
                for (int32_t s = 0; s < scale; ++s) out << line << '\n';
            }
            break;
        }
        case RenderFormat::pgm: {
            out << "P5\n" << w << ' ' << h << "\n255\n";
            const int32_t span = grid.max_state() - 1;
            for (int64_t y = box.min.y; y <= box.max.y; ++y) {
                std::string line;
                for (int64_t x = box.min.x; x <= box.max.x; ++x) {
                    const int32_t v = grid.at(Point{x, y});
                    const char gray = static_cast<char>(255 * (span - v) / span);
                    line.append(static_cast<size_t>(scale), gray);
                }
                for (int32_t s = 0; s < scale; ++s) out << line;
            }
            break;
        }
        case RenderFormat::ppm: {
            out << "P6\n" << w << ' ' << h << "\n255\n";
            for (int64_t y = box.min.y; y <= box.max.y; ++y) {
                std::string line;
                for (int64_t x = box.min.x; x <= box.max.x; ++x) {
                    const auto rgb = palette_rgb(grid.at(Point{x, y}));
                    for (int32_t s = 0; s < scale; ++s) {
                        line += static_cast<char>(rgb[0]);
                        line += static_cast<char>(rgb[1]);
                        line += static_cast<char>(rgb[2]);
                    }
                }
                for (int32_t s = 0; s < scale; ++s) out << line;
            }
            break;
        }
    }
    return out.str();
}

void render_to_file(const Grid& grid, RenderFormat format, int32_t scale,
                    const std::filesystem::path& path) {
    const std::string bytes = render(grid, format, scale);
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io, "cannot open render output: " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) fail(ErrorCode::io, "failed writing render output: " + path.string());
}

} // namespace modlap::io
