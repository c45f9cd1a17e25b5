#include "io/snapshot.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace modlap::io {

std::string snapshot_to_string(const Grid& grid) {
    if (grid.max_state() > 10)
        fail(ErrorCode::invalid_argument,
             "snapshot states are single digits; max_state " +
                 std::to_string(grid.max_state()) + " exceeds 10");

    std::ostringstream out;
    out << kSnapshotMagic << ' ' << kSnapshotVersion << '\n';
    out << grid.width() << ' ' << grid.height() << ' ' << grid.iteration() << ' '
        << grid.origin().x << ' ' << grid.origin().y << ' ' << grid.max_state() << '\n';
    const Box box = grid.array_box();
    for (int64_t y = box.min.y; y <= box.max.y; ++y) {
        for (int64_t x = box.min.x; x <= box.max.x; ++x)
            out << static_cast<char>('0' + grid.at(Point{x, y}));
        out << '\n';
    }
    return out.str();
}

namespace {

int64_t parse_int(std::string_view token, std::string_view what) {
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        fail(ErrorCode::parse, "snapshot header: bad " + std::string(what) + " '" +
                                   std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && line[pos] == ' ') ++pos;
        size_t end = pos;
        while (end < line.size() && line[end] != ' ') ++end;
        if (end > pos) tokens.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return tokens;
}

} // namespace

Grid snapshot_from_string(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start <= text.size()) {
        const size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.size() < 2) fail(ErrorCode::parse, "snapshot is truncated");

    const auto magic = split_ws(lines[0]);
    if (magic.size() != 2 || magic[0] != kSnapshotMagic)
        fail(ErrorCode::parse, "not a MODLAP snapshot");
    if (parse_int(magic[1], "version") != kSnapshotVersion)
        fail(ErrorCode::parse, "unsupported snapshot version " + std::string(magic[1]) +
                                   " (expected " + std::to_string(kSnapshotVersion) + ")");

    const auto header = split_ws(lines[1]);
    if (header.size() != 6)
        fail(ErrorCode::parse, "snapshot header must carry 6 fields");
    const int64_t width = parse_int(header[0], "width");
    const int64_t height = parse_int(header[1], "height");
    const int64_t iteration = parse_int(header[2], "iteration");
    const int64_t origin_x = parse_int(header[3], "origin x");
    const int64_t origin_y = parse_int(header[4], "origin y");
    const int64_t max_state = parse_int(header[5], "max_state");
    if (width < 1 || height < 1) fail(ErrorCode::parse, "snapshot dimensions must be positive");
    if (iteration < 0) fail(ErrorCode::parse, "snapshot iteration must be non-negative");
    if (max_state < 2 || max_state > 10)
        fail(ErrorCode::parse, "snapshot max_state must be in [2, 10]");

    if (static_cast<int64_t>(lines.size()) - 2 != height)
        fail(ErrorCode::parse, "snapshot body has " + std::to_string(lines.size() - 2) +
                                   " rows, header says " + std::to_string(height));

    std::vector<int32_t> cells;
    cells.reserve(static_cast<size_t>(width * height));
    for (int64_t y = 0; y < height; ++y) {
        const std::string_view row = lines[static_cast<size_t>(y + 2)];
        if (static_cast<int64_t>(row.size()) != width)
            fail(ErrorCode::parse, "snapshot row " + std::to_string(y) + " has width " +
                                       std::to_string(row.size()) + ", header says " +
                                       std::to_string(width));
        for (char c : row) {
            if (c < '0' || c > '9')
                fail(ErrorCode::parse, std::string("snapshot contains non-digit '") + c + "'");
            const int32_t v = c - '0';
            if (v >= max_state)
                fail(ErrorCode::parse, "snapshot digit " + std::to_string(v) +
                                           " is not below max_state " + std::to_string(max_state));
            cells.push_back(v);
        }
    }
    return Grid::from_parts(width, height, Point{origin_x, origin_y}, iteration,
                            static_cast<int32_t>(max_state), std::move(cells));
}

void write_snapshot(const Grid& grid, const std::filesystem::path& path) {
    const std::string text = snapshot_to_string(grid);
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io, "cannot open snapshot for writing: " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) fail(ErrorCode::io, "failed writing snapshot: " + path.string());
}

Grid read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot open snapshot for reading: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return snapshot_from_string(buffer.str());
}

} // namespace modlap::io
