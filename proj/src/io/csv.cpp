#include "io/csv.hpp"

#include <cstdio>
#include <fstream>

#include "core/error.hpp"

namespace modlap::io {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string metrics_csv_row(const analysis::MetricsRow& row) {
    std::string out = std::to_string(row.iteration);
    out += ',';
    out += format_double(row.density);
    out += ',';
    out += std::to_string(row.occupied);
    out += ',';
    out += std::to_string(row.components);
    out += ',';
    out += std::to_string(row.connectivity_distance);
    out += ',';
    if (row.box_dimension) out += format_double(*row.box_dimension);
    return out;
}

std::string metrics_csv(std::span<const analysis::MetricsRow> rows) {
    std::string out{kMetricsCsvHeader};
    out += '\n';
    for (const auto& row : rows) {
        out += metrics_csv_row(row);
        out += '\n';
    }
    return out;
}

void export_metrics_csv(std::span<const analysis::MetricsRow> rows,
                        const std::filesystem::path& path) {
    const std::string text = metrics_csv(rows);
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io, "cannot open metrics CSV for writing: " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) fail(ErrorCode::io, "failed writing metrics CSV: " + path.string());
}

} // namespace modlap::io
