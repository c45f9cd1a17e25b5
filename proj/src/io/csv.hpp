#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "analysis/metrics.hpp"

namespace modlap::io {

// Locale-independent "%.12g" rendering; every CSV double goes through this.
std::string format_double(double value);

inline constexpr std::string_view kMetricsCsvHeader =
    "iteration,density,occupied,components,connectivity_distance,box_dimension";

std::string metrics_csv_row(const analysis::MetricsRow& row);
std::string metrics_csv(std::span<const analysis::MetricsRow> rows);

void export_metrics_csv(std::span<const analysis::MetricsRow> rows,
                        const std::filesystem::path& path);

} // namespace modlap::io
