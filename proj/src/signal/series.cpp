#include "signal/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "core/error.hpp"
#include "signal/fft.hpp"

namespace modlap::signal {

CellSeries extract_series(const Trajectory& trajectory, Point cell) {
    CellSeries series;
    series.cell = cell;
    series.values.reserve(trajectory.states.size());
    int32_t alphabet = 2;
    for (const Grid& state : trajectory.states) {
        series.values.push_back(state.at(cell));
        alphabet = std::max(alphabet, state.max_state());
    }
    series.alphabet = alphabet;
    return series;
}

std::vector<double> to_doubles(std::span<const int32_t> values) {
    return std::vector<double>(values.begin(), values.end());
}

double mean(std::span<const double> values) {
    if (values.empty()) fail(ErrorCode::invalid_argument, "mean of an empty series");
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double variance(std::span<const double> values) {
    const double m = mean(values);
    double sum = 0.0;
    for (double v : values) sum += (v - m) * (v - m);
    return sum / static_cast<double>(values.size());
}

double shannon_entropy_bits(std::span<const int32_t> values) {
    if (values.empty()) fail(ErrorCode::invalid_argument, "entropy of an empty series");
    std::unordered_map<int32_t, int64_t> counts;
    for (int32_t v : values) ++counts[v];
    const double n = static_cast<double>(values.size());
    double h = 0.0;
    for (const auto& [state, count] : counts) {
        const double p = static_cast<double>(count) / n;
        h -= p * std::log2(p);
    }
    return h;
}

double mean(const CellSeries& series) {
    const auto values = to_doubles(series.values);
    return mean(std::span<const double>(values));
}

double variance(const CellSeries& series) {
    const auto values = to_doubles(series.values);
    return variance(std::span<const double>(values));
}

double shannon_entropy_bits(const CellSeries& series) {
    return shannon_entropy_bits(std::span<const int32_t>(series.values));
}

SpectrumReport dft_amplitude(std::span<const double> values) {
    const size_t n = values.size();
    if (n < 4) fail(ErrorCode::invalid_argument, "spectrum needs a series of length at least 4");

    const double m = mean(values);
    std::vector<std::complex<double>> data(n);
    for (size_t t = 0; t < n; ++t) data[t] = {values[t] - m, 0.0};
    const auto transformed = dft_forward(data);

    SpectrumReport report;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    report.amplitudes.resize(n / 2 + 1);
    for (size_t k = 0; k <= n / 2; ++k) report.amplitudes[k] = std::abs(transformed[k]) * scale;

    report.dominant_bin = 1;
    for (size_t k = 2; k <= n / 2; ++k)
        if (report.amplitudes[k] > report.amplitudes[static_cast<size_t>(report.dominant_bin)])
            report.dominant_bin = static_cast<int64_t>(k);

    std::vector<double> tail(report.amplitudes.begin() + 1, report.amplitudes.end());
    std::vector<double> sorted = tail;
    std::sort(sorted.begin(), sorted.end());
    const size_t h = sorted.size() / 2;
    const double median =
        sorted.size() % 2 == 1 ? sorted[h] : 0.5 * (sorted[h - 1] + sorted[h]);
    const double peak = report.amplitudes[static_cast<size_t>(report.dominant_bin)];
    report.peak_to_median =
        median > 0.0 ? peak / median : std::numeric_limits<double>::infinity();

    if (peak <= 0.0) {
        report.flatness = 1.0;  // all-zero spectrum (constant input)
        report.peak_to_median = std::numeric_limits<double>::infinity();
    } else {
        // Exact spectral zeros are floored a hair above 0 so the geometric
        // mean stays positive; line spectra then land near 0, flat ones near 1.
        const double floor_value = peak * 1e-15;
        double log_sum = 0.0;
        double arith = 0.0;
        for (double a : tail) {
            log_sum += std::log(std::max(a, floor_value));
            arith += a;
        }
        arith /= static_cast<double>(tail.size());
        report.flatness = std::exp(log_sum / static_cast<double>(tail.size())) / arith;
        report.flatness = std::min(report.flatness, 1.0);
    }
    return report;
}

SpectrumReport dft_amplitude(const CellSeries& series) {
    const auto values = to_doubles(series.values);
    return dft_amplitude(std::span<const double>(values));
}

std::optional<std::vector<double>> autocorrelation(std::span<const double> values,
                                                   int64_t max_lag) {
    const int64_t n = static_cast<int64_t>(values.size());
    if (n < 2) fail(ErrorCode::invalid_argument, "autocorrelation needs at least 2 samples");
    if (max_lag < 0) max_lag = n / 2;
    if (max_lag > n / 2)
        fail(ErrorCode::invalid_argument, "max lag exceeds half the series length");

    const double m = mean(values);
    std::vector<double> centered(values.size());
    double denom = 0.0;
    for (int64_t t = 0; t < n; ++t) {
        centered[static_cast<size_t>(t)] = values[static_cast<size_t>(t)] - m;
        denom += centered[static_cast<size_t>(t)] * centered[static_cast<size_t>(t)];
    }
    if (denom == 0.0) return std::nullopt;  // constant series

    std::vector<double> r(static_cast<size_t>(max_lag) + 1);
    for (int64_t lag = 0; lag <= max_lag; ++lag) {
        double sum = 0.0;
        for (int64_t t = 0; t + lag < n; ++t)
            sum += centered[static_cast<size_t>(t)] * centered[static_cast<size_t>(t + lag)];
        r[static_cast<size_t>(lag)] = sum / denom;
    }
    return r;
}

std::optional<std::vector<double>> autocorrelation(const CellSeries& series, int64_t max_lag) {
    const auto values = to_doubles(series.values);
    return autocorrelation(std::span<const double>(values), max_lag);
}

} // namespace modlap::signal
