#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/evolve.hpp"
#include "core/geometry.hpp"

namespace modlap::signal {

// States of one fixed lattice cell over the iterations of a run.
struct CellSeries {
    std::vector<int32_t> values;  // values[i] = state at iteration i
    Point cell;
    int32_t alphabet = 2;         // number of possible states (largest modulus seen)
};

// Reads the given lattice cell across all trajectory states (0 off support).
CellSeries extract_series(const Trajectory& trajectory, Point cell);

double mean(std::span<const double> values);
double mean(const CellSeries& series);

// Population variance.
double variance(std::span<const double> values);
double variance(const CellSeries& series);

// Shannon entropy in bits over the empirical state frequencies.
double shannon_entropy_bits(std::span<const int32_t> values);
double shannon_entropy_bits(const CellSeries& series);

struct SpectrumReport {
    std::vector<double> amplitudes;  // bins 0..floor(n/2), scaled by 1/sqrt(n)
    int64_t dominant_bin = 0;        // argmax over bins >= 1
    double peak_to_median = 1.0;     // +inf when the median amplitude is zero
    double flatness = 1.0;           // geometric / arithmetic mean over bins >= 1
};

// Amplitude spectrum of the mean-removed series; length must be at least 4.
// With the 1/sqrt(n) scaling the full-spectrum energy equals n * variance.
SpectrumReport dft_amplitude(std::span<const double> values);
SpectrumReport dft_amplitude(const CellSeries& series);

// Biased lag-0-normalized autocorrelation r(0..max_lag); max_lag defaults to
// floor(n/2) when negative. Returns nullopt for a constant series, whose
// autocorrelation is undefined.
std::optional<std::vector<double>> autocorrelation(std::span<const double> values,
                                                   int64_t max_lag = -1);
std::optional<std::vector<double>> autocorrelation(const CellSeries& series,
                                                   int64_t max_lag = -1);

std::vector<double> to_doubles(std::span<const int32_t> values);

} // namespace modlap::signal
