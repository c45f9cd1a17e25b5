#pragma once

#include <complex>
#include <vector>

namespace modlap::signal {

// In-place iterative radix-2 transform; size must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& data, bool inverse);

// Forward discrete Fourier transform for any length (Bluestein's chirp
// transform for non-power-of-two sizes).
std::vector<std::complex<double>> dft_forward(const std::vector<std::complex<double>>& input);

} // namespace modlap::signal
