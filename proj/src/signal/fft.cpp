#include "signal/fft.hpp"

#include <cmath>
#include <numbers>

#include "core/error.hpp"

namespace modlap::signal {

namespace {

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

size_t next_pow2(size_t n) {
    size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

} // namespace

void fft_pow2(std::vector<std::complex<double>>& data, bool inverse) {
    const size_t n = data.size();
    if (!is_pow2(n)) fail(ErrorCode::invalid_argument, "fft_pow2 requires a power-of-two size");
    if (n == 1) return;

    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (size_t len = 2; len <= n; len <<= 1) {
        const double angle = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wstep(std::cos(angle), std::sin(angle));
        for (size_t start = 0; start < n; start += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                const auto even = data[start + k];
                const auto odd = data[start + k + len / 2] * w;
                data[start + k] = even + odd;
                data[start + k + len / 2] = even - odd;
                w *= wstep;
            }
        }
    }
    if (inverse)
        for (auto& v : data) v /= static_cast<double>(n);
}

std::vector<std::complex<double>> dft_forward(const std::vector<std::complex<double>>& input) {
    const size_t n = input.size();
    if (n == 0) fail(ErrorCode::invalid_argument, "empty transform input");
    if (is_pow2(n)) {
        auto data = input;
        fft_pow2(data, false);
        return data;
    }

    // Bluestein: X_k = w_k * (a * b)[k] with a_t = x_t w_t, w_t = exp(-i pi t^2 / n).
    // Angles use t^2 mod 2n so they stay exactly representable.
    const size_t m = next_pow2(2 * n - 1);
    std::vector<std::complex<double>> chirp(n);
    for (size_t t = 0; t < n; ++t) {
        const size_t sq = static_cast<size_t>((static_cast<unsigned long long>(t) * t) % (2 * n));
        const double angle = -std::numbers::pi * static_cast<double>(sq) / static_cast<double>(n);
        chirp[t] = {std::cos(angle), std::sin(angle)};
    }

    std::vector<std::complex<double>> a(m, {0.0, 0.0});
    std::vector<std::complex<double>> b(m, {0.0, 0.0});
    for (size_t t = 0; t < n; ++t) {
        a[t] = input[t] * chirp[t];
        b[t] = std::conj(chirp[t]);
        if (t != 0) b[m - t] = std::conj(chirp[t]);
    }
    fft_pow2(a, false);
    fft_pow2(b, false);
    for (size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, true);

    std::vector<std::complex<double>> out(n);
    for (size_t k = 0; k < n; ++k) out[k] = a[k] * chirp[k];
    return out;
}

} // namespace modlap::signal
