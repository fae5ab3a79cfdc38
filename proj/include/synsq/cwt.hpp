#pragma once

#include <cstddef>
#include <vector>

#include "synsq/signal.hpp"
#include "synsq/types.hpp"
#include "synsq/wavelets.hpp"

namespace synsq {

// Wavelet coefficients W(a_j, t_m) and their time derivative on the
// dyadic-log scale grid. Rows are scales (increasing), columns are times.
struct CwtPlane {
    std::vector<double> scales;
    double t0 = 0.0;
    double dt = 1.0;
    ComplexMatrix coeffs;
    ComplexMatrix derivative;
    std::size_t voices = 0;
    // Length of the transform that produced the plane. Differs from cols()
    // once the padding has been cropped away.
    std::size_t transform_length = 0;
    WaveletSpec wavelet = WaveletSpec::bump();

    std::size_t rows() const noexcept { return static_cast<std::size_t>(coeffs.rows()); }
    std::size_t cols() const noexcept { return static_cast<std::size_t>(coeffs.cols()); }
    double time(std::size_t m) const noexcept { return t0 + static_cast<double>(m) * dt; }
};

// L such that n = 2^(L+1), L >= 1. Throws std::invalid_argument otherwise.
std::size_t octave_count(std::size_t n);

// a_j = 2^(j / voices) * dt for j = 1 .. L * voices.
std::vector<double> scale_grid(std::size_t n, std::size_t voices, double dt);

// Cyclic frequency of DFT bin m for a length-n transform with step dt; bins
// above n/2 wrap to negative frequencies.
double dft_frequency(std::size_t m, std::size_t n, double dt) noexcept;

// FFT-based CWT. Row j is IDFT(DFT(f) * conj(psi_j)) with
// psi_j[m] = sqrt(a_j) psi_hat(a_j xi_m); the derivative row multiplies by
// 2 pi i (m / n) / dt in addition. Rows are computed in parallel.
CwtPlane forward(const UniformSeries& series, const WaveletSpec& spec, std::size_t voices);

// Same transform, keeping only columns [offset, offset + length). Equal to
// crop_columns(forward(...)) without holding the full plane.
CwtPlane forward(const UniformSeries& series, const WaveletSpec& spec, std::size_t voices, std::size_t offset,
                 std::size_t length);

struct DirectRow {
    std::vector<Complex> coeffs;
    std::vector<Complex> derivative;
};

// One row of forward() at an arbitrary scale, evaluated with explicit O(n^2)
// DFT sums. Used as an independent check of the FFT path.
DirectRow cwt_direct_dft(const UniformSeries& series, const WaveletSpec& spec, double scale);

// Keeps columns [offset, offset + length).
CwtPlane crop_columns(const CwtPlane& plane, std::size_t offset, std::size_t length);

}  // namespace synsq
