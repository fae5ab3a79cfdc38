#pragma once

#include <cstddef>
#include <vector>

#include "synsq/cwt.hpp"
#include "synsq/phase.hpp"
#include "synsq/types.hpp"
#include "synsq/wavelets.hpp"

namespace synsq {

// Log-spaced frequency divisions w_l = 2^(l * log2_step) * min_frequency,
// l = 0 .. count - 1, running from 1 / (n dt) to 1 / (2 dt).
struct FrequencyAxis {
    double min_frequency = 0.0;
    double log2_step = 0.0;
    std::vector<double> freqs;

    std::size_t size() const noexcept { return freqs.size(); }
};

FrequencyAxis make_frequency_axis(std::size_t n, std::size_t bin_count, double dt);
std::vector<double> frequency_bins(std::size_t n, std::size_t bin_count, double dt);

// Nearest log bin, clamped to [0, size - 1]; ties round away from zero.
// Throws std::invalid_argument for omega <= 0.
std::size_t bin_index(double omega, const FrequencyAxis& axis);

// Same rounding and clamping as bin_index; non-positive input maps to bin 0.
std::size_t nearest_bin(double hz, const FrequencyAxis& axis);

struct SstPlane {
    FrequencyAxis axis;
    double t0 = 0.0;
    double dt = 1.0;
    ComplexMatrix coeffs;
    std::size_t voices = 0;
    std::size_t transform_length = 0;
    WaveletSpec wavelet = WaveletSpec::bump();

    std::size_t rows() const noexcept { return static_cast<std::size_t>(coeffs.rows()); }
    std::size_t cols() const noexcept { return static_cast<std::size_t>(coeffs.cols()); }
    double time(std::size_t m) const noexcept { return t0 + static_cast<double>(m) * dt; }
};

// Reassigns every masked coefficient of column m to the bin of its phase
// transform: T(w_l, t_m) += (ln 2 / voices) W(a_j, t_m) a_j^(-1/2), scales
// visited in increasing order. One bin per scale.
SstPlane synchrosqueeze(const CwtPlane& cwt, const PhasePlane& phase);

}  // namespace synsq
