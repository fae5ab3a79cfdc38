#include "synsq/squeeze.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "synsq/parallel.hpp"

namespace synsq {

FrequencyAxis make_frequency_axis(std::size_t n, std::size_t bin_count, double dt) {
    octave_count(n);
    if (bin_count < 2) throw std::invalid_argument("frequency axis needs at least 2 bins");
    if (!(dt > 0.0)) throw std::invalid_argument("frequency axis: dt must be positive");
    FrequencyAxis axis;
    axis.min_frequency = 1.0 / (static_cast<double>(n) * dt);
    axis.log2_step = std::log2(static_cast<double>(n) / 2.0) / static_cast<double>(bin_count - 1);
    axis.freqs.resize(bin_count);
    for (std::size_t l = 0; l < bin_count; ++l) {
        axis.freqs[l] = std::exp2(static_cast<double>(l) * axis.log2_step) * axis.min_frequency;
    }
    axis.freqs.back() = 1.0 / (2.0 * dt);
    return axis;
}

std::vector<double> frequency_bins(std::size_t n, std::size_t bin_count, double dt) {
    return make_frequency_axis(n, bin_count, dt).freqs;
}

std::size_t nearest_bin(double hz, const FrequencyAxis& axis) {
    const double top = static_cast<double>(axis.size() - 1);
    if (!(hz > 0.0)) return 0;
    // std::round is half-away-from-zero.
    const double l = std::round(std::log2(hz / axis.min_frequency) / axis.log2_step);
    return static_cast<std::size_t>(std::clamp(l, 0.0, top));
}

std::size_t bin_index(double omega, const FrequencyAxis& axis) {
    if (!(omega > 0.0)) throw std::invalid_argument("bin_index: omega must be positive");
    return nearest_bin(omega, axis);
}

SstPlane synchrosqueeze(const CwtPlane& cwt, const PhasePlane& phase) {
    if (phase.rows() != cwt.rows() || phase.cols() != cwt.cols()) {
        throw std::invalid_argument("synchrosqueeze: phase plane does not match the CWT plane");
    }
    SstPlane out;
    out.axis = make_frequency_axis(cwt.transform_length, cwt.rows(), cwt.dt);
    out.t0 = cwt.t0;
    out.dt = cwt.dt;
    out.voices = cwt.voices;
    out.transform_length = cwt.transform_length;
    out.wavelet = cwt.wavelet;
    out.coeffs.setZero(static_cast<Eigen::Index>(cwt.rows()), static_cast<Eigen::Index>(cwt.cols()));

    std::vector<double> weights(cwt.rows());
    const double dz = std::numbers::ln2 / static_cast<double>(cwt.voices);
    for (std::size_t j = 0; j < weights.size(); ++j) weights[j] = dz / std::sqrt(cwt.scales[j]);

    const auto rows = static_cast<Eigen::Index>(cwt.rows());
    parallel_for_chunks(cwt.cols(), [&](std::size_t begin, std::size_t end) {
        // Row-outer order keeps memory access contiguous; each column still
        // accumulates its scales in increasing j.
        for (Eigen::Index j = 0; j < rows; ++j) {
            for (auto m = static_cast<Eigen::Index>(begin); m < static_cast<Eigen::Index>(end); ++m) {
                if (!phase.mask(j, m)) continue;
                const auto l = static_cast<Eigen::Index>(bin_index(phase.omega(j, m), out.axis));
                out.coeffs(l, m) += cwt.coeffs(j, m) * weights[static_cast<std::size_t>(j)];
            }
        }
    });
    return out;
}

}  // namespace synsq
