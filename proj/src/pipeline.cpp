#include "synsq/pipeline.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "synsq/parallel.hpp"

namespace synsq {

Analysis analyze(const UniformSeries& series, const PipelineConfig& config) {
    if (config.voices == 0) throw std::invalid_argument("voices must be >= 1");
    const PaddedSeries padded = pad_for_transform(series, config.pad);
    Analysis out;
    out.cwt = forward(padded.series, config.wavelet, config.voices, padded.offset, padded.length);
    // Keep the caller's time origin exactly rather than the one recomputed
    // through the padding offset.
    out.cwt.t0 = series.t0();
    out.gamma = config.gamma ? *config.gamma : default_threshold(out.cwt);
    out.phase = phase_transform(out.cwt, out.gamma);
    out.sst = synchrosqueeze(out.cwt, out.phase);
    return out;
}

RidgeSearch ridge_search(const SstPlane& sst, const PipelineConfig& config) {
    if (!(config.ridge.smoothness >= 0.0)) throw std::invalid_argument("smoothness must be >= 0");
    RidgeSearch search;
    search.smoothness = config.ridge.smoothness;
    search.relative = true;
    search.jump_cap = config.ridge.jump_cap;
    search.band_halfwidth = config.band_halfwidth();
    if (config.ridge.search_band) {
        const Interval band = *config.ridge.search_band;
        if (!(band.lo < band.hi)) throw std::invalid_argument("search band must satisfy lo < hi");
        search.first_bin = nearest_bin(band.lo, sst.axis);
        search.last_bin = nearest_bin(band.hi, sst.axis);
    }
    return search;
}

std::vector<Component> decompose(const SstPlane& sst, const PipelineConfig& config) {
    const Complex r_psi = admissibility_constant(sst.wavelet);
    std::vector<Component> out;
    for (Ridge& ridge : extract_ridges(sst, config.ridge.components, ridge_search(sst, config))) {
        UniformSeries signal = invert_band(sst, ridge, r_psi);
        out.push_back({std::move(ridge), std::move(signal)});
    }
    return out;
}

UniformSeries invert_cwt(const CwtPlane& cwt, double gamma) {
    const Complex scale = 2.0 / admissibility_constant(cwt.wavelet);
    const double dz = std::numbers::ln2 / static_cast<double>(cwt.voices);
    std::vector<double> out(cwt.cols(), 0.0);
    parallel_for_chunks(cwt.cols(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t m = begin; m < end; ++m) {
            Complex sum{};
            for (std::size_t j = 0; j < cwt.rows(); ++j) {
                const Complex w = cwt.coeffs(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(m));
                if (std::abs(w) > gamma) sum += w * (dz / std::sqrt(cwt.scales[j]));
            }
            out[m] = std::real(scale * sum);
        }
    });
    return UniformSeries(cwt.t0, cwt.dt, std::move(out));
}

UniformSeries denoise(const UniformSeries& series, const PipelineConfig& config) {
    const PaddedSeries padded = pad_for_transform(series, config.pad);
    CwtPlane cwt = forward(padded.series, config.wavelet, config.voices, padded.offset, padded.length);
    cwt.t0 = series.t0();
    const double gamma = config.gamma ? *config.gamma : default_threshold(cwt);
    return invert_cwt(cwt, gamma);
}

}  // namespace synsq
