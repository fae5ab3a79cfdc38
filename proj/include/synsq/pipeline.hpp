#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "synsq/cwt.hpp"
#include "synsq/phase.hpp"
#include "synsq/reconstruct.hpp"
#include "synsq/signal.hpp"
#include "synsq/squeeze.hpp"
#include "synsq/wavelets.hpp"

namespace synsq {

struct RidgeConfig {
    // Jump penalty relative to the mean over columns of the peak |T|^2,
    // renormalized before each ridge is peeled off.
    double smoothness = 2.0;
    std::size_t jump_cap = 3;
    // Defaults to default_band_halfwidth(voices).
    std::optional<std::size_t> band_halfwidth;
    std::size_t components = 1;
    // Frequency window (signal units) the ridges must stay inside.
    std::optional<Interval> search_band;
};

struct PipelineConfig {
    std::size_t voices = 32;
    WaveletSpec wavelet = WaveletSpec::bump();
    // Hard threshold on |W|; default_threshold() when empty.
    std::optional<double> gamma;
    // Reflection padding per side; n / 2 when empty.
    std::optional<std::size_t> pad;
    RidgeConfig ridge;

    std::size_t band_halfwidth() const { return ridge.band_halfwidth.value_or(default_band_halfwidth(voices)); }
};

struct Analysis {
    CwtPlane cwt;  // cropped to the input window
    PhasePlane phase;
    SstPlane sst;
    double gamma = 0.0;
};

// Pads, transforms, crops back to the input window, thresholds, and
// synchrosqueezes.
Analysis analyze(const UniformSeries& series, const PipelineConfig& config);

struct Component {
    Ridge ridge;
    UniformSeries signal;
};

RidgeSearch ridge_search(const SstPlane& sst, const PipelineConfig& config);

// Extracts config.ridge.components ridges and inverts each band, ordered by
// increasing frequency.
std::vector<Component> decompose(const SstPlane& sst, const PipelineConfig& config);

// Hard-threshold wavelet shrinkage: zero every |W| <= gamma and invert over
// all scales. Uses default_threshold() when config.gamma is empty.
UniformSeries denoise(const UniformSeries& series, const PipelineConfig& config);

// 2 Re(R_psi^-1 sum_j (ln 2 / voices) a_j^(-1/2) W(a_j, t)) over |W| > gamma.
UniformSeries invert_cwt(const CwtPlane& cwt, double gamma);

}  // namespace synsq
