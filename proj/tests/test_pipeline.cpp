#include <doctest.h>

#include <cmath>
#include <vector>

#include "synsq/metrics.hpp"
#include "synsq/pipeline.hpp"
#include "synsq/testsignals.hpp"

using namespace synsq;

namespace {

double rmse_against(const UniformSeries& estimate, const UniformSeries& reference, double fraction = 0.9) {
    return relative_rmse(estimate.values(), reference.values(), central_window(reference.size(), fraction));
}

}  // namespace

TEST_CASE("analysis is cropped back to the input window") {
    const SyntheticSignal sig = gen_fig1(1000);
    PipelineConfig config;
    config.voices = 16;
    const Analysis a = analyze(sig.series, config);
    CHECK(a.sst.cols() == 1000);
    CHECK(a.cwt.cols() == 1000);
    CHECK(a.sst.t0 == sig.series.t0());
    // 1000 + 2 * 500 reflected samples, then up to the next power of two.
    CHECK(a.sst.transform_length == 2048);
    CHECK(a.sst.rows() == 10 * 16);
    CHECK(a.gamma == default_threshold(a.cwt));
    config.pad = 12;
    CHECK(analyze(sig.series, config).sst.transform_length == 1024);
    config.voices = 0;
    CHECK_THROWS_AS(analyze(sig.series, config), std::invalid_argument);
}

TEST_CASE("fixed threshold is used as given") {
    const SyntheticSignal sig = gen_tone(20.0, 512, 256.0);
    PipelineConfig config;
    config.gamma = 0.25;
    const Analysis a = analyze(sig.series, config);
    CHECK(a.gamma == 0.25);
    CHECK(a.phase.gamma == 0.25);
}

TEST_CASE("inverting every scale recovers the signal") {
    const SyntheticSignal sig = gen_fig1(2048);
    PipelineConfig config;
    const Analysis a = analyze(sig.series, config);
    CHECK(rmse_against(invert_cwt(a.cwt, 0.0), sig.series) <= 0.05);
    CHECK(rmse_against(invert_all(a.sst, config.wavelet.admissibility()), sig.series) <= 0.05);
}

TEST_CASE("hard thresholding reduces white noise") {
    const SyntheticSignal clean = gen_fig1(2048);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const UniformSeries noisy = add_white_noise(clean.series, 0.5, seed);
        const double before = rmse_against(noisy, clean.series);
        PipelineConfig config;
        const UniformSeries cleaned = denoise(noisy, config);
        CHECK(cleaned.size() == noisy.size());
        CHECK(rmse_against(cleaned, clean.series) < 0.9 * before);
        // Roughly a third of the finest octave lies below the bump's passband
        // and contributes exact zeros to the MAD, so the automatic threshold
        // is conservative; a larger one removes most of the noise.
        const PaddedSeries padded = pad_for_transform(noisy);
        config.gamma = 2.0 * default_threshold(forward(padded.series, config.wavelet, config.voices, padded.offset, padded.length));
        CHECK(rmse_against(denoise(noisy, config), clean.series) < 0.4 * before);
    }
}

TEST_CASE("search band maps onto the nearest bins") {
    const Analysis a = analyze(gen_tone(20.0, 512, 256.0).series, PipelineConfig{});
    PipelineConfig config;
    config.ridge.search_band = Interval{5.0, 40.0};
    const RidgeSearch search = ridge_search(a.sst, config);
    CHECK(search.first_bin == nearest_bin(5.0, a.sst.axis));
    CHECK(search.last_bin == nearest_bin(40.0, a.sst.axis));
    CHECK(search.band_halfwidth == 4);
    CHECK(search.relative);
    config.ridge.search_band = Interval{40.0, 5.0};
    CHECK_THROWS_AS(ridge_search(a.sst, config), std::invalid_argument);
    config.ridge.search_band.reset();
    config.ridge.band_halfwidth = 7;
    CHECK(ridge_search(a.sst, config).band_halfwidth == 7);
    CHECK(ridge_search(a.sst, config).last_bin >= a.sst.rows() - 1);
}

TEST_CASE("decomposition separates well-spaced tones in frequency order") {
    const SyntheticSignal sig = gen_tone_sum({1.0 / 6.0, 1.0 / 40.0}, {1.0, 0.6}, 2048, 1.0 / 256.0);
    PipelineConfig config;
    config.ridge.components = 2;
    const std::vector<Component> parts = decompose(analyze(sig.series, config).sst, config);
    REQUIRE(parts.size() == 2);
    const std::vector<double> times = sig.series.times();
    for (std::size_t k = 0; k < 2; ++k) {
        std::vector<double> truth(times.size());
        for (std::size_t m = 0; m < times.size(); ++m) truth[m] = sig.components[k].value(times[m]);
        CHECK(relative_rmse(parts[k].signal.values(), truth, central_window(truth.size(), 0.9)) <= 0.05);
    }
}
