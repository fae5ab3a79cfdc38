#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "synsq/cwt.hpp"
#include "synsq/metrics.hpp"
#include "synsq/parallel.hpp"
#include "synsq/phase.hpp"
#include "synsq/squeeze.hpp"

using namespace synsq;

namespace {

constexpr double kPi = std::numbers::pi;

UniformSeries tones(const std::vector<double>& freqs, const std::vector<double>& amps, std::size_t n, double fs) {
    std::vector<double> v(n, 0.0);
    for (std::size_t k = 0; k < freqs.size(); ++k) {
        for (std::size_t m = 0; m < n; ++m) v[m] += amps[k] * std::cos(2.0 * kPi * freqs[k] * double(m) / fs);
    }
    return UniformSeries(0.0, 1.0 / fs, v);
}

UniformSeries noisy_chirp(std::size_t n, std::uint64_t seed) {
    std::vector<double> v(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double t = double(m) / 64.0;
        v[m] = std::cos(2.0 * kPi * (3.0 * t + 0.5 * t * t));
    }
    return add_white_noise(UniformSeries(0.0, 1.0 / 64.0, v), 0.3, seed);
}

}  // namespace

TEST_CASE("frequency bin examples") {
    const std::vector<double> bins = frequency_bins(8, 4, 1.0);
    REQUIRE(bins.size() == 4);
    CHECK(bins[0] == 0.125);
    CHECK(bins[1] == doctest::Approx(0.19843).epsilon(1e-5));
    CHECK(bins[2] == doctest::Approx(0.31498).epsilon(1e-5));
    CHECK(bins[3] == 0.5);
    CHECK(make_frequency_axis(8, 4, 1.0).log2_step == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("frequency bins run from 1/(n dt) to 1/(2 dt)") {
    for (std::size_t n : {4u, 64u, 4096u}) {
        for (std::size_t na : {2u, 7u, 288u}) {
            for (double dt : {1.0, 0.01, 1.0 / 3.0}) {
                const auto bins = frequency_bins(n, na, dt);
                CHECK(bins.front() == 1.0 / (double(n) * dt));
                CHECK(bins.back() == 1.0 / (2.0 * dt));
                for (std::size_t l = 1; l < bins.size(); ++l) CHECK(bins[l] > bins[l - 1]);
            }
        }
    }
    CHECK_THROWS_AS(frequency_bins(12, 4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(frequency_bins(8, 1, 1.0), std::invalid_argument);
}

TEST_CASE("bin index rounding and clamping") {
    const FrequencyAxis axis = make_frequency_axis(8, 4, 1.0);
    CHECK(bin_index(0.125, axis) == 0);
    CHECK(bin_index(0.01, axis) == 0);
    CHECK(bin_index(0.5, axis) == 3);
    CHECK(bin_index(2.0, axis) == 3);
    // log2(2) / (2/3) = 1.5 rounds away from zero.
    CHECK(bin_index(0.25, axis) == 2);
    CHECK(bin_index(0.2, axis) == 1);
    CHECK_THROWS_AS(bin_index(0.0, axis), std::invalid_argument);
    CHECK_THROWS_AS(bin_index(-1.0, axis), std::invalid_argument);
    CHECK(nearest_bin(-1.0, axis) == 0);
    for (std::size_t l = 0; l < axis.size(); ++l) CHECK(bin_index(axis.freqs[l], axis) == l);
}

TEST_CASE("an empty mask gives an all-zero plane") {
    const CwtPlane cwt = forward(tones({20.0}, {1.0}, 256, 256.0), WaveletSpec::bump(), 8);
    const PhasePlane phase = phase_transform(cwt, 1e9);
    const SstPlane sst = synchrosqueeze(cwt, phase);
    CHECK(sst.rows() == cwt.rows());
    CHECK(sst.cols() == cwt.cols());
    CHECK(sst.coeffs.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("reassignment conserves the weighted column sums") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const CwtPlane cwt = forward(noisy_chirp(512, seed), WaveletSpec::morlet(), 16);
        const PhasePlane phase = phase_transform(cwt, default_threshold(cwt));
        const SstPlane sst = synchrosqueeze(cwt, phase);
        for (std::size_t m = 0; m < cwt.cols(); ++m) {
            Complex expected{};
            double scale = 0.0;
            for (std::size_t j = 0; j < cwt.rows(); ++j) {
                if (!phase.mask(j, m)) continue;
                const Complex term = std::log(2.0) / 16.0 * cwt.coeffs(j, m) / std::sqrt(cwt.scales[j]);
                expected += term;
                scale += std::abs(term);
            }
            const Complex actual = sst.coeffs.col(Eigen::Index(m)).sum();
            CHECK(std::abs(actual - expected) <= 1e-12 * std::max(scale, 1e-300));
        }
    }
}

TEST_CASE("squeezing is linear in the coefficients for a fixed phase") {
    const CwtPlane cwt = forward(noisy_chirp(256, 5), WaveletSpec::bump(), 8);
    const PhasePlane phase = phase_transform(cwt, default_threshold(cwt));
    const SstPlane base = synchrosqueeze(cwt, phase);
    for (Complex c : {Complex(2.0, 0.0), Complex(-0.3, 1.7)}) {
        CwtPlane scaled_cwt = cwt;
        scaled_cwt.coeffs *= c;
        const SstPlane scaled = synchrosqueeze(scaled_cwt, phase);
        CHECK((scaled.coeffs - c * base.coeffs).norm() <= 1e-12 * base.coeffs.norm());
    }
}

TEST_CASE("permuting time columns permutes the output columns") {
    const CwtPlane cwt = forward(noisy_chirp(256, 6), WaveletSpec::bump(), 8);
    const PhasePlane phase = phase_transform(cwt, default_threshold(cwt));
    const SstPlane base = synchrosqueeze(cwt, phase);

    std::vector<Eigen::Index> perm(cwt.cols());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(2);
    std::shuffle(perm.begin(), perm.end(), rng);

    CwtPlane pc = cwt;
    PhasePlane pp = phase;
    for (std::size_t m = 0; m < perm.size(); ++m) {
        pc.coeffs.col(Eigen::Index(m)) = cwt.coeffs.col(perm[m]);
        pp.omega.col(Eigen::Index(m)) = phase.omega.col(perm[m]);
        pp.mask.col(Eigen::Index(m)) = phase.mask.col(perm[m]);
    }
    const SstPlane permuted = synchrosqueeze(pc, pp);
    for (std::size_t m = 0; m < perm.size(); ++m) CHECK(permuted.coeffs.col(Eigen::Index(m)) == base.coeffs.col(perm[m]));
}

TEST_CASE("a pure tone concentrates within three bins of its frequency") {
    const CwtPlane cwt = forward(tones({50.0}, {1.0}, 1024, 1024.0), WaveletSpec::bump(), 32);
    const SstPlane sst = synchrosqueeze(cwt, phase_transform(cwt, default_threshold(cwt)));
    const std::size_t center = bin_index(50.0, sst.axis);
    const Window w = central_window(sst.cols(), 0.9);
    for (std::size_t m = w.begin; m < w.end; ++m) CHECK(column_concentration(sst, m, center, 3) >= 0.9);
}

TEST_CASE("two separated tones give two disjoint ridges of comparable mass") {
    const CwtPlane cwt = forward(tones({8.0, 50.0}, {1.0, 1.0}, 1024, 1024.0), WaveletSpec::bump(), 32);
    const SstPlane sst = synchrosqueeze(cwt, phase_transform(cwt, default_threshold(cwt)));
    const std::size_t low = bin_index(8.0, sst.axis), high = bin_index(50.0, sst.axis);
    REQUIRE(high - low > 6);
    const Window w = central_window(sst.cols(), 0.9);
    for (std::size_t m = w.begin; m < w.end; ++m) {
        const double a = column_concentration(sst, m, low, 3);
        const double b = column_concentration(sst, m, high, 3);
        CHECK(a + b >= 0.85);
        // Equal amplitudes carry equal energy, so the split is near even.
        CHECK(a / b == doctest::Approx(1.0).epsilon(0.15));
    }
}

TEST_CASE("squeezing is deterministic across runs and thread counts") {
    const CwtPlane cwt = forward(noisy_chirp(1024, 9), WaveletSpec::bump(), 32);
    const PhasePlane phase = phase_transform(cwt, default_threshold(cwt));
    set_max_threads(1);
    const SstPlane a = synchrosqueeze(cwt, phase);
    set_max_threads(3);
    const SstPlane b = synchrosqueeze(cwt, phase);
    const SstPlane c = synchrosqueeze(cwt, phase);
    set_max_threads(0);
    CHECK(a.coeffs == b.coeffs);
    CHECK(b.coeffs == c.coeffs);
}

TEST_CASE("mismatched planes are rejected") {
    const CwtPlane cwt = forward(noisy_chirp(256, 1), WaveletSpec::bump(), 8);
    const CwtPlane other = forward(noisy_chirp(128, 1), WaveletSpec::bump(), 8);
    CHECK_THROWS_AS(synchrosqueeze(cwt, phase_transform(other, 0.0)), std::invalid_argument);
}
