#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "synsq/cwt.hpp"
#include "synsq/phase.hpp"
#include "synsq/signal.hpp"

using namespace synsq;

namespace {

constexpr double kPi = std::numbers::pi;

UniformSeries tone(double alpha, std::size_t n, double fs, double amplitude = 1.0) {
    std::vector<double> v(n);
    for (std::size_t m = 0; m < n; ++m) v[m] = amplitude * std::cos(2.0 * kPi * alpha * double(m) / fs);
    return UniformSeries(0.0, 1.0 / fs, v);
}

UniformSeries scaled(const UniformSeries& s, double c) {
    std::vector<double> v(s.values().begin(), s.values().end());
    for (double& x : v) x *= c;
    return UniformSeries(s.t0(), s.dt(), v);
}

UniformSeries noise(std::size_t n, std::uint64_t seed) {
    return add_white_noise(UniformSeries(0.0, 1.0, std::vector<double>(n, 0.0)), 1.0, seed);
}

}  // namespace

TEST_CASE("threshold of a zero plane is zero") {
    const CwtPlane plane = forward(UniformSeries(0.0, 1.0, std::vector<double>(256, 0.0)), WaveletSpec::bump(), 8);
    CHECK(default_threshold(plane) == 0.0);
    const PhasePlane phase = phase_transform(plane, 0.0);
    CHECK(phase.support_size() == 0);
}

TEST_CASE("threshold doubles when the signal doubles") {
    const UniformSeries s = noise(1024, 3);
    const double g1 = default_threshold(forward(s, WaveletSpec::bump(), 16));
    const double g2 = default_threshold(forward(scaled(s, 2.0), WaveletSpec::bump(), 16));
    CHECK(g1 > 0.0);
    CHECK(g2 == 2.0 * g1);
}

TEST_CASE("threshold of white noise matches a direct recomputation") {
    const std::size_t n = 4096, nv = 32;
    for (std::uint64_t seed : {1u, 2u}) {
        const CwtPlane plane = forward(noise(n, seed), WaveletSpec::bump(), nv);
        std::vector<double> mags;
        for (std::size_t j = 0; j < nv; ++j) {
            for (std::size_t m = 0; m < n; ++m) mags.push_back(std::abs(plane.coeffs(j, m)));
        }
        const double expected = 1.4826 * std::sqrt(2.0 * std::log(double(n))) * oracle::mad_sorted(mags);
        CHECK(default_threshold(plane) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("threshold rejects planes without a full octave") {
    CwtPlane plane = forward(noise(64, 1), WaveletSpec::bump(), 4);
    plane.voices = 0;
    CHECK_THROWS_AS(default_threshold(plane), std::invalid_argument);
    CHECK_THROWS_AS(phase_transform(plane, -1.0), std::invalid_argument);
}

TEST_CASE("phase transform of a pure tone recovers its frequency") {
    const double alpha = 50.0;
    const std::size_t n = 1024, nv = 32;
    const CwtPlane plane = forward(tone(alpha, n, 1024.0), WaveletSpec::bump(), nv);
    const PhasePlane phase = phase_transform(plane, 0.0);
    // Half of one log bin at alpha for 9 octaves spread over L nv bins.
    const double log2_step = std::log2(double(n) / 2.0) / double(plane.rows() - 1);
    const double half_bin = 0.5 * alpha * (std::exp2(log2_step) - 1.0);
    const double peak = plane.coeffs.cwiseAbs().maxCoeff();
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < phase.rows(); ++j) {
        for (std::size_t m = 0; m < phase.cols(); ++m) {
            if (!phase.mask(j, m)) continue;
            CHECK(std::isfinite(phase.omega(j, m)));
            if (std::abs(plane.coeffs(j, m)) < 1e-3 * peak) continue;
            CHECK(std::abs(phase.omega(j, m) - alpha) <= half_bin);
            sum += phase.omega(j, m);
            ++count;
        }
    }
    REQUIRE(count > 0);
    CHECK(sum / double(count) == doctest::Approx(alpha).epsilon(0.01));
}

TEST_CASE("masked entries hold NaN") {
    const CwtPlane plane = forward(tone(20.0, 256, 256.0), WaveletSpec::morlet(), 8);
    const PhasePlane phase = phase_transform(plane, 0.1);
    REQUIRE(phase.support_size() > 0);
    REQUIRE(phase.support_size() < phase.rows() * phase.cols());
    for (std::size_t j = 0; j < phase.rows(); ++j) {
        for (std::size_t m = 0; m < phase.cols(); ++m) {
            if (phase.mask(j, m)) {
                CHECK(phase.omega(j, m) > 0.0);
            } else {
                CHECK(std::isnan(phase.omega(j, m)));
            }
        }
    }
}

TEST_CASE("threshold above every coefficient masks everything") {
    const CwtPlane plane = forward(tone(20.0, 256, 256.0), WaveletSpec::bump(), 8);
    const double top = plane.coeffs.cwiseAbs().maxCoeff();
    CHECK(phase_transform(plane, top).support_size() == 0);
    CHECK(phase_transform(plane, 2.0 * top).support_size() == 0);
    CHECK(phase_transform(plane, 0.5 * top).support_size() > 0);
}

TEST_CASE("phase of a chirp follows its instantaneous frequency") {
    const double fs = 128.0;
    const std::size_t n = 1024;
    std::vector<double> v(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double t = double(m) / fs;
        v[m] = std::cos(2.0 * kPi * (4.0 * t + 0.6 * t * t));
    }
    const CwtPlane plane = forward(UniformSeries(0.0, 1.0 / fs, v), WaveletSpec::bump(), 32);
    const PhasePlane phase = phase_transform(plane, default_threshold(plane));
    for (std::size_t m = std::size_t(1.5 * fs); m < std::size_t(6.5 * fs); m += 8) {
        Eigen::Index j = 0;
        plane.coeffs.col(Eigen::Index(m)).cwiseAbs().maxCoeff(&j);
        REQUIRE(phase.mask(j, m));
        const double expected = 4.0 + 1.2 * double(m) / fs;
        CHECK(phase.omega(j, m) == doctest::Approx(expected).epsilon(0.02));
    }
}

TEST_CASE("scaling signal and threshold together leaves the phase unchanged") {
    const UniformSeries s = tone(12.0, 512, 128.0);
    const CwtPlane base = forward(s, WaveletSpec::bump(), 16);
    const double gamma = 0.05 * base.coeffs.cwiseAbs().maxCoeff();
    const PhasePlane p0 = phase_transform(base, gamma);
    for (double c : {0.5, 4.0, 3.0}) {
        const PhasePlane pc = phase_transform(forward(scaled(s, c), WaveletSpec::bump(), 16), c * gamma);
        CHECK((pc.mask == p0.mask).all());
        for (std::size_t j = 0; j < p0.rows(); ++j) {
            for (std::size_t m = 0; m < p0.cols(); ++m) {
                if (p0.mask(j, m) && pc.mask(j, m)) CHECK(std::abs(pc.omega(j, m) - p0.omega(j, m)) <= 1e-12 * p0.omega(j, m));
            }
        }
    }
}

TEST_CASE("raising the threshold only removes points") {
    const UniformSeries s = noise(512, 17);
    const CwtPlane plane = forward(s, WaveletSpec::mexican_hat(), 8);
    const double top = plane.coeffs.cwiseAbs().maxCoeff();
    PhasePlane previous = phase_transform(plane, 0.0);
    for (double f : {0.01, 0.1, 0.3, 0.7}) {
        const PhasePlane next = phase_transform(plane, f * top);
        CHECK((next.mask && !previous.mask).count() == 0);
        CHECK(next.support_size() <= previous.support_size());
        previous = next;
    }
}
