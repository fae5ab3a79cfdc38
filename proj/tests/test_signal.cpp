#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "synsq/signal.hpp"

using namespace synsq;

namespace {

std::vector<double> values_of(const UniformSeries& s) { return {s.values().begin(), s.values().end()}; }

// Sup error of the spline of sin(2 pi t) through `knots`, sampled densely.
double spline_sup_error(const std::vector<double>& knots) {
    std::vector<double> v(knots.size());
    for (std::size_t i = 0; i < knots.size(); ++i) v[i] = std::sin(2.0 * std::numbers::pi * knots[i]);
    const CubicSpline spline(NonuniformSeries(knots, v));
    double worst = 0.0;
    const double a = knots.front(), b = knots.back();
    for (int k = 0; k <= 20000; ++k) {
        const double t = a + (b - a) * k / 20000.0;
        worst = std::max(worst, std::abs(spline(t) - std::sin(2.0 * std::numbers::pi * t)));
    }
    return worst;
}

// Knots on [0, 1] whose gaps repeat `pattern` (rescaled) `repeats` times.
std::vector<double> patterned_grid(const std::vector<double>& pattern, int repeats) {
    double total = 0.0;
    for (double g : pattern) total += g;
    std::vector<double> knots{0.0};
    for (int r = 0; r < repeats; ++r) {
        for (double g : pattern) knots.push_back(knots.back() + g / (total * repeats));
    }
    knots.back() = 1.0;
    return knots;
}

}  // namespace

TEST_CASE("uniform series validates its fields") {
    CHECK_THROWS_AS(UniformSeries(0.0, 0.0, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(UniformSeries(0.0, -1.0, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(UniformSeries(0.0, 1.0, {}), std::invalid_argument);
    const UniformSeries s(2.0, 0.25, {1.0, 2.0, 3.0});
    CHECK(s.time(2) == 2.5);
    CHECK(s.times() == std::vector<double>{2.0, 2.25, 2.5});
}

TEST_CASE("nonuniform series validates ordering and length") {
    CHECK_THROWS_AS(NonuniformSeries({0, 1, 2}, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(NonuniformSeries({0, 1, 1, 2}, {0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(NonuniformSeries({0, 2, 1, 3}, {0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(NonuniformSeries({0, 1, 2, 3}, {0, 0, 0}), std::invalid_argument);
    const NonuniformSeries s({0.0, 0.5, 2.0, 2.25}, {0, 0, 0, 0});
    CHECK(s.max_gap() == 1.5);
}

TEST_CASE("reflection padding examples") {
    CHECK(values_of(pad_reflect(UniformSeries(0, 1, {1, 2, 3}), 2)) == std::vector<double>{3, 2, 1, 2, 3, 2, 1});
    CHECK(values_of(pad_reflect(UniformSeries(0, 1, {5}), 0)) == std::vector<double>{5});
    CHECK(values_of(pad_reflect(UniformSeries(0, 1, {1, 4, 9, 16}), 3)) ==
          std::vector<double>{16, 9, 4, 1, 4, 9, 16, 9, 4, 1});
}

TEST_CASE("reflection padding shifts the origin and rejects long pads") {
    const UniformSeries s(1.0, 0.5, {1, 2, 3, 4});
    CHECK(pad_reflect(s, 2).t0() == doctest::Approx(0.0));
    CHECK_THROWS_AS(pad_reflect(s, 4), std::invalid_argument);
    CHECK_THROWS_AS(pad_reflect(s, 1, 4), std::invalid_argument);
}

TEST_CASE("padding then cropping recovers the series") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    std::vector<double> v(37);
    for (double& x : v) x = g(rng);
    const UniformSeries s(0.7, 0.1, v);
    for (std::size_t pad : {0u, 1u, 10u, 36u}) {
        const UniformSeries back = crop(pad_reflect(s, pad), pad, s.size());
        CHECK(values_of(back) == v);
        CHECK(back.t0() == doctest::Approx(s.t0()));
    }
}

TEST_CASE("transform padding reaches a power of two and records the window") {
    for (std::size_t n : {4u, 5u, 100u, 1000u, 1024u}) {
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(i * i % 7);
        const UniformSeries s(0.0, 1.0, v);
        const PaddedSeries p = pad_for_transform(s);
        const std::size_t len = p.series.size();
        CHECK((len & (len - 1)) == 0);
        CHECK(len >= 2 * n);
        CHECK(p.length == n);
        CHECK(values_of(crop(p.series, p.offset, p.length)) == v);
        CHECK(p.series.time(p.offset) == doctest::Approx(0.0).epsilon(1e-12));
    }
    const PaddedSeries fixed = pad_for_transform(UniformSeries(0, 1, std::vector<double>(10, 1.0)), 3);
    CHECK(fixed.series.size() == 16);
}

TEST_CASE("spline reproduces cubics exactly") {
    const auto p = [](double t) { return t * t * t - 2.0 * t; };
    const std::vector<double> knots{0.0, 0.07, 0.21, 0.4, 0.55, 0.83, 1.0};
    std::vector<double> v;
    for (double t : knots) v.push_back(p(t));
    const UniformSeries out = spline_resample(NonuniformSeries(knots, v), 0.1);
    REQUIRE(out.size() == 11);
    for (std::size_t m = 0; m < out.size(); ++m) CHECK(std::abs(out[m] - p(out.time(m))) < 1e-10);
}

TEST_CASE("spline reproduces every polynomial of degree at most three") {
    const std::vector<double> knots{-1.0, -0.3, 0.1, 0.15, 0.9, 1.7, 2.0, 2.6};
    for (int degree = 0; degree <= 3; ++degree) {
        std::vector<double> v;
        for (double t : knots) v.push_back(std::pow(t, degree) + 0.5);
        const CubicSpline s(NonuniformSeries(knots, v));
        for (double t = -1.0; t <= 2.6; t += 0.013) CHECK(s(t) == doctest::Approx(std::pow(t, degree) + 0.5).epsilon(1e-11));
    }
}

TEST_CASE("spline passes through its samples") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.2, 1.0);
    std::vector<double> knots{0.0}, v{0.3};
    for (int i = 0; i < 40; ++i) {
        knots.push_back(knots.back() + u(rng));
        v.push_back(std::cos(knots.back()) + u(rng));
    }
    const CubicSpline s(NonuniformSeries(knots, v));
    for (std::size_t i = 0; i < knots.size(); ++i) CHECK(s(knots[i]) == doctest::Approx(v[i]).epsilon(1e-12));
}

TEST_CASE("spline on an already uniform grid returns the input") {
    std::vector<double> t, v;
    for (int i = 0; i <= 20; ++i) {
        t.push_back(0.25 * i);
        v.push_back(std::sin(0.7 * i) + 0.1 * i);
    }
    const UniformSeries out = spline_resample(NonuniformSeries(t, v), 0.25);
    REQUIRE(out.size() == v.size());
    for (std::size_t m = 0; m < v.size(); ++m) CHECK(out[m] == doctest::Approx(v[m]).epsilon(1e-12));
}

TEST_CASE("spline error falls by about 2^4 when the largest gap halves") {
    // The finer grid repeats the same random gap pattern twice as often, so
    // the largest gap halves while the local mesh geometry stays the same.
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> gap(0.5, 1.5);
        std::vector<double> pattern(7);
        for (double& g : pattern) g = gap(rng);
        const double ratio = spline_sup_error(patterned_grid(pattern, 8)) / spline_sup_error(patterned_grid(pattern, 16));
        CHECK(ratio >= 12.0);
        CHECK(ratio <= 20.0);
    }
}

TEST_CASE("spline resampling rejects bad input") {
    CHECK_THROWS_AS(spline_resample(NonuniformSeries({0, 1, 2, 3}, {0, 1, 2, 3}), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(NonuniformSeries({0, 1, 2}, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("zero noise leaves the series untouched") {
    const UniformSeries s(0, 1, {1.5, -2.0, 3.25});
    CHECK(values_of(add_white_noise(s, 0.0, 99)) == values_of(s));
    CHECK_THROWS_AS(add_white_noise(s, -1.0, 1), std::invalid_argument);
}

TEST_CASE("white noise has the requested spread and is seed-deterministic") {
    const UniformSeries zero(0, 1, std::vector<double>(65536, 0.0));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const UniformSeries a = add_white_noise(zero, 1.0, seed);
        const UniformSeries b = add_white_noise(zero, 1.0, seed);
        CHECK(values_of(a) == values_of(b));
        double mean = 0.0;
        for (double x : a.values()) mean += x;
        mean /= 65536.0;
        double var = 0.0;
        for (double x : a.values()) var += (x - mean) * (x - mean);
        var /= 65535.0;
        CHECK(std::abs(mean) < 0.02);
        CHECK(std::sqrt(var) == doctest::Approx(1.0).epsilon(0.02));
        CHECK(var == doctest::Approx(1.0).epsilon(0.02));
    }
    CHECK(values_of(add_white_noise(zero, 1.0, 1)) != values_of(add_white_noise(zero, 1.0, 2)));
}

TEST_CASE("median absolute deviation examples") {
    CHECK(mad(std::vector<double>{1, 2, 3, 4, 5}) == 1.0);
    CHECK(mad(std::vector<double>{4.5, 4.5, 4.5}) == 0.0);
    CHECK(median(std::vector<double>{4, 1, 3, 2}) == 2.5);
    CHECK(mad(std::vector<double>{1, 2, 4, 8}) == oracle::mad_sorted({1, 2, 4, 8}));
    CHECK_THROWS_AS(mad(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(median(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("median absolute deviation is shift invariant and scale equivariant") {
    std::mt19937_64 rng(8);
    std::exponential_distribution<double> e(1.0);
    std::vector<double> v(501);
    for (double& x : v) x = e(rng);
    const double base = mad(v);
    CHECK(base == doctest::Approx(oracle::mad_sorted(v)).epsilon(1e-15));
    std::vector<double> shifted = v, scaled = v;
    for (double& x : shifted) x += 17.0;
    for (double& x : scaled) x *= 3.5;
    CHECK(mad(shifted) == doctest::Approx(base).epsilon(1e-12));
    CHECK(mad(scaled) == doctest::Approx(3.5 * base).epsilon(1e-12));
}

TEST_CASE("1.4826 MAD estimates the Gaussian standard deviation") {
    std::vector<double> estimates;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g(0.0, 2.5);
        std::vector<double> v(4096);
        for (double& x : v) x = g(rng);
        estimates.push_back(kMadToSigma * mad(v));
        CHECK(std::abs(estimates.back() - 2.5) <= 0.1 * 2.5);
    }
    CHECK(oracle::median_sorted(estimates) == doctest::Approx(2.5).epsilon(0.05));
}
