#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace synsq {

// Uniformly sampled real signal. Sample m sits at t0 + m * dt.
class UniformSeries {
public:
    UniformSeries(double t0, double dt, std::vector<double> values);

    double t0() const noexcept { return t0_; }
    double dt() const noexcept { return dt_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t m) const noexcept { return values_[m]; }
    double time(std::size_t m) const noexcept { return t0_ + static_cast<double>(m) * dt_; }
    std::vector<double> times() const;

private:
    double t0_;
    double dt_;
    std::vector<double> values_;
};

// Irregularly sampled signal: strictly increasing instants, at least 4 samples.
class NonuniformSeries {
public:
    NonuniformSeries(std::vector<double> times, std::vector<double> values);

    std::size_t size() const noexcept { return times_.size(); }
    std::span<const double> times() const noexcept { return times_; }
    std::span<const double> values() const noexcept { return values_; }

    // Largest gap between consecutive instants.
    double max_gap() const noexcept;

private:
    std::vector<double> times_;
    std::vector<double> values_;
};

// Reflects about the edge samples without repeating them:
// [1,2,3] padded by 2 gives [3,2,1,2,3,2,1]. Each pad must be shorter than
// the series. t0 moves back by left * dt.
UniformSeries pad_reflect(const UniformSeries& series, std::size_t left, std::size_t right);
UniformSeries pad_reflect(const UniformSeries& series, std::size_t pad_len);

UniformSeries crop(const UniformSeries& series, std::size_t offset, std::size_t length);

// A series extended to a transform-friendly length together with the window
// that holds the original samples.
struct PaddedSeries {
    UniformSeries series;
    std::size_t offset;
    std::size_t length;
};

// Reflect-pads by pad_len (default n/2) on both sides, then keeps reflecting
// until the length is a power of two >= 4.
PaddedSeries pad_for_transform(const UniformSeries& series,
                               std::optional<std::size_t> pad_len = std::nullopt);

// Not-a-knot cubic spline through a NonuniformSeries.
class CubicSpline {
public:
    explicit CubicSpline(const NonuniformSeries& series);

    // Evaluates the interpolant; outside the knot range the end cubics are
    // extended.
    double operator()(double t) const;

private:
    std::vector<double> knots_;
    std::vector<double> values_;
    std::vector<double> slopes_;
};

// Evaluates the spline on t_first + k * dt for every grid point up to
// t_last.
UniformSeries spline_resample(const NonuniformSeries& series, double dt);

// Adds i.i.d. N(0, sigma^2) samples drawn from a generator seeded with seed.
UniformSeries add_white_noise(const UniformSeries& series, double sigma, std::uint64_t seed);

double median(std::span<const double> values);

// Median absolute deviation from the median.
double mad(std::span<const double> values);

// Factor turning a Gaussian MAD into a standard deviation.
inline constexpr double kMadToSigma = 1.4826;

}  // namespace synsq
