#pragma once

#include <cstddef>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "synsq/signal.hpp"

namespace synsq {

// Ground truth of one component A(t) cos(2 pi phi(t)). phase is in cycles,
// so if_curve = phase' is in cycles per unit time.
struct ComponentTruth {
    std::string name;
    std::function<double(double)> amplitude;
    std::function<double(double)> phase;
    std::function<double(double)> if_curve;

    double value(double t) const { return amplitude(t) * std::cos(2.0 * std::numbers::pi * phase(t)); }
};

struct SyntheticSignal {
    UniformSeries series;
    std::vector<ComponentTruth> components;
    std::string note;
};

struct NonuniformSignal {
    NonuniformSeries series;
    std::vector<ComponentTruth> components;
};

// Samples t -> sum of components on [0, duration) with n points.
UniformSeries sample_components(const std::vector<ComponentTruth>& components, std::size_t n, double duration);

// (1 + 0.6 cos 2t) cos(4 pi t + 1.2 t^2) on [0, 10). The argument is read in
// radians: phi(t) = 2t + 0.6 t^2 / pi cycles, IF 2 + 1.2 t / pi.
SyntheticSignal gen_fig1(std::size_t n);

// Three AM/FM components on [0, 10):
//   s1 = (1 + 0.2 cos t) cos(2 pi (2t + 0.3 cos t))
//   s2 = (1 + 0.3 cos 2t) e^(-t/15) cos(2 pi (2.4t + 0.5 t^1.2 + 0.3 sin t))
//   s3 = cos(2 pi (5.3t + 0.2 t^1.3))
// plus N(0, sigma^2) noise when sigma > 0.
SyntheticSignal gen_s123(std::size_t n, double sigma, std::uint64_t seed = 0);

// Three components sampled at t_m = dt1 m + dt2 u_m, u_m ~ U[0, 1],
// dt1 = 11/300, dt2 = 11/310, for every t_m <= 10:
//   (1 + 0.5 cos t) cos(4 pi t)
//   2 e^(-0.1 t) cos(2 pi (3t + 0.25 sin 1.4t))
//   (1 + 0.5 cos 2.5t) cos(2 pi (5t + 2 t^1.3))
NonuniformSignal gen_nonuniform(std::uint64_t seed);

// Pure tone cos(2 pi alpha t) with n samples at rate fs starting at t = 0.
SyntheticSignal gen_tone(double alpha, std::size_t n, double fs);

// Sum of tones with the given periods and amplitudes on a grid of step dt.
SyntheticSignal gen_tone_sum(const std::vector<double>& periods, const std::vector<double>& amplitudes,
                             std::size_t n, double dt);

// Smallest (phi'_k - phi'_{k-1}) / (phi'_k + phi'_{k-1}) over adjacent
// components (ordered by IF) on a grid of `samples` points in [t_lo, t_hi].
double separation(const std::vector<ComponentTruth>& components, double t_lo, double t_hi,
                  std::size_t samples = 2001);

// Signal power over noise power in dB.
double snr_db(std::span<const double> clean, double noise_sigma);

}  // namespace synsq
