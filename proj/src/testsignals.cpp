#include "synsq/testsignals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace synsq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDuration = 10.0;

}  // namespace

UniformSeries sample_components(const std::vector<ComponentTruth>& components, std::size_t n, double duration) {
    const double dt = duration / static_cast<double>(n);
    std::vector<double> v(n, 0.0);
    for (std::size_t m = 0; m < n; ++m) {
        const double t = static_cast<double>(m) * dt;
        for (const auto& c : components) v[m] += c.value(t);
    }
    return UniformSeries(0.0, dt, std::move(v));
}

SyntheticSignal gen_fig1(std::size_t n) {
    if (n < 64) throw std::invalid_argument("gen_fig1: n must be >= 64");
    ComponentTruth c{
        "chirp",
        [](double t) { return 1.0 + 0.6 * std::cos(2.0 * t); },
        [](double t) { return 2.0 * t + 0.6 * t * t / kPi; },
        [](double t) { return 2.0 + 1.2 * t / kPi; },
    };
    std::vector<ComponentTruth> comps{c};
    return {sample_components(comps, n, kDuration), comps,
            "phase argument 4*pi*t + 1.2*t^2 taken in radians: IF = 2 + 1.2*t/pi"};
}

SyntheticSignal gen_s123(std::size_t n, double sigma, std::uint64_t seed) {
    if (n < 64) throw std::invalid_argument("gen_s123: n must be >= 64");
    std::vector<ComponentTruth> comps{
        {"s1", [](double t) { return 1.0 + 0.2 * std::cos(t); },
         [](double t) { return 2.0 * t + 0.3 * std::cos(t); },
         [](double t) { return 2.0 - 0.3 * std::sin(t); }},
        {"s2", [](double t) { return (1.0 + 0.3 * std::cos(2.0 * t)) * std::exp(-t / 15.0); },
         [](double t) { return 2.4 * t + 0.5 * std::pow(t, 1.2) + 0.3 * std::sin(t); },
         [](double t) { return 2.4 + 0.6 * std::pow(t, 0.2) + 0.3 * std::cos(t); }},
        {"s3", [](double) { return 1.0; },
         [](double t) { return 5.3 * t + 0.2 * std::pow(t, 1.3); },
         [](double t) { return 5.3 + 0.26 * std::pow(t, 0.3); }},
    };
    UniformSeries clean = sample_components(comps, n, kDuration);
    return {add_white_noise(clean, sigma, seed), comps, ""};
}

NonuniformSignal gen_nonuniform(std::uint64_t seed) {
    std::vector<ComponentTruth> comps{
        {"f1", [](double t) { return 1.0 + 0.5 * std::cos(t); },
         [](double t) { return 2.0 * t; },
         [](double) { return 2.0; }},
        {"f2", [](double t) { return 2.0 * std::exp(-0.1 * t); },
         [](double t) { return 3.0 * t + 0.25 * std::sin(1.4 * t); },
         [](double t) { return 3.0 + 0.35 * std::cos(1.4 * t); }},
        {"f3", [](double t) { return 1.0 + 0.5 * std::cos(2.5 * t); },
         [](double t) { return 5.0 * t + 2.0 * std::pow(t, 1.3); },
         [](double t) { return 5.0 + 2.6 * std::pow(t, 0.3); }},
    };
    constexpr double kStep = 11.0 / 300.0;
    constexpr double kJitter = 11.0 / 310.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> times, values;
    for (std::size_t m = 0;; ++m) {
        const double t = kStep * static_cast<double>(m) + kJitter * unit(rng);
        if (t > kDuration) break;
        double v = 0.0;
        for (const auto& c : comps) v += c.value(t);
        times.push_back(t);
        values.push_back(v);
    }
    return {NonuniformSeries(std::move(times), std::move(values)), comps};
}

SyntheticSignal gen_tone(double alpha, std::size_t n, double fs) {
    if (!(alpha > 0.0) || !(fs > 0.0)) throw std::invalid_argument("gen_tone: alpha and fs must be positive");
    std::vector<ComponentTruth> comps{
        {"tone", [](double) { return 1.0; }, [alpha](double t) { return alpha * t; }, [alpha](double) { return alpha; }},
    };
    return {sample_components(comps, n, static_cast<double>(n) / fs), comps, ""};
}

SyntheticSignal gen_tone_sum(const std::vector<double>& periods, const std::vector<double>& amplitudes,
                             std::size_t n, double dt) {
    if (periods.size() != amplitudes.size()) throw std::invalid_argument("gen_tone_sum: size mismatch");
    std::vector<ComponentTruth> comps;
    for (std::size_t k = 0; k < periods.size(); ++k) {
        const double f = 1.0 / periods[k];
        const double a = amplitudes[k];
        comps.push_back({"period " + std::to_string(periods[k]), [a](double) { return a; },
                         [f](double t) { return f * t; }, [f](double) { return f; }});
    }
    return {sample_components(comps, n, static_cast<double>(n) * dt), comps, ""};
}

double separation(const std::vector<ComponentTruth>& components, double t_lo, double t_hi, std::size_t samples) {
    if (components.size() < 2) return std::numeric_limits<double>::infinity();
    double worst = std::numeric_limits<double>::infinity();
    std::vector<double> ifs(components.size());
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = t_lo + (t_hi - t_lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
        for (std::size_t k = 0; k < components.size(); ++k) ifs[k] = components[k].if_curve(t);
        std::sort(ifs.begin(), ifs.end());
        for (std::size_t k = 1; k < ifs.size(); ++k) worst = std::min(worst, (ifs[k] - ifs[k - 1]) / (ifs[k] + ifs[k - 1]));
    }
    return worst;
}

double snr_db(std::span<const double> clean, double noise_sigma) {
    double power = 0.0;
    for (double v : clean) power += v * v;
    power /= static_cast<double>(clean.size());
    return 10.0 * std::log10(power / (noise_sigma * noise_sigma));
}

}  // namespace synsq
