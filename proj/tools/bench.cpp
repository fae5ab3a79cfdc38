#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

#include "synsq/metrics.hpp"
#include "synsq/pipeline.hpp"
#include "synsq/testsignals.hpp"

namespace synsq::cli {

namespace {

std::vector<double> truth_samples(const ComponentTruth& c, const UniformSeries& grid) {
    std::vector<double> out(grid.size());
    for (std::size_t m = 0; m < grid.size(); ++m) out[m] = c.value(grid.time(m));
    return out;
}

void report(std::vector<BenchRow>& rows, std::ostream& log, std::string suite, std::string name, std::string metric,
            double value) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-28s %-26s %.6g\n", name.c_str(), metric.c_str(), value);
    log << line;
    rows.push_back({std::move(suite), std::move(name), std::move(metric), value});
}

void tone_suite(std::vector<BenchRow>& rows, std::ostream& log) {
    log << "tone: 50 Hz, n = 1024, fs = 1024\n";
    const SyntheticSignal tone = gen_tone(50.0, 1024, 1024.0);
    const std::vector<double> clean = truth_samples(tone.components[0], tone.series);
    for (const WaveletKind kind : {WaveletKind::bump, WaveletKind::morlet, WaveletKind::mexican_hat}) {
        PipelineConfig cfg;
        cfg.wavelet = WaveletSpec::make_default(kind);
        const Analysis an = analyze(tone.series, cfg);
        const std::size_t center = bin_index(50.0, an.sst.axis);
        const Window window = central_window(an.sst.cols(), 0.9);

        double worst = 1.0, mean = 0.0;
        for (std::size_t m = window.begin; m < window.end; ++m) {
            const double c = column_concentration(an.sst, m, center, 3);
            worst = std::min(worst, c);
            mean += c / static_cast<double>(window.size());
        }
        const std::vector<Component> parts = decompose(an.sst, cfg);
        const std::string name(to_string(kind));
        report(rows, log, "tone", name, "concentration_min", worst);
        report(rows, log, "tone", name, "concentration_mean", mean);
        report(rows, log, "tone", name, "roundtrip_rel_rmse", relative_rmse(parts[0].signal.values(), clean, window));
    }
}

void robustness_suite(std::vector<BenchRow>& rows, std::ostream& log) {
    log << "robustness: bounded perturbations of a two-tone signal\n";
    const std::size_t n = 1024;
    const SyntheticSignal two = gen_tone_sum({1.0 / 8.0, 1.0 / 20.0}, {1.0, 1.0}, n, 1.0 / 128.0);
    PipelineConfig cfg;
    const Analysis base = analyze(two.series, cfg);
    const Complex r_psi = admissibility_constant(cfg.wavelet);
    const std::size_t split = nearest_bin(std::sqrt(8.0 * 20.0), base.sst.axis);
    const UniformSeries ref = invert_bins(base.sst, 0, split, r_psi);
    const Window window = central_window(n, 0.9);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<double> shape(n);
    for (double& x : shape) x = unit(rng);
    for (const double eps : {0.01, 0.02, 0.04, 0.08}) {
        std::vector<double> v(two.series.values().begin(), two.series.values().end());
        for (std::size_t m = 0; m < n; ++m) v[m] += eps * shape[m];
        const Analysis an = analyze(UniformSeries(two.series.t0(), two.series.dt(), v), cfg);
        const UniformSeries rec = invert_bins(an.sst, 0, split, r_psi);
        double err = 0.0;
        for (std::size_t m = window.begin; m < window.end; ++m) err = std::max(err, std::abs(rec[m] - ref[m]));
        report(rows, log, "robustness", "eps=" + std::to_string(eps).substr(0, 4), "sup_component_error", err);
    }

    log << "robustness: white noise on the three-component signal\n";
    for (const double variance : {0.0, 0.5, 1.0, 2.4}) {
        const SyntheticSignal sig = gen_s123(2048, std::sqrt(variance), 1);
        PipelineConfig noisy;
        noisy.ridge.search_band = Interval{4.0, 12.0};
        const Analysis an = analyze(sig.series, noisy);
        const Ridge ridge = decompose(an.sst, noisy).front().ridge;
        const Window w80 = central_window(an.sst.cols(), 0.8);
        double worst = 0.0;
        for (std::size_t m = w80.begin; m < w80.end; ++m) {
            const double truth = sig.components[2].if_curve(an.sst.time(m));
            worst = std::max(worst, std::abs(an.sst.axis.freqs[ridge.bins[m]] - truth) / truth);
        }
        const std::string name = "sigma^2=" + std::to_string(variance).substr(0, 3);
        report(rows, log, "robustness", name, "snr_db", variance > 0.0 ? snr_db(sample_components(sig.components, 2048, 10.0).values(), std::sqrt(variance)) : INFINITY);
        report(rows, log, "robustness", name, "s3_if_max_rel_error", worst);
    }
}

void scaling_suite(std::vector<BenchRow>& rows, std::ostream& log) {
    log << "scaling: analyze() wall time, best of 3, 32 voices\n";
    double previous = 0.0;
    for (std::size_t n = 1024; n <= 16384; n *= 2) {
        const SyntheticSignal sig = gen_s123(n, 0.0);
        PipelineConfig cfg;
        double best = INFINITY;
        for (int rep = 0; rep < 3; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            const Analysis an = analyze(sig.series, cfg);
            best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        }
        const std::string name = "n=" + std::to_string(n);
        report(rows, log, "scaling", name, "seconds", best);
        if (previous > 0.0) report(rows, log, "scaling", name, "ratio_to_half_n", best / previous);
        previous = best;
    }
}

}  // namespace

std::vector<BenchRow> run_bench(std::string_view suite, std::ostream& log) {
    std::vector<BenchRow> rows;
    if (suite == "tone") {
        tone_suite(rows, log);
    } else if (suite == "robustness") {
        robustness_suite(rows, log);
    } else if (suite == "scaling") {
        scaling_suite(rows, log);
    } else {
        throw std::invalid_argument("unknown bench suite '" + std::string(suite) + "' (tone, robustness, scaling)");
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "suite,case,metric,value\n";
    char value[32];
    for (const auto& r : rows) {
        std::snprintf(value, sizeof value, "%.17g", r.value);
        out << r.suite << ',' << r.name << ',' << r.metric << ',' << value << '\n';
    }
}

}  // namespace synsq::cli
