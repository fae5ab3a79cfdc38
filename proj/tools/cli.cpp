#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "bench.hpp"
#include "synsq/error.hpp"
#include "synsq/io.hpp"
#include "synsq/metrics.hpp"
#include "synsq/parallel.hpp"
#include "synsq/pipeline.hpp"
#include "synsq/testsignals.hpp"

namespace synsq::cli {

namespace {

struct Settings {
    std::size_t voices = 32;
    std::string wavelet = "bump";
    double mu = 0.0;
    double sigma = 0.0;
    std::string gamma = "auto";
    std::string pad = "auto";
    std::size_t threads = 0;
    double smoothness = 2.0;
    std::size_t jump_cap = 3;
    std::size_t halfwidth = 0;
    std::size_t components = 1;
    std::string search_band;

    CLI::Option* mu_opt = nullptr;
    CLI::Option* sigma_opt = nullptr;
    CLI::Option* halfwidth_opt = nullptr;
};

std::string env_name(const std::string& flag) {
    std::string name = "SYNSQ_";
    for (const char c : flag.substr(flag.find_first_not_of('-'))) {
        name += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return name;
}

template <typename T>
CLI::Option* add(CLI::App& app, const std::string& flag, T& target, const std::string& help) {
    return app.add_option(flag, target, help)->envname(env_name(flag))->capture_default_str();
}

double parse_number(const std::string& text, const std::string& what) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw std::invalid_argument(what + ": '" + text + "' is not a number");
    }
    return value;
}

Interval parse_interval(const std::string& text, const std::string& what) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument(what + ": expected lo:hi, got '" + text + "'");
    const Interval band{parse_number(text.substr(0, colon), what), parse_number(text.substr(colon + 1), what)};
    if (!(band.lo > 0.0 && band.lo < band.hi)) throw std::invalid_argument(what + ": need 0 < lo < hi");
    return band;
}

PipelineConfig make_config(const Settings& s) {
    if (s.voices == 0) throw std::invalid_argument("--voices must be >= 1");
    PipelineConfig cfg;
    cfg.voices = s.voices;
    const WaveletKind kind = parse_wavelet_kind(s.wavelet);
    const WaveletSpec defaults = WaveletSpec::make_default(kind);
    cfg.wavelet = WaveletSpec::make(kind, s.mu_opt->count() ? s.mu : defaults.mu(),
                                    s.sigma_opt->count() ? s.sigma : defaults.sigma());
    if (s.gamma != "auto") {
        const double g = parse_number(s.gamma, "--gamma");
        if (g < 0.0) throw std::invalid_argument("--gamma must be >= 0");
        cfg.gamma = g;
    }
    if (s.pad != "auto") {
        const double p = parse_number(s.pad, "--pad");
        if (p < 0.0 || p != std::floor(p)) throw std::invalid_argument("--pad must be a non-negative integer");
        cfg.pad = static_cast<std::size_t>(p);
    }
    if (!(s.smoothness >= 0.0)) throw std::invalid_argument("--smoothness must be >= 0");
    if (s.jump_cap == 0) throw std::invalid_argument("--jump-cap must be >= 1");
    if (s.components == 0) throw std::invalid_argument("--components must be >= 1");
    cfg.ridge.smoothness = s.smoothness;
    cfg.ridge.jump_cap = s.jump_cap;
    cfg.ridge.components = s.components;
    if (s.halfwidth_opt->count()) cfg.ridge.band_halfwidth = s.halfwidth;
    if (!s.search_band.empty()) cfg.ridge.search_band = parse_interval(s.search_band, "--search-band");
    return cfg;
}

std::ofstream open_output(const std::string& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream out(path, mode);
    if (!out) throw std::invalid_argument("cannot write " + path);
    return out;
}

// Truth sidecar columns keyed by header name.
std::map<std::string, std::vector<double>> read_truth(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    std::vector<std::string> names;
    std::map<std::string, std::vector<double>> columns;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
        if (names.empty()) {
            names = cells;
            continue;
        }
        if (cells.size() != names.size()) throw ParseError("truth file: wrong number of columns", line_no);
        for (std::size_t k = 0; k < cells.size(); ++k) columns[names[k]].push_back(parse_number(cells[k], "truth file"));
    }
    if (names.empty() || columns.empty()) throw ParseError("truth file: no data rows", 0);
    return columns;
}

void report_against_truth(const std::string& path, const std::vector<Component>& parts, const SstPlane& sst,
                          std::ostream& out, std::ostream& err) {
    const auto columns = read_truth(path);
    const auto t_it = columns.find("t");
    if (t_it == columns.end() || t_it->second.size() != sst.cols()) {
        err << "warning: truth file does not share the plane's time grid; skipping comparison\n";
        return;
    }
    for (std::size_t m = 0; m < sst.cols(); ++m) {
        if (std::abs(t_it->second[m] - sst.time(m)) > 1e-6 * sst.dt) {
            err << "warning: truth file does not share the plane's time grid; skipping comparison\n";
            return;
        }
    }
    const Window window = central_window(sst.cols(), 0.9);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        double ridge_mean = 0.0;
        for (std::size_t m = window.begin; m < window.end; ++m) ridge_mean += sst.axis.freqs[parts[k].ridge.bins[m]];
        ridge_mean /= static_cast<double>(window.size());
        std::string best;
        double best_gap = INFINITY;
        for (const auto& [name, values] : columns) {
            if (name.rfind("if_", 0) != 0) continue;
            double mean = 0.0;
            for (std::size_t m = window.begin; m < window.end; ++m) mean += values[m];
            mean /= static_cast<double>(window.size());
            const double gap = std::abs(std::log(mean / ridge_mean));
            if (gap < best_gap) {
                best_gap = gap;
                best = name.substr(3);
            }
        }
        const auto v_it = columns.find("value_" + best);
        if (best.empty() || v_it == columns.end()) continue;
        out << "component " << k + 1 << " ~ " << best << ": relative RMSE (central 90%) "
            << relative_rmse(parts[k].signal.values(), v_it->second, window) << '\n';
    }
}

int cmd_synth(const std::string& kind, std::size_t n, double noise, std::uint64_t seed, double alpha, double fs,
              const std::vector<double>& periods, const std::vector<double>& amplitudes, double dt,
              const std::string& output, std::string truth_path, std::ostream& out) {
    if (truth_path.empty()) {
        const auto dot = output.rfind('.');
        truth_path = (dot == std::string::npos ? output : output.substr(0, dot)) + "_truth.csv";
    }
    std::ofstream data = open_output(output);
    std::ofstream truth = open_output(truth_path);
    if (kind == "nonuniform") {
        const NonuniformSignal sig = gen_nonuniform(seed);
        write_series_csv(data, sig.series);
        write_truth_csv(truth, std::vector<double>(sig.series.times().begin(), sig.series.times().end()),
                        sig.components, "irregular sample times");
        out << "wrote " << sig.series.size() << " irregular samples to " << output << '\n';
        return kOk;
    }
    SyntheticSignal sig = [&] {
        if (kind == "fig1") return gen_fig1(n);
        if (kind == "s123") return gen_s123(n, noise, seed);
        if (kind == "tone") return gen_tone(alpha, n, fs);
        if (kind == "tones") {
            std::vector<double> amps = amplitudes;
            if (amps.empty()) amps.assign(periods.size(), 1.0);
            if (periods.empty()) throw std::invalid_argument("--periods is required for 'tones'");
            return gen_tone_sum(periods, amps, n, dt);
        }
        throw std::invalid_argument("unknown signal '" + kind + "'");
    }();
    if (noise > 0.0 && kind != "s123") sig.series = add_white_noise(sig.series, noise, seed);
    write_series_csv(data, sig.series);
    const std::vector<double> times = sig.series.times();
    write_truth_csv(truth, times, sig.components, sig.note);
    out << "wrote " << sig.series.size() << " samples to " << output << ", truth to " << truth_path << '\n';
    return kOk;
}

int cmd_analyze(const Settings& s, const std::string& input, const std::string& prefix, std::ostream& out) {
    const PipelineConfig cfg = make_config(s);
    const LoadedSeries loaded = load_series(input);
    if (loaded.series.size() < 4) throw std::invalid_argument("need at least 4 samples");
    const Analysis an = analyze(loaded.series, cfg);

    std::ofstream plane = open_output(prefix + ".sst", std::ios::out | std::ios::binary);
    write_sst_plane(plane, an.sst);
    std::ofstream csv = open_output(prefix + "_sst.csv");
    write_sst_csv(csv, an.sst);
    std::ofstream pgm = open_output(prefix + ".pgm", std::ios::out | std::ios::binary);
    write_pgm(pgm, an.sst);

    out << "samples " << loaded.series.size() << (loaded.resampled ? " (resampled from irregular times)" : "")
        << ", dt " << loaded.series.dt() << '\n'
        << "wavelet " << cfg.wavelet.describe() << ", voices " << cfg.voices << ", bins " << an.sst.rows() << " ("
        << an.sst.axis.freqs.front() << " to " << an.sst.axis.freqs.back() << ")\n"
        << "gamma " << an.gamma << ", support " << an.phase.support_size() << " of "
        << an.phase.rows() * an.phase.cols() << " coefficients\n"
        << "wrote " << prefix << ".sst, " << prefix << "_sst.csv, " << prefix << ".pgm\n";
    return kOk;
}

int cmd_reconstruct(const Settings& s, const std::string& plane_path, const std::vector<std::string>& bands,
                    const std::string& prefix, const std::string& truth, std::ostream& out, std::ostream& err) {
    const PipelineConfig cfg = make_config(s);
    std::ifstream in(plane_path, std::ios::in | std::ios::binary);
    if (!in) throw ParseError("cannot open " + plane_path, 0);
    const SstPlane sst = read_sst_plane(in);
    const Complex r_psi = admissibility_constant(sst.wavelet);

    if (!bands.empty()) {
        std::size_t index = 0;
        for (const std::string& spec : bands) {
            ++index;
            UniformSeries part = [&] {
                if (spec == "full") return invert_all(sst, r_psi);
                Interval band = parse_interval(spec, "--band");
                const double lo = sst.axis.freqs.front(), hi = sst.axis.freqs.back();
                if (band.lo < lo || band.hi > hi) {
                    err << "warning: band " << spec << " clamped to [" << lo << ", " << hi << "]\n";
                    band = {std::clamp(band.lo, lo, hi), std::clamp(band.hi, lo, hi)};
                }
                return invert_bins(sst, nearest_bin(band.lo, sst.axis), nearest_bin(band.hi, sst.axis), r_psi);
            }();
            const std::string path = prefix + (spec == "full" ? std::string("_full") : "_band" + std::to_string(index)) + ".csv";
            std::ofstream csv = open_output(path);
            write_series_csv(csv, part);
            out << "band " << spec << " -> " << path << '\n';
        }
        return kOk;
    }

    const std::vector<Component> parts = decompose(sst, cfg);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const std::string base = prefix + "_" + std::to_string(k + 1);
        std::ofstream csv = open_output(base + ".csv");
        write_series_csv(csv, parts[k].signal);
        std::ofstream ridge = open_output(base + "_ridge.csv");
        write_ridge_csv(ridge, sst, parts[k].ridge);
        double mean = 0.0;
        for (const std::size_t b : parts[k].ridge.bins) mean += sst.axis.freqs[b];
        out << "component " << k + 1 << ": mean ridge frequency " << mean / static_cast<double>(sst.cols()) << " -> "
            << base << ".csv\n";
    }
    if (!truth.empty()) report_against_truth(truth, parts, sst, out, err);
    return kOk;
}

int cmd_denoise(const Settings& s, const std::string& input, const std::string& output, std::ostream& out) {
    const PipelineConfig cfg = make_config(s);
    const LoadedSeries loaded = load_series(input);
    if (loaded.series.size() < 4) throw std::invalid_argument("need at least 4 samples");
    const UniformSeries clean = denoise(loaded.series, cfg);
    std::ofstream csv = open_output(output);
    write_series_csv(csv, clean);
    out << "wrote " << clean.size() << " samples to " << output << '\n';
    return kOk;
}

int cmd_bench(const std::string& suite, const std::string& output, std::ostream& out) {
    const std::vector<BenchRow> rows = run_bench(suite, out);
    if (!output.empty()) {
        std::ofstream csv = open_output(output);
        write_bench_csv(csv, rows);
    }
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wavelet synchrosqueezing: analysis, ridge extraction and component reconstruction", "synsq"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key=value file");
    app.allow_config_extras(CLI::config_extras_mode::error);

    Settings s;
    add(app, "--voices", s.voices, "Voices per octave");
    add(app, "--wavelet", s.wavelet, "Mother wavelet: bump, morlet, mexican-hat");
    s.mu_opt = add(app, "--mu", s.mu, "Wavelet centre parameter (kind default when omitted)");
    s.sigma_opt = add(app, "--sigma", s.sigma, "Wavelet width parameter (kind default when omitted)");
    add(app, "--gamma", s.gamma, "Hard threshold on |W|: a value or 'auto'");
    add(app, "--pad", s.pad, "Reflection padding per side: a count or 'auto' (n/2)");
    add(app, "--threads", s.threads, "Worker thread cap (0 = all cores)");
    add(app, "--smoothness", s.smoothness, "Ridge jump penalty relative to the mean column peak of |T|^2");
    add(app, "--jump-cap", s.jump_cap, "Largest ridge step in bins");
    s.halfwidth_opt = add(app, "--halfwidth", s.halfwidth, "Bins on each side of a ridge used for inversion");
    add(app, "--components", s.components, "Number of ridges to extract");
    add(app, "--search-band", s.search_band, "Confine ridges to lo:hi (signal frequency units)");

    auto* synth = app.add_subcommand("synth", "Write a synthetic test signal and its truth sidecar");
    std::string kind = "s123", synth_out, truth_out;
    std::size_t n = 2048;
    double noise = 0.0, alpha = 50.0, fs = 1024.0, dt = 1.0;
    std::uint64_t seed = 1;
    std::vector<double> periods, amplitudes;
    synth->add_option("signal", kind, "fig1, s123, nonuniform, tone, tones")->capture_default_str();
    synth->add_option("-o,--output", synth_out, "Series CSV")->required();
    synth->add_option("--truth", truth_out, "Truth CSV (default: <output>_truth.csv)");
    synth->add_option("-n,--samples", n, "Sample count")->capture_default_str();
    synth->add_option("--noise", noise, "Standard deviation of added white noise")->capture_default_str();
    synth->add_option("--seed", seed, "Noise / jitter seed")->capture_default_str();
    synth->add_option("--alpha", alpha, "Tone frequency")->capture_default_str();
    synth->add_option("--fs", fs, "Tone sampling rate")->capture_default_str();
    synth->add_option("--periods", periods, "Tone periods for 'tones'")->delimiter(',');
    synth->add_option("--amplitudes", amplitudes, "Tone amplitudes for 'tones'")->delimiter(',');
    synth->add_option("--dt", dt, "Sample step for 'tones'")->capture_default_str();

    auto* analyze_cmd = app.add_subcommand("analyze", "Synchrosqueeze a CSV series; writes .sst, _sst.csv and .pgm");
    std::string analyze_in, analyze_prefix;
    analyze_cmd->add_option("input", analyze_in, "Series CSV (time,value)")->required();
    analyze_cmd->add_option("-o,--output", analyze_prefix, "Output prefix")->required();

    auto* recon = app.add_subcommand("reconstruct", "Extract ridges or invert bands of a saved plane");
    std::string plane_in, recon_prefix, recon_truth;
    std::vector<std::string> bands;
    recon->add_option("plane", plane_in, "Plane file written by analyze")->required();
    recon->add_option("-o,--output", recon_prefix, "Output prefix")->required();
    recon->add_option("--band", bands, "'full' or lo:hi; repeatable. Without it ridges are extracted");
    recon->add_option("--truth", recon_truth, "Truth CSV from synth; reports per-component RMSE");

    auto* denoise_cmd = app.add_subcommand("denoise", "Hard-threshold wavelet shrinkage of a CSV series");
    std::string denoise_in, denoise_out;
    denoise_cmd->add_option("input", denoise_in, "Series CSV")->required();
    denoise_cmd->add_option("-o,--output", denoise_out, "Output CSV")->required();

    auto* bench = app.add_subcommand("bench", "Run a benchmark suite: tone, robustness, scaling");
    std::string suite, bench_out;
    bench->add_option("suite", suite, "Suite name")->required();
    bench->add_option("-o,--output", bench_out, "Metrics CSV");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kBadInput;
    }

    try {
        set_max_threads(s.threads);
        if (synth->parsed()) {
            return cmd_synth(kind, n, noise, seed, alpha, fs, periods, amplitudes, dt, synth_out, truth_out, out);
        }
        if (analyze_cmd->parsed()) return cmd_analyze(s, analyze_in, analyze_prefix, out);
        if (recon->parsed()) return cmd_reconstruct(s, plane_in, bands, recon_prefix, recon_truth, out, err);
        if (denoise_cmd->parsed()) return cmd_denoise(s, denoise_in, denoise_out, out);
        if (bench->parsed()) return cmd_bench(suite, bench_out, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return kBadInput;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace synsq::cli
