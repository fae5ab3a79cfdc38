#include "synsq/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string_view>

#include "synsq/error.hpp"

namespace synsq {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    if (text.empty()) return false;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && end == text.data() + text.size();
}

// Shortest decimal form that reads back to the same double.
std::string fmt(double x) {
    char buf[32];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, x);
        double back = 0.0;
        if (parse_double(buf, back) && back == x) break;
    }
    return buf;
}

std::string hex(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%a", x);
    return buf;
}

std::ifstream open_input(const std::string& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream in(path, mode);
    if (!in) throw ParseError("cannot open " + path, 0);
    return in;
}

void put_le(std::ostream& out, double x) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    char bytes[8];
    for (char& b : bytes) {
        b = static_cast<char>(bits & 0xffu);
        bits >>= 8;
    }
    out.write(bytes, 8);
}

double get_le(std::istream& in) {
    unsigned char bytes[8];
    if (!in.read(reinterpret_cast<char*>(bytes), 8)) throw ParseError("plane file: truncated coefficient data", 0);
    std::uint64_t bits = 0;
    for (int k = 7; k >= 0; --k) bits = (bits << 8) | bytes[k];
    return std::bit_cast<double>(bits);
}

}  // namespace

SeriesTable parse_series_csv(std::istream& in) {
    SeriesTable table;
    std::string line;
    std::size_t line_no = 0;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto comma = text.find(',');
        const bool two_fields = comma != std::string_view::npos && text.find(',', comma + 1) == std::string_view::npos;
        double t = 0.0, v = 0.0;
        const bool t_ok = two_fields && parse_double(text.substr(0, comma), t);
        const bool v_ok = two_fields && parse_double(text.substr(comma + 1), v);
        if (!t_ok || !v_ok) {
            // A header names both columns; a half-numeric line is a broken row.
            if (header_allowed && two_fields && !t_ok && !v_ok) {
                header_allowed = false;
                continue;
            }
            throw ParseError("expected two numeric columns 'time,value'", line_no);
        }
        header_allowed = false;
        if (!std::isfinite(t) || !std::isfinite(v)) throw ParseError("non-finite number", line_no);
        if (!table.times.empty() && !(t > table.times.back())) {
            throw ParseError("times must be strictly increasing", line_no);
        }
        table.times.push_back(t);
        table.values.push_back(v);
    }
    if (table.times.empty()) throw ParseError("no data rows", 0);
    return table;
}

SeriesTable read_series_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    return parse_series_csv(in);
}

LoadedSeries to_uniform(const SeriesTable& table) {
    const std::size_t n = table.times.size();
    if (n < 2) throw ParseError("need at least two samples", 0);
    const double step = (table.times.back() - table.times.front()) / static_cast<double>(n - 1);
    bool uniform = true;
    for (std::size_t i = 1; i < n && uniform; ++i) {
        uniform = std::abs(table.times[i] - table.times[i - 1] - step) <= 1e-6 * step;
    }
    if (uniform) return {UniformSeries(table.times.front(), step, table.values), false};
    if (n < 4) throw ParseError("irregular timestamps need at least four samples", 0);
    return {spline_resample(NonuniformSeries(table.times, table.values), step), true};
}

LoadedSeries load_series(const std::string& path) { return to_uniform(read_series_csv(path)); }

void write_series_csv(std::ostream& out, const UniformSeries& series, const std::string& value_name) {
    out << "time," << value_name << '\n';
    for (std::size_t m = 0; m < series.size(); ++m) out << fmt(series.time(m)) << ',' << fmt(series[m]) << '\n';
}

void write_series_csv(std::ostream& out, const NonuniformSeries& series, const std::string& value_name) {
    out << "time," << value_name << '\n';
    for (std::size_t m = 0; m < series.size(); ++m) {
        out << fmt(series.times()[m]) << ',' << fmt(series.values()[m]) << '\n';
    }
}

void write_truth_csv(std::ostream& out, const std::vector<double>& times,
                     const std::vector<ComponentTruth>& components, const std::string& note) {
    std::size_t start = 0;
    while (start < note.size()) {
        const auto end = std::min(note.find('\n', start), note.size());
        out << "# " << note.substr(start, end - start) << '\n';
        start = end + 1;
    }
    out << 't';
    for (const auto& c : components) out << ",value_" << c.name << ",if_" << c.name << ",amplitude_" << c.name;
    out << '\n';
    for (const double t : times) {
        out << fmt(t);
        for (const auto& c : components) out << ',' << fmt(c.value(t)) << ',' << fmt(c.if_curve(t)) << ',' << fmt(c.amplitude(t));
        out << '\n';
    }
}

void write_sst_csv(std::ostream& out, const SstPlane& sst) {
    out << "freq\\time";
    for (std::size_t m = 0; m < sst.cols(); ++m) out << ',' << fmt(sst.time(m));
    out << '\n';
    for (std::size_t l = 0; l < sst.rows(); ++l) {
        out << fmt(sst.axis.freqs[l]);
        for (std::size_t m = 0; m < sst.cols(); ++m) {
            out << ',' << fmt(std::abs(sst.coeffs(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m))));
        }
        out << '\n';
    }
}

void write_pgm(std::ostream& out, const SstPlane& sst, double dynamic_range_db) {
    if (!(dynamic_range_db > 0.0)) throw std::invalid_argument("write_pgm: dynamic range must be positive");
    const std::size_t rows = sst.rows(), cols = sst.cols();
    const double peak = rows && cols ? sst.coeffs.cwiseAbs().maxCoeff() : 0.0;
    out << "P5\n"
        << "# synsq |T| heatmap: 20 log10 |T|, top " << fmt(dynamic_range_db) << " dB, peak " << fmt(peak) << '\n'
        << "# rows: frequency " << (rows ? fmt(sst.axis.freqs.back()) : "0") << " (top) to "
        << (rows ? fmt(sst.axis.freqs.front()) : "0") << " (bottom), log spaced\n"
        << "# columns: time " << fmt(sst.t0) << " step " << fmt(sst.dt) << '\n'
        << cols << ' ' << rows << "\n255\n";
    std::vector<char> pixels(cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto l = static_cast<Eigen::Index>(rows - 1 - r);
        for (std::size_t m = 0; m < cols; ++m) {
            const double mag = std::abs(sst.coeffs(l, static_cast<Eigen::Index>(m)));
            unsigned char value = 0;
            if (peak > 0.0 && mag > 0.0) {
                const double db = 20.0 * std::log10(mag / peak);
                if (db > -dynamic_range_db) {
                    value = static_cast<unsigned char>(std::clamp(std::lround(1.0 + 254.0 * (1.0 + db / dynamic_range_db)), 1L, 255L));
                }
            }
            pixels[m] = static_cast<char>(value);
        }
        out.write(pixels.data(), static_cast<std::streamsize>(cols));
    }
}

void write_sst_plane(std::ostream& out, const SstPlane& sst) {
    out << "synsq-sst 1\n"
        << "rows=" << sst.rows() << '\n'
        << "cols=" << sst.cols() << '\n'
        << "t0=" << hex(sst.t0) << '\n'
        << "dt=" << hex(sst.dt) << '\n'
        << "voices=" << sst.voices << '\n'
        << "transform_length=" << sst.transform_length << '\n'
        << "wavelet=" << to_string(sst.wavelet.kind()) << '\n'
        << "mu=" << hex(sst.wavelet.mu()) << '\n'
        << "sigma=" << hex(sst.wavelet.sigma()) << '\n'
        << "norm=" << hex(sst.wavelet.norm()) << '\n'
        << "data\n";
    for (Eigen::Index l = 0; l < sst.coeffs.rows(); ++l) {
        for (Eigen::Index m = 0; m < sst.coeffs.cols(); ++m) {
            put_le(out, sst.coeffs(l, m).real());
            put_le(out, sst.coeffs(l, m).imag());
        }
    }
}

SstPlane read_sst_plane(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line) || trim(line) != "synsq-sst 1") throw ParseError("not a synsq plane file", 1);
    std::map<std::string, std::string, std::less<>> meta;
    while (true) {
        ++line_no;
        if (!std::getline(in, line)) throw ParseError("plane file: missing data section", line_no);
        const std::string_view text = trim(line);
        if (text == "data") break;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) throw ParseError("plane file: expected key=value", line_no);
        meta[std::string(trim(text.substr(0, eq)))] = std::string(trim(text.substr(eq + 1)));
    }
    const auto number = [&](const char* key) {
        const auto it = meta.find(key);
        if (it == meta.end()) throw ParseError(std::string("plane file: missing ") + key, 0);
        // from_chars does not take the 0x prefix that %a writes.
        const char* text = it->second.c_str();
        char* end = nullptr;
        const double value = std::strtod(text, &end);
        if (end == text || *end != '\0') throw ParseError(std::string("plane file: bad value for ") + key, 0);
        return value;
    };
    const auto count = [&](const char* key) {
        const double value = number(key);
        if (!(value >= 0.0) || value != std::floor(value)) throw ParseError(std::string("plane file: bad count ") + key, 0);
        return static_cast<std::size_t>(value);
    };

    SstPlane sst;
    const std::size_t rows = count("rows"), cols = count("cols");
    sst.t0 = number("t0");
    sst.dt = number("dt");
    sst.voices = count("voices");
    sst.transform_length = count("transform_length");
    const auto kind_it = meta.find("wavelet");
    if (kind_it == meta.end()) throw ParseError("plane file: missing wavelet", 0);
    try {
        sst.wavelet = WaveletSpec::make(parse_wavelet_kind(kind_it->second), number("mu"), number("sigma"), number("norm"));
        sst.axis = make_frequency_axis(sst.transform_length, rows, sst.dt);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("plane file: ") + e.what(), 0);
    }
    sst.coeffs.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index l = 0; l < sst.coeffs.rows(); ++l) {
        for (Eigen::Index m = 0; m < sst.coeffs.cols(); ++m) {
            const double re = get_le(in);
            const double im = get_le(in);
            sst.coeffs(l, m) = Complex(re, im);
        }
    }
    return sst;
}

void write_ridge_csv(std::ostream& out, const SstPlane& sst, const Ridge& ridge) {
    if (ridge.bins.size() != sst.cols()) throw std::invalid_argument("write_ridge_csv: ridge length differs from plane");
    out << "time,frequency\n";
    for (std::size_t m = 0; m < ridge.bins.size(); ++m) {
        out << fmt(sst.time(m)) << ',' << fmt(sst.axis.freqs[ridge.bins[m]]) << '\n';
    }
}

}  // namespace synsq
