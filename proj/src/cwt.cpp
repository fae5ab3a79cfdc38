#include "synsq/cwt.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"
#include "synsq/parallel.hpp"

namespace synsq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// exp(2 pi i k / n) for k = 0 .. n - 1.
std::vector<Complex> roots_of_unity(std::size_t n) {
    std::vector<Complex> roots(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        roots[k] = {std::cos(angle), std::sin(angle)};
    }
    return roots;
}

}  // namespace

std::size_t octave_count(std::size_t n) {
    if (n < 4 || !std::has_single_bit(n)) {
        throw std::invalid_argument("transform length must be 2^(L+1) with L >= 1, got " + std::to_string(n));
    }
    return static_cast<std::size_t>(std::bit_width(n)) - 2;
}

std::vector<double> scale_grid(std::size_t n, std::size_t voices, double dt) {
    if (voices == 0) throw std::invalid_argument("scale_grid: voices must be >= 1");
    if (!(dt > 0.0)) throw std::invalid_argument("scale_grid: dt must be positive");
    const std::size_t count = octave_count(n) * voices;
    std::vector<double> scales(count);
    for (std::size_t j = 1; j <= count; ++j) {
        scales[j - 1] = std::exp2(static_cast<double>(j) / static_cast<double>(voices)) * dt;
    }
    return scales;
}

double dft_frequency(std::size_t m, std::size_t n, double dt) noexcept {
    const double k = m <= n / 2 ? static_cast<double>(m) : static_cast<double>(m) - static_cast<double>(n);
    return k / (static_cast<double>(n) * dt);
}

CwtPlane forward(const UniformSeries& series, const WaveletSpec& spec, std::size_t voices) {
    return forward(series, spec, voices, 0, series.size());
}

CwtPlane forward(const UniformSeries& series, const WaveletSpec& spec, std::size_t voices, std::size_t offset,
                 std::size_t length) {
    const std::size_t n = series.size();
    CwtPlane plane;
    plane.scales = scale_grid(n, voices, series.dt());
    if (length == 0 || offset + length > n) throw std::invalid_argument("forward: column window outside series");
    plane.t0 = series.time(offset);
    plane.dt = series.dt();
    plane.voices = voices;
    plane.transform_length = n;
    plane.wavelet = spec;

    const std::size_t rows = plane.scales.size();
    plane.coeffs.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(length));
    plane.derivative.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(length));

    const detail::FftPlan forward_plan(n, FFTW_FORWARD);
    const detail::FftPlan inverse_plan(n, FFTW_BACKWARD);

    detail::FftBuffer spectrum(n);
    {
        detail::FftBuffer samples(n);
        for (std::size_t m = 0; m < n; ++m) samples.data()[m] = series[m];
        forward_plan.execute(samples, spectrum);
    }

    const double dt = series.dt();
    const double inv_n = 1.0 / static_cast<double>(n);
    const double span = static_cast<double>(n) * dt;
    const Interval support = spec.support();
    const std::size_t nyquist = n / 2;

    parallel_for_chunks(rows, [&](std::size_t begin, std::size_t end) {
        detail::FftBuffer in(n), out(n);
        for (std::size_t j = begin; j < end; ++j) {
            const double a = plane.scales[j];
            const double root_a = std::sqrt(a);

            // psi_hat vanishes off its support, which also excludes every
            // non-positive frequency.
            const double first = std::max(1.0, std::floor(support.lo * span / a));
            const double last = std::min(static_cast<double>(nyquist), std::ceil(support.hi * span / a));
            // An empty range (first > last) leaves the row zero.
            const auto m_lo = static_cast<std::size_t>(std::min(first, static_cast<double>(nyquist) + 1.0));
            const auto m_hi = static_cast<std::size_t>(last);

            std::fill(in.data(), in.data() + n, Complex{});
            for (std::size_t m = m_lo; m <= m_hi; ++m) {
                const Complex psi = std::conj(eval_fourier(spec, a * dft_frequency(m, n, dt)));
                in.data()[m] = spectrum.data()[m] * root_a * psi;
            }
            inverse_plan.execute(in, out);
            auto w_row = plane.coeffs.row(static_cast<Eigen::Index>(j));
            for (std::size_t m = 0; m < length; ++m) w_row(static_cast<Eigen::Index>(m)) = out.data()[offset + m] * inv_n;

            for (std::size_t m = m_lo; m <= m_hi; ++m) {
                const double cyc = static_cast<double>(m) * inv_n / dt;
                in.data()[m] *= Complex(0.0, kTwoPi * cyc);
            }
            inverse_plan.execute(in, out);
            auto d_row = plane.derivative.row(static_cast<Eigen::Index>(j));
            for (std::size_t m = 0; m < length; ++m) d_row(static_cast<Eigen::Index>(m)) = out.data()[offset + m] * inv_n;
        }
    });
    return plane;
}

DirectRow cwt_direct_dft(const UniformSeries& series, const WaveletSpec& spec, double scale) {
    const std::size_t n = series.size();
    octave_count(n);
    if (!(scale > 0.0)) throw std::invalid_argument("cwt_direct_dft: scale must be positive");
    const double dt = series.dt();
    const std::vector<Complex> roots = roots_of_unity(n);

    std::vector<Complex> spectrum(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{};
        for (std::size_t m = 0; m < n; ++m) acc += series[m] * std::conj(roots[(k * m) % n]);
        spectrum[k] = acc;
    }

    std::vector<Complex> w_hat(n), dw_hat(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double xi = dft_frequency(k, n, dt);
        const Complex mult = std::sqrt(scale) * std::conj(eval_fourier(spec, scale * xi));
        w_hat[k] = spectrum[k] * mult;
        // Only the positive half can carry energy; use the per-sample cyclic
        // frequency k / n there.
        const double cyc = k <= n / 2 ? static_cast<double>(k) / static_cast<double>(n) / dt : xi;
        dw_hat[k] = w_hat[k] * Complex(0.0, kTwoPi * cyc);
    }

    DirectRow row{std::vector<Complex>(n), std::vector<Complex>(n)};
    for (std::size_t m = 0; m < n; ++m) {
        Complex w{}, dw{};
        for (std::size_t k = 0; k < n; ++k) {
            const Complex tw = roots[(k * m) % n];
            w += w_hat[k] * tw;
            dw += dw_hat[k] * tw;
        }
        row.coeffs[m] = w / static_cast<double>(n);
        row.derivative[m] = dw / static_cast<double>(n);
    }
    return row;
}

CwtPlane crop_columns(const CwtPlane& plane, std::size_t offset, std::size_t length) {
    if (length == 0 || offset + length > plane.cols()) throw std::invalid_argument("crop_columns: window outside plane");
    CwtPlane out;
    out.scales = plane.scales;
    out.t0 = plane.time(offset);
    out.dt = plane.dt;
    out.voices = plane.voices;
    out.transform_length = plane.transform_length;
    out.wavelet = plane.wavelet;
    const auto off = static_cast<Eigen::Index>(offset);
    const auto len = static_cast<Eigen::Index>(length);
    out.coeffs = plane.coeffs.middleCols(off, len);
    out.derivative = plane.derivative.middleCols(off, len);
    return out;
}

}  // namespace synsq
