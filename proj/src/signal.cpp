#include "synsq/signal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include <lapacke.h>

namespace synsq {

UniformSeries::UniformSeries(double t0, double dt, std::vector<double> values)
    : t0_(t0), dt_(dt), values_(std::move(values)) {
    if (!(dt_ > 0.0) || !std::isfinite(dt_)) {
        throw std::invalid_argument("UniformSeries: dt must be positive and finite");
    }
    if (values_.empty()) throw std::invalid_argument("UniformSeries: no samples");
}

std::vector<double> UniformSeries::times() const {
    std::vector<double> t(values_.size());
    for (std::size_t m = 0; m < t.size(); ++m) t[m] = time(m);
    return t;
}

NonuniformSeries::NonuniformSeries(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {
    if (times_.size() != values_.size()) {
        throw std::invalid_argument("NonuniformSeries: times and values differ in length");
    }
    if (times_.size() < 4) {
        throw std::invalid_argument("NonuniformSeries: a cubic spline needs at least 4 samples");
    }
    for (std::size_t i = 1; i < times_.size(); ++i) {
        if (!(times_[i] > times_[i - 1])) {
            throw std::invalid_argument("NonuniformSeries: times must be strictly increasing (index " +
                                        std::to_string(i) + ")");
        }
    }
}

double NonuniformSeries::max_gap() const noexcept {
    double gap = 0.0;
    for (std::size_t i = 1; i < times_.size(); ++i) gap = std::max(gap, times_[i] - times_[i - 1]);
    return gap;
}

UniformSeries pad_reflect(const UniformSeries& series, std::size_t left, std::size_t right) {
    const std::size_t n = series.size();
    if ((left > 0 && left >= n) || (right > 0 && right >= n)) {
        throw std::invalid_argument("pad_reflect: pad length must be shorter than the series");
    }
    const auto v = series.values();
    std::vector<double> out;
    out.reserve(n + left + right);
    for (std::size_t k = left; k >= 1; --k) out.push_back(v[k]);
    out.insert(out.end(), v.begin(), v.end());
    for (std::size_t k = 1; k <= right; ++k) out.push_back(v[n - 1 - k]);
    return UniformSeries(series.t0() - static_cast<double>(left) * series.dt(), series.dt(),
                         std::move(out));
}

UniformSeries pad_reflect(const UniformSeries& series, std::size_t pad_len) {
    return pad_reflect(series, pad_len, pad_len);
}

UniformSeries crop(const UniformSeries& series, std::size_t offset, std::size_t length) {
    if (length == 0 || offset + length > series.size()) {
        throw std::invalid_argument("crop: window outside the series");
    }
    const auto v = series.values().subspan(offset, length);
    return UniformSeries(series.time(offset), series.dt(), std::vector<double>(v.begin(), v.end()));
}

PaddedSeries pad_for_transform(const UniformSeries& series, std::optional<std::size_t> pad_len) {
    const std::size_t n = series.size();
    if (n < 4) throw std::invalid_argument("pad_for_transform: need at least 4 samples");
    const std::size_t pad = pad_len.value_or(n / 2);
    UniformSeries padded = pad_reflect(series, pad);

    const std::size_t target = std::bit_ceil(padded.size());
    const std::size_t extra = target - padded.size();
    const std::size_t left = extra / 2;
    const std::size_t right = extra - left;
    return PaddedSeries{pad_reflect(padded, left, right), pad + left, n};
}

CubicSpline::CubicSpline(const NonuniformSeries& series)
    : knots_(series.times().begin(), series.times().end()),
      values_(series.values().begin(), series.values().end()),
      slopes_(knots_.size()) {
    // Solves for the knot derivatives. Interior rows enforce C2 continuity; the
    // first and last rows make the third derivative continuous across the
    // second and second-to-last knots (not-a-knot).
    const std::size_t n = knots_.size();
    std::vector<double> dx(n - 1), secant(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        dx[i] = knots_[i + 1] - knots_[i];
        secant[i] = (values_[i + 1] - values_[i]) / dx[i];
    }

    std::vector<double> lower(n - 1), diag(n), upper(n - 1);
    std::vector<double>& rhs = slopes_;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        lower[i - 1] = dx[i];
        diag[i] = 2.0 * (dx[i - 1] + dx[i]);
        upper[i] = dx[i - 1];
        rhs[i] = 3.0 * (dx[i] * secant[i - 1] + dx[i - 1] * secant[i]);
    }

    const double d0 = knots_[2] - knots_[0];
    diag[0] = dx[1];
    upper[0] = d0;
    rhs[0] = ((dx[0] + 2.0 * d0) * dx[1] * secant[0] + dx[0] * dx[0] * secant[1]) / d0;

    const double d1 = knots_[n - 1] - knots_[n - 3];
    diag[n - 1] = dx[n - 3];
    lower[n - 2] = d1;
    rhs[n - 1] = (dx[n - 2] * dx[n - 2] * secant[n - 3] + (2.0 * d1 + dx[n - 2]) * dx[n - 3] * secant[n - 2]) / d1;

    const lapack_int info = LAPACKE_dgtsv(LAPACK_COL_MAJOR, static_cast<lapack_int>(n), 1, lower.data(),
                                          diag.data(), upper.data(), rhs.data(), static_cast<lapack_int>(n));
    if (info != 0) throw std::invalid_argument("CubicSpline: singular knot system");
}

double CubicSpline::operator()(double t) const {
    const std::size_t n = knots_.size();
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
    std::size_t i = it == knots_.begin() ? 0 : static_cast<std::size_t>(it - knots_.begin()) - 1;
    i = std::min(i, n - 2);

    // Cubic Hermite form on [x_i, x_{i+1}].
    const double h = knots_[i + 1] - knots_[i];
    const double s = (t - knots_[i]) / h;
    const double h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
    const double h10 = s * (1.0 - s) * (1.0 - s);
    const double h01 = s * s * (3.0 - 2.0 * s);
    const double h11 = s * s * (s - 1.0);
    return h00 * values_[i] + h10 * h * slopes_[i] + h01 * values_[i + 1] + h11 * h * slopes_[i + 1];
}

UniformSeries spline_resample(const NonuniformSeries& series, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("spline_resample: dt must be positive");
    const CubicSpline spline(series);
    const double first = series.times().front();
    const double last = series.times().back();
    const auto count = static_cast<std::size_t>(std::floor((last - first) / dt * (1.0 + 1e-12))) + 1;
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) out[k] = spline(first + static_cast<double>(k) * dt);
    return UniformSeries(first, dt, std::move(out));
}

UniformSeries add_white_noise(const UniformSeries& series, double sigma, std::uint64_t seed) {
    if (!(sigma >= 0.0)) throw std::invalid_argument("add_white_noise: sigma must be >= 0");
    std::vector<double> out(series.values().begin(), series.values().end());
    if (sigma > 0.0) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> noise(0.0, sigma);
        for (double& v : out) v += noise(rng);
    }
    return UniformSeries(series.t0(), series.dt(), std::move(out));
}

double median(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("median: empty input");
    std::vector<double> v(values.begin(), values.end());
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    double med = v[mid];
    if (v.size() % 2 == 0) {
        const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
        med = 0.5 * (med + lower);
    }
    return med;
}

double mad(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mad: empty input");
    const double center = median(values);
    std::vector<double> dev(values.size());
    std::transform(values.begin(), values.end(), dev.begin(), [center](double x) { return std::abs(x - center); });
    return median(dev);
}

}  // namespace synsq
