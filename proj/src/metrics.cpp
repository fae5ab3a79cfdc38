#include "synsq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace synsq {

Window central_window(std::size_t n, double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0)) throw std::invalid_argument("central_window: fraction must be in (0, 1]");
    const auto trim = static_cast<std::size_t>(std::floor(static_cast<double>(n) * (1.0 - fraction) / 2.0));
    return {trim, n - trim};
}

double relative_rmse(std::span<const double> estimate, std::span<const double> reference, Window window) {
    if (estimate.size() != reference.size()) throw std::invalid_argument("relative_rmse: length mismatch");
    if (window.end > estimate.size() || window.begin >= window.end) throw std::invalid_argument("relative_rmse: bad window");
    double err = 0.0, ref = 0.0;
    for (std::size_t m = window.begin; m < window.end; ++m) {
        const double d = estimate[m] - reference[m];
        err += d * d;
        ref += reference[m] * reference[m];
    }
    if (!(ref > 0.0)) throw std::invalid_argument("relative_rmse: reference is zero on the window");
    return std::sqrt(err / ref);
}

double column_concentration(const SstPlane& sst, std::size_t m, std::size_t center, std::size_t halfwidth) {
    if (m >= sst.cols()) throw std::invalid_argument("column_concentration: column out of range");
    const auto col = sst.coeffs.col(static_cast<Eigen::Index>(m)).cwiseAbs();
    const double total = col.sum();
    if (!(total > 0.0)) return 0.0;
    const std::size_t lo = center > halfwidth ? center - halfwidth : 0;
    const std::size_t hi = std::min(sst.rows() - 1, center + halfwidth);
    if (lo > hi) return 0.0;
    return col.segment(static_cast<Eigen::Index>(lo), static_cast<Eigen::Index>(hi - lo + 1)).sum() / total;
}

}  // namespace synsq
