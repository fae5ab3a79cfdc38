#include "synsq/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "synsq/error.hpp"
#include "synsq/parallel.hpp"

namespace synsq {

namespace {

double jump_penalty(double smoothness, std::ptrdiff_t step) {
    if (step == 0) return 0.0;
    const auto d = static_cast<double>(step);
    return smoothness * d * d;
}

UniformSeries invert_with(const SstPlane& sst, Complex r_psi,
                          const std::function<std::pair<std::size_t, std::size_t>(std::size_t)>& band) {
    if (r_psi == Complex{}) throw std::invalid_argument("inversion: R_psi must be nonzero");
    std::vector<double> out(sst.cols());
    const Complex scale = 2.0 / r_psi;
    parallel_for_chunks(sst.cols(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t m = begin; m < end; ++m) {
            const auto [lo, hi] = band(m);
            Complex sum{};
            for (std::size_t l = lo; l <= hi; ++l) {
                sum += sst.coeffs(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m));
            }
            out[m] = std::real(scale * sum);
        }
    });
    return UniformSeries(sst.t0, sst.dt, std::move(out));
}

}  // namespace

std::size_t default_band_halfwidth(std::size_t voices) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(4.0 * static_cast<double>(voices) / 32.0)));
}

RealMatrix ridge_energy(const SstPlane& sst) { return sst.coeffs.cwiseAbs2(); }

double ridge_objective(const RealMatrix& energy, std::span<const std::size_t> path, double smoothness) {
    if (path.size() != static_cast<std::size_t>(energy.cols())) {
        throw std::invalid_argument("ridge_objective: path length differs from column count");
    }
    double total = 0.0;
    for (std::size_t m = 0; m < path.size(); ++m) {
        total += energy(static_cast<Eigen::Index>(path[m]), static_cast<Eigen::Index>(m));
        if (m > 0) {
            total -= jump_penalty(smoothness, static_cast<std::ptrdiff_t>(path[m]) - static_cast<std::ptrdiff_t>(path[m - 1]));
        }
    }
    return total;
}

std::vector<std::size_t> optimal_ridge_path(const RealMatrix& energy, double smoothness, std::size_t jump_cap) {
    if (!(smoothness >= 0.0)) throw std::invalid_argument("extract_ridge: smoothness must be >= 0");
    if (jump_cap < 1) throw std::invalid_argument("extract_ridge: jump_cap must be >= 1");
    const auto bins = static_cast<std::ptrdiff_t>(energy.rows());
    const auto cols = static_cast<std::size_t>(energy.cols());
    if (bins == 0 || cols == 0) throw NoRidgeError("extract_ridge: empty plane");
    if (!(energy.maxCoeff() > 0.0)) throw NoRidgeError("extract_ridge: plane carries no energy");

    const auto cap = static_cast<std::ptrdiff_t>(jump_cap);
    constexpr double kNone = -std::numeric_limits<double>::infinity();
    std::vector<double> score(static_cast<std::size_t>(bins)), next(static_cast<std::size_t>(bins));
    std::vector<std::int32_t> from(static_cast<std::size_t>(bins) * cols, 0);

    for (std::ptrdiff_t l = 0; l < bins; ++l) score[static_cast<std::size_t>(l)] = energy(l, 0);
    for (std::size_t m = 1; m < cols; ++m) {
        for (std::ptrdiff_t l = 0; l < bins; ++l) {
            double best = kNone;
            std::ptrdiff_t arg = l;
            const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, l - cap);
            const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(bins - 1, l + cap);
            for (std::ptrdiff_t p = lo; p <= hi; ++p) {
                const double candidate = score[static_cast<std::size_t>(p)] - jump_penalty(smoothness, l - p);
                if (candidate > best) {
                    best = candidate;
                    arg = p;
                }
            }
            next[static_cast<std::size_t>(l)] = best + energy(l, static_cast<Eigen::Index>(m));
            from[m * static_cast<std::size_t>(bins) + static_cast<std::size_t>(l)] = static_cast<std::int32_t>(arg);
        }
        std::swap(score, next);
    }

    std::vector<std::size_t> path(cols);
    path.back() = static_cast<std::size_t>(std::max_element(score.begin(), score.end()) - score.begin());
    for (std::size_t m = cols - 1; m > 0; --m) {
        path[m - 1] = static_cast<std::size_t>(from[m * static_cast<std::size_t>(bins) + path[m]]);
    }
    return path;
}

Ridge extract_ridge(const SstPlane& sst, double smoothness, std::size_t jump_cap, std::size_t band_halfwidth) {
    return Ridge{optimal_ridge_path(ridge_energy(sst), smoothness, jump_cap), band_halfwidth};
}

std::vector<Ridge> extract_ridges(const SstPlane& sst, std::size_t count, const RidgeSearch& search) {
    if (sst.rows() == 0) throw NoRidgeError("extract_ridges: empty plane");
    const std::size_t last = std::min(search.last_bin, sst.rows() - 1);
    if (search.first_bin > last) throw std::invalid_argument("extract_ridges: empty bin window");
    const auto first = static_cast<Eigen::Index>(search.first_bin);
    const auto rows = static_cast<Eigen::Index>(last - search.first_bin + 1);
    RealMatrix energy = sst.coeffs.middleRows(first, rows).cwiseAbs2();
    const auto hw = static_cast<std::ptrdiff_t>(search.band_halfwidth);

    std::vector<Ridge> ridges;
    for (std::size_t k = 0; k < count; ++k) {
        double smoothness = search.smoothness;
        if (search.relative && std::isfinite(smoothness)) smoothness *= energy.colwise().maxCoeff().mean();
        std::vector<std::size_t> path = optimal_ridge_path(energy, smoothness, search.jump_cap);
        for (std::size_t m = 0; m < path.size(); ++m) {
            const auto l = static_cast<std::ptrdiff_t>(path[m]);
            for (std::ptrdiff_t b = std::max<std::ptrdiff_t>(0, l - hw); b <= std::min<std::ptrdiff_t>(rows - 1, l + hw); ++b) {
                energy(b, static_cast<Eigen::Index>(m)) = 0.0;
            }
            path[m] += search.first_bin;
        }
        ridges.push_back(Ridge{std::move(path), search.band_halfwidth});
    }
    const auto mean_bin = [](const Ridge& r) {
        return std::accumulate(r.bins.begin(), r.bins.end(), 0.0) / static_cast<double>(r.bins.size());
    };
    std::stable_sort(ridges.begin(), ridges.end(),
                     [&](const Ridge& a, const Ridge& b) { return mean_bin(a) < mean_bin(b); });
    return ridges;
}

UniformSeries invert_band(const SstPlane& sst, const Ridge& ridge, Complex r_psi) {
    if (ridge.bins.size() != sst.cols()) throw std::invalid_argument("invert_band: ridge length differs from plane");
    const std::size_t top = sst.rows() - 1;
    return invert_with(sst, r_psi, [&](std::size_t m) {
        const std::size_t l = std::min(ridge.bins[m], top);
        const std::size_t lo = l > ridge.band_halfwidth ? l - ridge.band_halfwidth : 0;
        const std::size_t hi = std::min(top, l + ridge.band_halfwidth);
        return std::pair{lo, hi};
    });
}

UniformSeries invert_bins(const SstPlane& sst, std::size_t lo_bin, std::size_t hi_bin, Complex r_psi) {
    if (lo_bin > hi_bin || hi_bin >= sst.rows()) throw std::invalid_argument("invert_bins: bad bin range");
    return invert_with(sst, r_psi, [&](std::size_t) { return std::pair{lo_bin, hi_bin}; });
}

UniformSeries invert_all(const SstPlane& sst, Complex r_psi) { return invert_bins(sst, 0, sst.rows() - 1, r_psi); }

}  // namespace synsq
