#include "synsq/phase.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "synsq/parallel.hpp"
#include "synsq/signal.hpp"

namespace synsq {

double default_threshold(const CwtPlane& plane) {
    if (plane.voices == 0 || plane.rows() < plane.voices) {
        throw std::invalid_argument("default_threshold: plane holds fewer rows than one octave");
    }
    const std::size_t n = plane.cols();
    std::vector<double> magnitudes;
    magnitudes.reserve(plane.voices * n);
    for (std::size_t j = 0; j < plane.voices; ++j) {
        for (std::size_t m = 0; m < n; ++m) {
            magnitudes.push_back(std::abs(plane.coeffs(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(m))));
        }
    }
    return kMadToSigma * std::sqrt(2.0 * std::log(static_cast<double>(n))) * mad(magnitudes);
}

PhasePlane phase_transform(const CwtPlane& plane, double gamma) {
    if (!(gamma >= 0.0)) throw std::invalid_argument("phase_transform: gamma must be >= 0");
    const auto rows = static_cast<Eigen::Index>(plane.rows());
    const auto cols = static_cast<Eigen::Index>(plane.cols());
    PhasePlane out;
    out.gamma = gamma;
    out.omega.setConstant(rows, cols, std::numeric_limits<double>::quiet_NaN());
    out.mask.setConstant(rows, cols, false);

    constexpr double kInvTwoPi = 0.5 * std::numbers::inv_pi;
    parallel_for_chunks(plane.rows(), [&](std::size_t begin, std::size_t end) {
        for (auto j = static_cast<Eigen::Index>(begin); j < static_cast<Eigen::Index>(end); ++j) {
            for (Eigen::Index m = 0; m < cols; ++m) {
                const Complex w = plane.coeffs(j, m);
                const double power = std::norm(w);
                if (!(std::sqrt(power) > gamma)) continue;
                // Im(dW conj(W)) / |W|^2 avoids a complex division.
                const double omega = kInvTwoPi * std::imag(plane.derivative(j, m) * std::conj(w)) / power;
                if (!std::isfinite(omega) || !(omega > 0.0)) continue;
                out.omega(j, m) = omega;
                out.mask(j, m) = true;
            }
        }
    });
    return out;
}

}  // namespace synsq
