#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "synsq/types.hpp"

namespace synsq {

enum class WaveletKind { morlet, mexican_hat, bump };

std::string_view to_string(WaveletKind kind);
WaveletKind parse_wavelet_kind(std::string_view name);

// Analytic mother wavelet defined by its Fourier transform psi_hat(xi), with
// xi in cycles per unit of the scale variable. psi_hat is real and vanishes
// for xi <= 0.
//
//   morlet       norm * exp(-2 pi^2 sigma^2 (xi - mu)^2), cut to zero where it
//                drops below 1e-8 of its peak
//   mexican-hat  norm * xi^2 exp(-2 pi^2 sigma^2 xi^2), xi > 0
//   bump         norm * exp(-1 / (1 - x^2)), x = (2 pi xi - mu) / sigma, |x| < 1
//
// The default norm puts the peak of |psi_hat| at 2. Copies share the cached
// admissibility constant.
class WaveletSpec {
public:
    static WaveletSpec morlet(double mu = 1.0, double sigma = 1.0, std::optional<double> norm = {});
    static WaveletSpec mexican_hat(double sigma = 1.0, std::optional<double> norm = {});
    static WaveletSpec bump(double mu = 5.0, double sigma = 1.0, std::optional<double> norm = {});

    // mu is ignored by the Mexican hat.
    static WaveletSpec make(WaveletKind kind, double mu, double sigma, std::optional<double> norm = {});
    static WaveletSpec make_default(WaveletKind kind);

    WaveletKind kind() const noexcept { return kind_; }
    double mu() const noexcept { return mu_; }
    double sigma() const noexcept { return sigma_; }
    double norm() const noexcept { return norm_; }

    WaveletSpec with_norm(double norm) const;

    double operator()(double xi) const noexcept;

    // Where psi_hat is nonzero; hi is +inf for the Mexican hat.
    Interval support() const noexcept;

    // Location of the peak of |psi_hat|.
    double center() const noexcept;
    double peak() const noexcept { return (*this)(center()); }

    // Cached R_psi; see admissibility_constant().
    Complex admissibility() const;

    std::string describe() const;

private:
    WaveletSpec(WaveletKind kind, double mu, double sigma, double norm);

    double raw(double xi) const noexcept;

    struct Cache;

    WaveletKind kind_;
    double mu_;
    double sigma_;
    double norm_;
    std::shared_ptr<Cache> cache_;
};

Complex eval_fourier(const WaveletSpec& spec, double xi);

// R_psi = integral over (0, inf) of conj(psi_hat(xi)) / xi. Computed once per
// spec, thread-safe. Throws NumericalError when the integral does not converge.
Complex admissibility_constant(const WaveletSpec& spec);

// Uncached quadrature behind admissibility_constant().
Complex compute_admissibility(const WaveletSpec& spec);

// Smallest interval holding every xi with |psi_hat(xi)| >= tail_fraction * max,
// for tail_fraction in (0, 0.5].
Interval effective_bandwidth(const WaveletSpec& spec, double tail_fraction);

// Half-width of an interval relative to its midpoint: the Delta for which a
// rescaled copy fits in [1 - Delta, 1 + Delta].
double relative_halfwidth(const Interval& band);

}  // namespace synsq
