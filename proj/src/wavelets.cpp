#include "synsq/wavelets.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "synsq/error.hpp"
#include "synsq/quadrature.hpp"

namespace synsq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMorletCutoff = 1e-8;

double morlet_halfwidth(double sigma) {
    return std::sqrt(-std::log(kMorletCutoff) / (2.0 * kPi * kPi)) / sigma;
}

}  // namespace

struct WaveletSpec::Cache {
    std::once_flag once;
    Complex value;
    std::exception_ptr failure;
};

std::string_view to_string(WaveletKind kind) {
    switch (kind) {
        case WaveletKind::morlet: return "morlet";
        case WaveletKind::mexican_hat: return "mexican-hat";
        case WaveletKind::bump: return "bump";
    }
    return "unknown";
}

WaveletKind parse_wavelet_kind(std::string_view name) {
    if (name == "morlet") return WaveletKind::morlet;
    if (name == "mexican-hat" || name == "mexhat" || name == "complex-mexican-hat") return WaveletKind::mexican_hat;
    if (name == "bump" || name == "shifted-bump") return WaveletKind::bump;
    throw std::invalid_argument("unknown wavelet '" + std::string(name) + "'");
}

WaveletSpec::WaveletSpec(WaveletKind kind, double mu, double sigma, double norm)
    : kind_(kind), mu_(mu), sigma_(sigma), norm_(norm), cache_(std::make_shared<Cache>()) {}

WaveletSpec WaveletSpec::make(WaveletKind kind, double mu, double sigma, std::optional<double> norm) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw std::invalid_argument("wavelet sigma must be positive");
    if (!std::isfinite(mu)) throw std::invalid_argument("wavelet mu must be finite");
    if (kind == WaveletKind::bump && !(mu > sigma)) {
        throw std::invalid_argument("bump wavelet needs mu > sigma so that its support lies in xi > 0");
    }
    if (kind == WaveletKind::morlet && !(mu > 0.0)) throw std::invalid_argument("morlet wavelet needs mu > 0");
    if (norm && (!(*norm > 0.0) || !std::isfinite(*norm))) {
        throw std::invalid_argument("wavelet norm must be positive");
    }
    WaveletSpec spec(kind, mu, sigma, 1.0);
    spec.norm_ = norm ? *norm : 2.0 / spec.raw(spec.center());
    return spec;
}

WaveletSpec WaveletSpec::morlet(double mu, double sigma, std::optional<double> norm) {
    return make(WaveletKind::morlet, mu, sigma, norm);
}

WaveletSpec WaveletSpec::mexican_hat(double sigma, std::optional<double> norm) {
    return make(WaveletKind::mexican_hat, 0.0, sigma, norm);
}

WaveletSpec WaveletSpec::bump(double mu, double sigma, std::optional<double> norm) {
    return make(WaveletKind::bump, mu, sigma, norm);
}

WaveletSpec WaveletSpec::make_default(WaveletKind kind) {
    switch (kind) {
        case WaveletKind::morlet: return morlet();
        case WaveletKind::mexican_hat: return mexican_hat();
        case WaveletKind::bump: return bump();
    }
    throw std::invalid_argument("unknown wavelet kind");
}

WaveletSpec WaveletSpec::with_norm(double norm) const { return make(kind_, mu_, sigma_, norm); }

double WaveletSpec::raw(double xi) const noexcept {
    if (!(xi > 0.0)) return 0.0;
    switch (kind_) {
        case WaveletKind::morlet: {
            const double d = xi - mu_;
            if (std::abs(d) > morlet_halfwidth(sigma_)) return 0.0;
            return std::exp(-2.0 * kPi * kPi * sigma_ * sigma_ * d * d);
        }
        case WaveletKind::mexican_hat:
            return xi * xi * std::exp(-2.0 * kPi * kPi * sigma_ * sigma_ * xi * xi);
        case WaveletKind::bump: {
            const double x = (2.0 * kPi * xi - mu_) / sigma_;
            if (std::abs(x) >= 1.0) return 0.0;
            return std::exp(-1.0 / (1.0 - x * x));
        }
    }
    return 0.0;
}

double WaveletSpec::operator()(double xi) const noexcept { return norm_ * raw(xi); }

Interval WaveletSpec::support() const noexcept {
    switch (kind_) {
        case WaveletKind::morlet: {
            const double h = morlet_halfwidth(sigma_);
            return {std::max(0.0, mu_ - h), mu_ + h};
        }
        case WaveletKind::mexican_hat:
            return {0.0, std::numeric_limits<double>::infinity()};
        case WaveletKind::bump:
            return {(mu_ - sigma_) / (2.0 * kPi), (mu_ + sigma_) / (2.0 * kPi)};
    }
    return {};
}

double WaveletSpec::center() const noexcept {
    switch (kind_) {
        case WaveletKind::morlet: return mu_;
        case WaveletKind::mexican_hat: return 1.0 / (std::numbers::sqrt2 * kPi * sigma_);
        case WaveletKind::bump: return mu_ / (2.0 * kPi);
    }
    return 0.0;
}

Complex WaveletSpec::admissibility() const {
    std::call_once(cache_->once, [this] {
        try {
            cache_->value = compute_admissibility(*this);
        } catch (...) {
            cache_->failure = std::current_exception();
        }
    });
    if (cache_->failure) std::rethrow_exception(cache_->failure);
    return cache_->value;
}

std::string WaveletSpec::describe() const {
    std::ostringstream out;
    out.precision(17);
    out << to_string(kind_) << " mu=" << mu_ << " sigma=" << sigma_ << " norm=" << norm_;
    return out.str();
}

Complex eval_fourier(const WaveletSpec& spec, double xi) { return {spec(xi), 0.0}; }

Complex admissibility_constant(const WaveletSpec& spec) { return spec.admissibility(); }

Complex compute_admissibility(const WaveletSpec& spec) {
    Interval window = spec.support();
    switch (spec.kind()) {
        case WaveletKind::morlet:
            if (!(window.lo > 0.0)) {
                throw NumericalError("morlet admissibility integral diverges: spectrum reaches xi = 0");
            }
            break;
        case WaveletKind::mexican_hat:
            window.hi = spec.center() + 12.0 / (2.0 * kPi * spec.sigma());
            break;
        case WaveletKind::bump:
            break;
    }
    // psi_hat is real, so conj() leaves it unchanged.
    const auto integrand = [&spec](double xi) { return xi > 0.0 ? spec(xi) / xi : 0.0; };
    const double value = adaptive_simpson(integrand, window.lo, window.hi, 1e-11);
    if (!std::isfinite(value) || value == 0.0) throw NumericalError("admissibility integral did not converge");
    return {value, 0.0};
}

Interval effective_bandwidth(const WaveletSpec& spec, double tail_fraction) {
    if (!(tail_fraction > 0.0 && tail_fraction <= 0.5)) {
        throw std::invalid_argument("effective_bandwidth: tail_fraction must lie in (0, 0.5]");
    }
    const double c = spec.center();
    const double level = tail_fraction * spec.peak();

    // psi_hat is unimodal, so each edge is a single crossing of `level`.
    const auto crossing = [&](double inside, double outside) {
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (inside + outside);
            if (mid == inside || mid == outside) break;
            (spec(mid) >= level ? inside : outside) = mid;
        }
        return inside;
    };

    const Interval support = spec.support();
    double right = support.hi;
    if (!std::isfinite(right)) {
        right = 2.0 * c;
        while (spec(right) >= level) right *= 2.0;
    }
    return {crossing(c, support.lo), crossing(c, right)};
}

double relative_halfwidth(const Interval& band) { return band.width() / (band.hi + band.lo); }

}  // namespace synsq
