#include "synsq/quadrature.hpp"

#include <cmath>
#include <vector>

#include "synsq/error.hpp"

namespace synsq {

namespace {

struct Panel {
    double a, m, b;
    double fa, fm, fb;
    double whole;
};

double refine(const std::function<double(double)>& f, const Panel& p, double tol, int depth) {
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    if (!std::isfinite(flm) || !std::isfinite(frm)) {
        throw NumericalError("adaptive_simpson: integrand is not finite");
    }
    const double left = (p.m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
    const double right = (p.b - p.m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
    const double diff = left + right - p.whole;
    if (std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
    if (depth <= 0) throw NumericalError("adaptive_simpson: recursion limit reached before convergence");
    return refine(f, Panel{p.a, lm, p.m, p.fa, flm, p.fm, left}, 0.5 * tol, depth - 1) +
           refine(f, Panel{p.m, rm, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double rel_tol,
                        int max_depth) {
    if (a == b) return 0.0;
    // A coarse composite pass sets the absolute tolerance scale, so that
    // integrands concentrated in a small part of [a, b] are not declared
    // converged on the first panel.
    constexpr int kPanels = 64;
    const double h = (b - a) / kPanels;
    std::vector<double> samples(2 * kPanels + 1);
    for (int i = 0; i <= 2 * kPanels; ++i) {
        samples[i] = f(a + 0.5 * h * i);
        if (!std::isfinite(samples[i])) throw NumericalError("adaptive_simpson: integrand is not finite");
    }
    double coarse = 0.0;
    double scale = 0.0;
    for (int k = 0; k < kPanels; ++k) {
        const double piece = h / 6.0 * (samples[2 * k] + 4.0 * samples[2 * k + 1] + samples[2 * k + 2]);
        coarse += piece;
        scale += std::abs(piece);
    }
    if (scale == 0.0) return 0.0;

    const double tol = rel_tol * std::abs(coarse == 0.0 ? scale : coarse) / kPanels;
    double total = 0.0;
    for (int k = 0; k < kPanels; ++k) {
        const double lo = a + h * k;
        const Panel p{lo, lo + 0.5 * h, lo + h, samples[2 * k], samples[2 * k + 1], samples[2 * k + 2],
                      h / 6.0 * (samples[2 * k] + 4.0 * samples[2 * k + 1] + samples[2 * k + 2])};
        total += refine(f, p, tol, max_depth);
    }
    return total;
}

}  // namespace synsq
