#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "synsq/signal.hpp"
#include "synsq/squeeze.hpp"
#include "synsq/types.hpp"

namespace synsq {

// One frequency bin per time column plus the number of neighbouring bins on
// each side that belong to the component.
struct Ridge {
    std::vector<std::size_t> bins;
    std::size_t band_halfwidth = 0;
};

// 4 bins at 32 voices, proportional otherwise, at least 1.
std::size_t default_band_halfwidth(std::size_t voices);

// |T|^2, the energy the ridge objective collects.
RealMatrix ridge_energy(const SstPlane& sst);

// sum_m E(l_m, m) - smoothness * sum_m (l_{m+1} - l_m)^2
double ridge_objective(const RealMatrix& energy, std::span<const std::size_t> path, double smoothness);

// Dynamic-programming maximizer of ridge_objective over paths whose steps
// are at most jump_cap bins. Ties go to the lower bin. An infinite smoothness
// only admits constant paths. Throws NoRidgeError when energy is all zero.
std::vector<std::size_t> optimal_ridge_path(const RealMatrix& energy, double smoothness, std::size_t jump_cap);

Ridge extract_ridge(const SstPlane& sst, double smoothness, std::size_t jump_cap,
                    std::size_t band_halfwidth = 0);

struct RidgeSearch {
    double smoothness = 1.0;
    // When set, each peel uses smoothness times the mean over columns of the
    // peak energy still left in the search window.
    bool relative = true;
    std::size_t jump_cap = 3;
    std::size_t band_halfwidth = 4;
    // Inclusive bin window the ridges are confined to; clamped to the plane.
    std::size_t first_bin = 0;
    std::size_t last_bin = static_cast<std::size_t>(-1);
};

// Extracts `count` ridges one after another, removing each ridge's band from
// the energy before searching for the next. Returned in increasing order of
// mean bin.
std::vector<Ridge> extract_ridges(const SstPlane& sst, std::size_t count, const RidgeSearch& search);

// f(t_m) = 2 Re(R_psi^-1 sum_{|l - ridge_m| <= halfwidth} T(w_l, t_m)).
UniformSeries invert_band(const SstPlane& sst, const Ridge& ridge, Complex r_psi);

// Same formula over the fixed bins [lo_bin, hi_bin].
UniformSeries invert_bins(const SstPlane& sst, std::size_t lo_bin, std::size_t hi_bin, Complex r_psi);

// Same formula over every bin.
UniformSeries invert_all(const SstPlane& sst, Complex r_psi);

}  // namespace synsq
