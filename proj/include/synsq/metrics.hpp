#pragma once

#include <cstddef>
#include <span>

#include "synsq/squeeze.hpp"

namespace synsq {

// Half-open index range [begin, end).
struct Window {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
};

// The middle `fraction` of n samples, trimming equally from both ends.
Window central_window(std::size_t n, double fraction);

// ||estimate - reference|| / ||reference|| over the window.
double relative_rmse(std::span<const double> estimate, std::span<const double> reference, Window window);

// Fraction of sum_l |T(l, m)| that lies in bins [center - halfwidth,
// center + halfwidth] for column m. Columns with no mass give 0.
double column_concentration(const SstPlane& sst, std::size_t m, std::size_t center, std::size_t halfwidth);

}  // namespace synsq
