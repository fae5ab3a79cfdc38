#pragma once

#include "synsq/cwt.hpp"
#include "synsq/types.hpp"

namespace synsq {

// Phase transform omega(a, b) = Im(dW / W) / (2 pi), in frequency units.
// Entries with mask == false hold NaN and must not be read.
struct PhasePlane {
    RealMatrix omega;
    MaskMatrix mask;
    double gamma = 0.0;

    std::size_t rows() const noexcept { return static_cast<std::size_t>(omega.rows()); }
    std::size_t cols() const noexcept { return static_cast<std::size_t>(omega.cols()); }
    std::size_t support_size() const noexcept { return static_cast<std::size_t>(mask.count()); }
};

// Universal hard threshold 1.4826 * sqrt(2 ln n) * MAD(|W|) over the first
// `voices` rows (the finest octave); n is the number of columns.
double default_threshold(const CwtPlane& plane);

// mask = |W| > gamma and omega finite and positive.
PhasePlane phase_transform(const CwtPlane& plane, double gamma);

}  // namespace synsq
