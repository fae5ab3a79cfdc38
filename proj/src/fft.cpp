#include "fft.hpp"

#include <mutex>
#include <new>
#include <stdexcept>

namespace synsq::detail {

namespace {

// The FFTW planner is not thread-safe.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

FftBuffer::FftBuffer(std::size_t n) : n_(n), data_(fftw_alloc_complex(n)) {
    if (!data_) throw std::bad_alloc();
}

FftPlan::FftPlan(std::size_t n, int direction) : n_(n) {
    FftBuffer in(n), out(n);
    std::lock_guard lock(planner_mutex());
    // FFTW_ESTIMATE keeps the chosen algorithm, and therefore the rounding,
    // identical from run to run.
    plan_ = fftw_plan_dft_1d(static_cast<int>(n), in.raw(), out.raw(), direction, FFTW_ESTIMATE);
    if (plan_ == nullptr) throw std::runtime_error("FFTW failed to create a plan");
}

FftPlan::~FftPlan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
}

void FftPlan::execute(FftBuffer& in, FftBuffer& out) const {
    if (in.size() != n_ || out.size() != n_) throw std::invalid_argument("FftPlan: buffer length mismatch");
    fftw_execute_dft(plan_, in.raw(), out.raw());
}

}  // namespace synsq::detail
