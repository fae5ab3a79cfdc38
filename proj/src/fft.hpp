#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include <fftw3.h>

#include "synsq/types.hpp"

namespace synsq::detail {

struct FftwFree {
    void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
};

// FFTW-aligned complex scratch buffer.
class FftBuffer {
public:
    explicit FftBuffer(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    Complex* data() noexcept { return reinterpret_cast<Complex*>(data_.get()); }
    fftw_complex* raw() noexcept { return data_.get(); }
    std::span<Complex> span() noexcept { return {data(), n_}; }

private:
    std::size_t n_;
    std::unique_ptr<fftw_complex, FftwFree> data_;
};

// Unnormalized complex DFT of a fixed length and direction. execute() may be
// called concurrently from several threads on distinct buffers.
class FftPlan {
public:
    FftPlan(std::size_t n, int direction);
    ~FftPlan();
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    void execute(FftBuffer& in, FftBuffer& out) const;

private:
    std::size_t n_;
    fftw_plan plan_;
};

}  // namespace synsq::detail
