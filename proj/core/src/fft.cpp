// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "wightlab/errors.hpp"

namespace wightlab {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

struct RealFft::Plans {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
};

RealFft::RealFft(std::vector<int> dims) : dims_(std::move(dims)), plans_(new Plans) {
    if (dims_.empty()) throw ShapeError("fft needs at least one axis");
    real_size_ = 1;
    for (int n : dims_) {
        if (n < 1) throw ShapeError("fft axis length must be positive");
        real_size_ *= std::size_t(n);
    }
    complex_size_ = real_size_ / std::size_t(dims_.back()) * std::size_t(dims_.back() / 2 + 1);

    std::vector<double> r(real_size_);
    std::vector<std::complex<double>> c(complex_size_);
    auto* cp = reinterpret_cast<fftw_complex*>(c.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    std::lock_guard<std::mutex> lock(planner_mutex());
    plans_->r2c = fftw_plan_dft_r2c(int(dims_.size()), dims_.data(), r.data(), cp, flags);
    plans_->c2r = fftw_plan_dft_c2r(int(dims_.size()), dims_.data(), cp, r.data(), flags);
    if (!plans_->r2c || !plans_->c2r) throw Error("fftw planning failed");
}

RealFft::~RealFft() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (plans_->r2c) fftw_destroy_plan(plans_->r2c);
    if (plans_->c2r) fftw_destroy_plan(plans_->c2r);
}

void RealFft::forward(const double* in, std::complex<double>* out) const {
    fftw_execute_dft_r2c(plans_->r2c, const_cast<double*>(in), reinterpret_cast<fftw_complex*>(out));
}

void RealFft::backward(std::complex<double>* in, double* out) const {
    fftw_execute_dft_c2r(plans_->c2r, reinterpret_cast<fftw_complex*>(in), out);
}

}  // namespace wightlab
