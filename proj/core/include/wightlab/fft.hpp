// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace wightlab {

/// Multi-dimensional real-to-complex transform pair (unnormalized).
/// Plans are created once; execution is thread-safe.
class RealFft {
  public:
    explicit RealFft(std::vector<int> dims);
    ~RealFft();
    RealFft(const RealFft&) = delete;
    RealFft& operator=(const RealFft&) = delete;

    std::size_t real_size() const { return real_size_; }
    /// Hermitian half-spectrum: last axis holds n/2 + 1 entries.
    std::size_t complex_size() const { return complex_size_; }
    const std::vector<int>& dims() const { return dims_; }

    void forward(const double* in, std::complex<double>* out) const;
    /// Clobbers `in`.
    void backward(std::complex<double>* in, double* out) const;

  private:
    struct Plans;
    std::vector<int> dims_;
    std::size_t real_size_ = 0;
    std::size_t complex_size_ = 0;
    std::unique_ptr<Plans> plans_;
};

}  // namespace wightlab
