// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <memory>
#include <vector>

#include "wightlab/fft.hpp"
#include "wightlab/lattice.hpp"

namespace wightlab {

/// X(x) = sum_y K(x - y) F(y) v. If the kernel lattice has twice the sites
/// per axis of the field lattice, F is zero-padded and the convolution is
/// linear; if the lattices match it is circular. Other shapes are rejected.
/// Reusable across many fields; apply() is thread-safe.
class Convolver {
  public:
    Convolver(const Lattice& field_lattice, const ScalarField& kernel);

    ScalarField apply(const ScalarField& f) const;
    const Lattice& field_lattice() const { return field_; }
    const Lattice& work_lattice() const { return work_; }
    /// Kernel spectrum on the work lattice (half-spectrum layout).
    const std::vector<std::complex<double>>& kernel_spectrum() const { return kernel_hat_; }

  private:
    Lattice field_, work_;
    bool padded_;
    std::vector<std::size_t> map_;
    std::shared_ptr<RealFft> fft_;
    std::vector<std::complex<double>> kernel_hat_;
};

/// Quaternionic convolution X = K * F with Hamilton product K(x - y) F(y).
class QuaternionConvolver {
  public:
    QuaternionConvolver(const Lattice& field_lattice, const QuaternionField& kernel);

    QuaternionField apply(const QuaternionField& f) const;

  private:
    Lattice field_, work_;
    bool padded_;
    std::vector<std::size_t> map_;
    std::shared_ptr<RealFft> fft_;
    std::array<std::vector<std::complex<double>>, 4> kernel_hat_;
};

ScalarField convolve(const ScalarField& f, const ScalarField& kernel);
QuaternionField convolve(const QuaternionField& f, const QuaternionField& kernel);

}  // namespace wightlab
