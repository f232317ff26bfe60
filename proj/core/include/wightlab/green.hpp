// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <span>

#include "wightlab/lattice.hpp"
#include "wightlab/quaternion.hpp"
#include "wightlab/test_function.hpp"

namespace wightlab {

/// Kernel of (-Laplacian + m0^2)^{-alpha} on R^d.
struct GreenSpec {
    int dim = 1;
    double alpha = 0.5;
    double m0 = 1;

    void validate() const;
};

/// (|k|^2 + m0^2)^{-alpha}.
double green_alpha_momentum(std::span<const double> k, const GreenSpec& spec);

/// Inverse DFT of (|k|^2 + m0^2)^{-exponent} sampled on the dual lattice;
/// any exponent > 0. Returned in wrapped order on `lat`.
ScalarField fractional_kernel_lattice(const Lattice& lat, double exponent, double m0);

/// Lattice kernel of G_alpha on `lat` (pass a padded lattice for linear
/// convolution of fields living on half of it). Validates m0 * extent >= 4.
ScalarField green_alpha_lattice(const Lattice& lat, const GreenSpec& spec);

/// Continuum Fourier integral of G_alpha truncated to the Brillouin zone
/// |k_i| <= pi/spacing, by adaptive quadrature (d <= 2).
double green_alpha_band_limited(std::span<const double> x, const GreenSpec& spec, double spacing);

/// g(x) = 1 / (4 pi^2 |x|^2) on R^4.
double harmonic_green(std::span<const double> x);

/// -dbar g = (x0 + x1 i + x2 j + x3 k) / (2 pi^2 |x|^4).
Quaternion dbar_harmonic_green(std::span<const double> x);

/// Average of g over the lattice cell centred at the origin.
double harmonic_green_origin_average(double spacing);

/// g sampled in wrapped order on a 4-d lattice, origin cell-averaged.
ScalarField harmonic_green_lattice(const Lattice& lat);

/// -dbar g sampled in wrapped order on a 4-d lattice. The origin cell
/// average of an odd kernel is zero.
QuaternionField dbar_g_kernel(const Lattice& lat);

/// Quaternion-valued Gaussian-polynomial function on R^4, one real test
/// function per component.
struct QuaternionTestFunction {
    std::array<TestFunction, 4> comp;

    Quaternion operator()(std::span<const double> x) const;
};

/// d = 1 d0 - i d1 - j d2 - k d3 (left multiplication), closed form.
QuaternionTestFunction apply_d(const QuaternionTestFunction& f);
/// dbar = 1 d0 + i d1 + j d2 + k d3.
QuaternionTestFunction apply_dbar(const QuaternionTestFunction& f);

}  // namespace wightlab
