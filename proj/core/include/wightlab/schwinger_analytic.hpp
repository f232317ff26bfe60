// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "wightlab/lattice.hpp"
#include "wightlab/scalar_model.hpp"

namespace wightlab {

/// sum_x prod_j G(x - x_j) dx^d over the padded (2N) periodic lattice.
/// Points must be sites of `lat` in its inner half.
double g_n_scalar(const std::vector<std::vector<double>>& points, const GreenSpec& spec,
                  const Lattice& lat);

/// g^(2) closed form for n = 2; for n >= 3 the sum over the 4-d lattice
/// box of prod_j g(x - y_j) dx^4 with cell-averaged origin values plus a
/// far-field tail correction. Points must be sites in the inner half.
double g_n_vector(const std::vector<std::vector<double>>& points, const Lattice& lat);

/// c_n sum_x prod_j (G * phi_j)(x) dx^d with the same zero-padded linear
/// convolution the Monte Carlo field uses.
double s_t_eval(const std::vector<TestFunction>& phis, const ScalarModel& model, const Lattice& lat);

/// prod_j (G * phi_j) summed over the lattice without the c_n factor.
double smeared_kernel_contraction(const std::vector<TestFunction>& phis, const GreenSpec& spec,
                                  const Lattice& lat);

}  // namespace wightlab
