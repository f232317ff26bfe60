// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "wightlab/momentum_function.hpp"
#include "wightlab/wightman_scalar.hpp"

namespace wightlab {

using SlotFn = std::function<std::complex<double>(const std::vector<std::vector<double>>&)>;

/// Function on (R^4)^n with the spatial radius beyond which each slot is negligible.
struct SlotIntegrand {
    SlotFn fn;
    std::vector<double> reach;
    double scale = 1;

    int order() const { return int(reach.size()); }
    static SlotIntegrand from(const MomentumTestFunction& phi);
};

/// Spherical product rules for the free spatial momenta: Gauss-Legendre in the
/// radius (tanh-sinh next to the singular radius), Gauss-Legendre in the polar
/// cosine, midpoint in the azimuth. Each level grows every order by `growth`.
struct SphericalQuadrature {
    double rel_tolerance = 1e-2;
    double abs_tolerance = 1e-12;
    int max_level = 2;
    double growth = 1.5;
    double step = 0.5;
    double t_max = 3.2;
    int radial_order = 4;
    int polar_order = 5;
    int azimuth_points = 6;
    int s_order = 3;
    double piece_scale = 3.0;
    unsigned threads = 1;
};

/// M^n_j paired with phi at one refinement level (n = phi.order() >= 3, 0 <= j <= n).
std::complex<double> m_n_j_level(int j, const SlotIntegrand& phi, const SphericalQuadrature& q,
                                 int level);

Evaluation m_n_j_eval(int j, const SlotIntegrand& phi, const SphericalQuadrature& q = {});
Evaluation m_n_j_eval(int j, const MomentumTestFunction& phi, const SphericalQuadrature& q = {});

/// Multiplier of degree one in each momentum, the momentum form of the
/// first-order operators of the vector model. There is no default.
using MomentumMultiplier = SlotFn;

/// phi -> (d/dk0_j - d/dk0_{j+1}) phi by a four-point central difference (slots 1-based).
SlotIntegrand energy_difference(const SlotIntegrand& phi, int j, double h);

/// <M_0, M phi> + sum_j <M_j, (d_j - d_{j+1}) M phi> + <M_n, M phi>.
Evaluation vector_wightman_pairing(const MomentumTestFunction& phi, const MomentumMultiplier& multiplier,
                                   const SphericalQuadrature& q = {}, double fd_step = 1e-3);

/// (R phi)(k_1..k_n) = phi(P k_n, ..., P k_1) with P flipping the energy.
SlotIntegrand reflected(const SlotIntegrand& phi);

}  // namespace wightlab
