// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "wightlab/momentum_function.hpp"
#include "wightlab/scalar_model.hpp"

namespace wightlab {

struct MinkowskiPoint {
    double energy = 0;
    std::vector<double> spatial;

    /// (k0)^2 - |k|^2.
    double square() const;
};

enum class Branch { Plus, Minus, Middle };

/// Spectral weight of one momentum slot; throws SingularPointError on the mass shell.
double mu_eval(const MinkowskiPoint& k, Branch branch, double alpha, double m0);

/// Quadrature over the hyperplane sum(k) = 0 with the last momentum eliminated.
/// Energies are split at every singular point: tanh-sinh next to them,
/// Gauss-Legendre on the rest. Spatial momenta use Gauss-Legendre panels.
/// Each refinement level halves the tanh-sinh step, the energy pieces and
/// the panels.
struct HyperplaneQuadrature {
    double rel_tolerance = 1e-3;
    double abs_tolerance = 1e-12;
    int max_level = 3;
    double step = 0.5;
    double t_max = 3.2;
    int panel_order = 6;
    int smooth_order = 6;      // Gauss-Legendre order on energy pieces away from singular points
    double panel_scale = 8.0;  // panel width at level 0, in factor scales
    double piece_scale = 2.0;  // longest energy piece at level 0, in factor scales
    unsigned threads = 1;
};

struct Evaluation {
    std::complex<double> value;
    double error = 0;
    std::vector<std::complex<double>> history;
    bool converged = false;
};

/// Truncated Wightman distribution paired with phi; n = phi.order().
Evaluation w_hat_trunc_scalar(const MomentumTestFunction& phi, const ScalarModel& model,
                              const HyperplaneQuadrature& quad = {});

/// One refinement level without the convergence loop.
std::complex<double> w_hat_trunc_scalar_level(const MomentumTestFunction& phi,
                                              const ScalarModel& model,
                                              const HyperplaneQuadrature& quad, int level);

}  // namespace wightlab
