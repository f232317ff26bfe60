// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "wightlab/lattice.hpp"
#include "wightlab/wightman_scalar.hpp"

namespace wightlab {

struct BridgeResult {
    double lhs = 0;  // lattice Schwinger function
    double rhs = 0;  // damped quadrature of the Wightman distribution
    double gap = 0;  // |lhs - rhs| / |lhs|
    Evaluation rhs_eval;
};

/// Compares c_n G^(n)(y) on the lattice with the Laplace transform of the
/// truncated Wightman distribution. Points are (time, space...) with
/// strictly increasing times.
BridgeResult laplace_bridge_check(const ScalarModel& model, const std::vector<std::vector<double>>& y,
                                  const Lattice& lat, const HyperplaneQuadrature& quad = {});

/// Laplace kernel prod_l e^{-k0_l y0_l + i k_l.y_l} cut where it has decayed;
/// times are measured from their mean.
MomentumTestFunction laplace_kernel(const std::vector<std::vector<double>>& y);

/// Smallest q0 + |q| over the box of the partial momentum sums, per slot j < n.
/// Positive means the box misses the closed backward cone.
std::vector<double> backward_cone_margins(const ProductTerm& term);

struct SpectralReport {
    double max_abs = 0;
    double tolerance = 0;
    std::vector<double> values;
};

/// Evaluates every test function, each of which must provably miss the
/// support; throws PreconditionError otherwise.
SpectralReport spectral_support_check(const std::vector<MomentumTestFunction>& family,
                                      const ScalarModel& model, const HyperplaneQuadrature& quad = {});

struct ClusterRow {
    double lambda = 0;
    std::complex<double> value;
};

/// |W^T(phi tensor T_{lambda a} psi)| over the lambda grid; a must be spacelike.
std::vector<ClusterRow> cluster_decay(const MomentumTestFunction& phi, const MomentumTestFunction& psi,
                                      const std::vector<double>& a, const std::vector<double>& lambdas,
                                      const ScalarModel& model, const HyperplaneQuadrature& quad = {});

/// Full Wightman functional assembled from truncated ones over set partitions.
std::complex<double> w_full_scalar(const MomentumTestFunction& phi, const ScalarModel& model,
                                   const HyperplaneQuadrature& quad = {});

}  // namespace wightlab
