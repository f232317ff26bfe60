// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "wightlab/bounds.hpp"
#include "wightlab/gram.hpp"
#include "wightlab/schwartz_norm.hpp"

namespace wightlab {

struct CertifySpec {
    BoundGrid grid;
    HyperplaneQuadrature quad;
    double gamma = 0.25;
    double norm_rel_width = 1e-2;
    int pair_order = 0;  // largest m + n for pair checks; 0 means n_max
};

/// |W^T_n(phi)| plus its quadrature error against a_n ||phi||_{0,2d}; the
/// lower norm bracket is used.
struct SingleCheck {
    std::string label;
    int order = 0;
    std::complex<double> value;
    double error = 0;
    double norm = 0;
    double bound = 0;
    double ratio = 0;  // (|value| + error) / bound
};

/// |W_{m+n}(phi* tensor eta)| against b_{m+n} ||phi|| ||eta|| and c_m c_n ||phi|| ||eta||.
struct PairCheck {
    std::string left, right;
    int m = 0, n = 0;
    std::complex<double> value;
    double chain_bound = 0;
    double bound = 0;
    double ratio = 0;
};

struct Certificate {
    ScalarModel model;
    int n_max = 0;
    ScalarBoundTable table;
    ConstantChain chain;
    std::vector<SingleCheck> singles;
    std::vector<PairCheck> pairs;
    double worst_single_ratio = 0;
    double worst_pair_ratio = 0;
    std::vector<std::string> witnesses;  // every violated check
    bool fast_path = false;              // no cumulant above the second
    bool pass = false;
};

/// Bounds a_n, chains them into b_n and c_n and checks both inequalities on the family.
/// Only the finite span of the family is certified.
Certificate hssc_certify(const ScalarModel& model, int n_max, const std::vector<BorchersMonomial>& family,
                         const CertifySpec& spec = {});

}  // namespace wightlab
