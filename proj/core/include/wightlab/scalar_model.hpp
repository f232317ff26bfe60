// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "wightlab/green.hpp"
#include "wightlab/levy.hpp"

namespace wightlab {

/// Convoluted Levy noise X = G_alpha * F on R^d.
struct ScalarModel {
    GreenSpec green;
    LevyTriple levy;

    int dim() const { return green.dim; }
    double cumulant(int n) const { return cumulant_coeff(n, levy); }
    void validate() const {
        green.validate();
        levy.validate();
    }
};

}  // namespace wightlab
