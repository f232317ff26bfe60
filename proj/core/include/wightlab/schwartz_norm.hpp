// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "wightlab/test_function.hpp"

namespace wightlab {

/// ||f||_{K,N} = max_{|a_l| <= K} sup_x prod_l (1 + |x_l|^2)^{N/2} |D^a f(x)|.
struct SchwartzNormSpec {
    int K = 0;
    int N = 0;
    void validate() const;
};

/// Guaranteed bracket lower <= ||f|| <= upper.
struct NormBracket {
    double lower = 0;
    double upper = 0;
    double width() const { return upper > 0 ? (upper - lower) / upper : 0.0; }
};

/// Norm of f on (R^block_dim)^n. Monomial polynomials factor over the blocks
/// and are bracketed block by block.
NormBracket schwartz_norm(const TestFunction& f, int block_dim, const SchwartzNormSpec& spec,
                          double rel_width = 1e-2);

/// Norm of the tensor product of the given one-slot functions.
NormBracket schwartz_norm(const std::vector<TestFunction>& slots, const SchwartzNormSpec& spec,
                          double rel_width = 1e-2);

}  // namespace wightlab
