// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wightlab/momentum_function.hpp"
#include "wightlab/scalar_model.hpp"
#include "wightlab/wightman_scalar.hpp"

namespace wightlab {

using ComplexMatrix = Eigen::MatrixXcd;

/// coef * f_1 tensor ... tensor f_n; no slots is the vacuum.
struct BorchersMonomial {
    std::vector<TestFunction> slots;
    std::complex<double> coef = 1.0;
    std::string label;

    int degree() const { return int(slots.size()); }
    MomentumTestFunction momentum() const;
};

struct GramPair {
    ComplexMatrix W;
    ComplexMatrix P;
    std::vector<std::string> labels;
    double asymmetry = 0;  // max |W - W*| / max |W| before symmetrization

    int dim() const { return int(W.rows()); }
};

/// Validates shapes, symmetrizes W and checks P. Throws HermiticityViolation
/// when the relative asymmetry exceeds `guard`.
GramPair make_gram_pair(ComplexMatrix W, ComplexMatrix P, std::vector<std::string> labels = {},
                        double guard = 1e-8);

using Seminorm = std::function<double(const BorchersMonomial&)>;

/// W_ij = W(F_i* tensor F_j) from the truncated functions; P = dim * diag(p(F_i)^2),
/// which majorizes W whenever |W_ij| <= p(F_i) p(F_j).
GramPair build_gram_pair(const ScalarModel& model, const std::vector<BorchersMonomial>& basis,
                         const Seminorm& seminorm, const HyperplaneQuadrature& quad = {});

struct Majorization {
    double ratio = 0;  // spectral norm of P^{-1/2} W P^{-1/2}
    bool pass = false;
};

/// Throws InvalidMajorant when P is not positive definite.
Majorization majorization_check(const GramPair& g);

struct KreinResult {
    ComplexMatrix T;            // sign operator on the non-degenerate complement, in its eigenbasis
    ComplexMatrix metric;       // P^{-1/2} W P^{-1/2}
    double spectral_norm_ratio = 0;
    int degenerate_dim = 0;
    double involution_error = 0;     // ||T^2 - 1||
    double reconstruction_error = 0;  // max |W - P^{1/2} Q |L|^{1/2} T |L|^{1/2} Q* P^{1/2}| / max |W|
    double remajorization_ratio = 0;  // ratio against P_K = P^{1/2} |T| P^{1/2} on the complement
};

/// Throws PreconditionError unless the pair is majorized.
KreinResult krein_reduce(const GramPair& g, double kernel_tol = 1e-10);

/// Random majorized pair: P Hermitian positive definite, W = P^{1/2} T P^{1/2}
/// with ||T|| <= 1 and `kernel_dim` zero eigenvalues.
GramPair random_majorized_pair(int dim, int kernel_dim, std::uint64_t seed);

struct NegativeSearchSpec {
    int trials = 8;
    int max_degree = 2;
    int per_degree = 2;  // random monomials of each degree
    double center_spread = 1.5;
    double min_width = 0.6;
    double max_width = 1.2;
    std::uint64_t seed = 1;
};

struct NegativeSearch {
    bool found = false;
    double min_eigenvalue = 0;   // most negative over all trials, relative to max |W|
    double threshold = 0;
    std::vector<std::complex<double>> direction;
    std::vector<std::string> labels;
    int trials = 0;
};

/// Random bases of the vacuum and `per_degree` random Gaussian monomials of each
/// degree, searched for a negative direction of W.
/// A miss is reported as not found, never as positivity.
NegativeSearch search_negative_direction(const ScalarModel& model, const NegativeSearchSpec& spec,
                                         const HyperplaneQuadrature& quad = {});

}  // namespace wightlab
