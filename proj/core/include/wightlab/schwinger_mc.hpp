// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "wightlab/lattice.hpp"
#include "wightlab/partitions.hpp"
#include "wightlab/scalar_model.hpp"
#include "wightlab/statistics.hpp"

namespace wightlab {

inline constexpr int kMaxMonteCarloOrder = 6;
inline constexpr std::size_t kMinBatches = 20;

struct McConfig {
    Lattice lattice;
    ScalarModel model;
    std::size_t samples = 10000;
    std::size_t batches = kMinBatches;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

using EstimateTable = BasicCorrelationTable<MCEstimate>;

struct SchwingerEstimates {
    EstimateTable moments;    // raw products over every sub-tuple
    EstimateTable truncated;  // jackknifed cumulants
};

/// Monte Carlo moments of the smeared fields <X, phi_j> over independent
/// lattice realizations, with batch-mean and jackknife errors.
SchwingerEstimates estimate_schwinger(const McConfig& config, const std::vector<TestFunction>& phis);

/// Throws DomainError unless phi is real and its effective support fits in the lattice box.
void check_resolvable(const TestFunction& phi, const Lattice& lat);

}  // namespace wightlab
