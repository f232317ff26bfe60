// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace wightlab {

struct MCEstimate {
    std::complex<double> mean;
    double std_error = 0;
    std::size_t n_samples = 0;
};

/// Per-batch sums of a vector-valued observable.
struct BatchSums {
    std::vector<std::vector<std::complex<double>>> sums;  // [batch][component]
    std::vector<std::size_t> counts;                      // samples per batch
};

/// Batch-means estimate of every component.
std::vector<MCEstimate> batch_mean_estimates(const BatchSums& batches);

/// Leave-one-batch-out jackknife of a derived quantity g(means).
std::vector<MCEstimate> jackknife(
    const BatchSums& batches,
    const std::function<std::vector<std::complex<double>>(const std::vector<std::complex<double>>&)>&
        derived);

}  // namespace wightlab
