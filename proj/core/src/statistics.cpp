// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/statistics.hpp"

#include <cmath>

#include "wightlab/errors.hpp"

namespace wightlab {

namespace {

std::size_t check(const BatchSums& b) {
    if (b.sums.size() < 2 || b.sums.size() != b.counts.size())
        throw ConfigError("need at least two batches with matching counts");
    std::size_t total = 0;
    for (auto c : b.counts) {
        if (c == 0) throw ConfigError("empty batch");
        total += c;
    }
    return total;
}

std::vector<std::complex<double>> totals(const BatchSums& b) {
    std::vector<std::complex<double>> t(b.sums.front().size());
    for (const auto& s : b.sums)
        for (std::size_t i = 0; i < t.size(); ++i) t[i] += s[i];
    return t;
}

}  // namespace

std::vector<MCEstimate> batch_mean_estimates(const BatchSums& b) {
    const std::size_t total = check(b);
    const std::size_t nb = b.sums.size();
    auto t = totals(b);
    std::vector<MCEstimate> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::complex<double> mean = t[i] / double(total);
        double var = 0;
        for (std::size_t k = 0; k < nb; ++k) {
            std::complex<double> bm = b.sums[k][i] / double(b.counts[k]);
            var += double(b.counts[k]) * std::norm(bm - mean);
        }
        // weighted variance of batch means, scaled to the variance of the grand mean
        var /= double(total) * double(nb - 1);
        out[i] = {mean, std::sqrt(var), total};
    }
    return out;
}

std::vector<MCEstimate> jackknife(
    const BatchSums& b,
    const std::function<std::vector<std::complex<double>>(const std::vector<std::complex<double>>&)>&
        derived) {
    const std::size_t total = check(b);
    const std::size_t nb = b.sums.size();
    auto t = totals(b);
    std::vector<std::complex<double>> mean(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) mean[i] = t[i] / double(total);
    auto full = derived(mean);

    std::vector<std::vector<std::complex<double>>> loo(nb);
    for (std::size_t k = 0; k < nb; ++k) {
        std::vector<std::complex<double>> m(t.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            m[i] = (t[i] - b.sums[k][i]) / double(total - b.counts[k]);
        loo[k] = derived(m);
    }
    std::vector<MCEstimate> out(full.size());
    for (std::size_t i = 0; i < full.size(); ++i) {
        std::complex<double> avg = 0;
        for (std::size_t k = 0; k < nb; ++k) avg += loo[k][i];
        avg /= double(nb);
        double var = 0;
        for (std::size_t k = 0; k < nb; ++k) var += std::norm(loo[k][i] - avg);
        var *= double(nb - 1) / double(nb);
        out[i] = {full[i], std::sqrt(var), total};
    }
    return out;
}

}  // namespace wightlab
