// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/schwinger_mc.hpp"

#include <string>

#include "wightlab/convolution.hpp"
#include "wightlab/parallel.hpp"
#include "wightlab/white_noise.hpp"

namespace wightlab {

void check_resolvable(const TestFunction& phi, const Lattice& lat) {
    if (phi.dim() != lat.dim) throw ShapeError("test function dimension does not match lattice");
    auto box = phi.support_box();
    const double lo = lat.coordinate(0), hi = lat.coordinate(lat.sites_per_axis - 1);
    for (const auto& iv : box)
        if (iv.lo < lo || iv.hi > hi)
            throw DomainError("test function support exceeds the lattice box");
    if (phi.min_width() < 0.5 * lat.spacing)
        throw DomainError("test function is narrower than half a lattice spacing");
}

SchwingerEstimates estimate_schwinger(const McConfig& cfg, const std::vector<TestFunction>& phis) {
    cfg.model.validate();
    cfg.lattice.validate();
    const int n = int(phis.size());
    if (n < 1) throw DomainError("need at least one test function");
    if (n > kMaxMonteCarloOrder)
        throw SizeLimitError("Monte Carlo order " + std::to_string(n) + " exceeds cap " +
                             std::to_string(kMaxMonteCarloOrder));
    if (cfg.batches < kMinBatches)
        throw ConfigError("at least " + std::to_string(kMinBatches) + " batches are required");
    if (cfg.samples < cfg.batches) throw ConfigError("sample budget is below the batch minimum");

    // noise and field live on the periodic padded lattice
    const Lattice lat = cfg.lattice.padded();
    std::vector<ScalarField> tests;
    for (const auto& phi : phis) {
        check_resolvable(phi, cfg.lattice);
        tests.push_back(sample_on_lattice(phi, lat));
    }
    Convolver conv(lat, green_alpha_lattice(lat, cfg.model.green));
    const double v = lat.cell_volume();
    const SubsetMask full = (SubsetMask{1} << n) - 1;

    BatchSums acc;
    acc.sums.assign(cfg.batches, std::vector<std::complex<double>>(full + 1));
    acc.counts.assign(cfg.batches, 0);
    parallel_for(cfg.batches, cfg.threads, [&](std::size_t b) {
        const std::size_t lo = cfg.samples * b / cfg.batches;
        const std::size_t hi = cfg.samples * (b + 1) / cfg.batches;
        std::vector<double> smeared(n), prod(full + 1);
        auto& sums = acc.sums[b];
        for (std::size_t r = lo; r < hi; ++r) {
            auto x = conv.apply(sample_white_noise(lat, cfg.model.levy, cfg.seed, r));
            for (int j = 0; j < n; ++j) {
                double s = 0;
                for (std::size_t i = 0; i < x.values.size(); ++i) s += x.values[i] * tests[j].values[i];
                smeared[j] = s * v;
            }
            prod[0] = 1;
            for (SubsetMask m = 1; m <= full; ++m) {
                int low = std::countr_zero(m);
                prod[m] = prod[m & (m - 1)] * smeared[low];
                sums[m] += prod[m];
            }
        }
        acc.counts[b] = hi - lo;
    });

    SchwingerEstimates out{EstimateTable(n), EstimateTable(n)};
    auto moments = batch_mean_estimates(acc);
    for (SubsetMask m = 1; m <= full; ++m) out.moments[m] = moments[m];
    auto truncated = jackknife(acc, [&](const std::vector<std::complex<double>>& mean) {
        CorrelationTable w(n);
        for (SubsetMask m = 1; m <= full; ++m) w[m] = mean[m];
        auto t = cumulants_from_moments(w);
        std::vector<std::complex<double>> r(full + 1);
        for (SubsetMask m = 1; m <= full; ++m) r[m] = t[m];
        return r;
    });
    for (SubsetMask m = 1; m <= full; ++m) out.truncated[m] = truncated[m];
    return out;
}

}  // namespace wightlab
