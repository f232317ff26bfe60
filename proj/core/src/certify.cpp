// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/certify.hpp"

#include <algorithm>
#include <cmath>

#include "wightlab/errors.hpp"
#include "wightlab/partitions.hpp"
#include "wightlab/wightman_checks.hpp"

namespace wightlab {

Certificate hssc_certify(const ScalarModel& model, int n_max, const std::vector<BorchersMonomial>& family,
                         const CertifySpec& spec) {
    model.validate();
    if (n_max < 2) throw DomainError("n_max must be at least 2");
    const int d = model.dim();
    int max_deg = n_max;
    for (const auto& f : family) {
        if (f.degree() < 1) throw DomainError("family members need at least one slot");
        for (const auto& s : f.slots)
            if (s.dim() != d) throw ShapeError("slot dimension does not match the model");
        max_deg = std::max(max_deg, f.degree());
    }
    const int pair_order = spec.pair_order > 0 ? spec.pair_order : n_max;
    const int len = std::min(2 * max_deg, kMaxPartitionOrder);

    Certificate cert;
    cert.model = model;
    cert.n_max = n_max;
    cert.table = scalar_bound_table(model, len, spec.grid, spec.gamma);
    cert.fast_path = !cert.table.higher_active;
    cert.chain = constant_chain(cert.table.a);

    const SchwartzNormSpec norm_spec{0, 2 * d};
    std::vector<double> norms;
    for (const auto& f : family) {
        auto br = schwartz_norm(f.slots, norm_spec, spec.norm_rel_width);
        norms.push_back(std::abs(f.coef) * br.lower);
    }
    auto label = [&](std::size_t i) {
        return family[i].label.empty() ? "F" + std::to_string(i) : family[i].label;
    };
    auto ratio = [](double v, double bound) { return bound > 0 ? v / bound : (v > 0 ? INFINITY : 0.0); };

    for (std::size_t i = 0; i < family.size(); ++i) {
        const int n = family[i].degree();
        if (n < 2 || n > n_max) continue;
        SingleCheck c;
        c.label = label(i);
        c.order = n;
        const auto ev = w_hat_trunc_scalar(family[i].momentum(), model, spec.quad);
        c.value = ev.value;
        c.error = ev.error;
        c.norm = norms[i];
        c.bound = cert.table.at(n) * c.norm;
        c.ratio = ratio(std::abs(c.value) + c.error, c.bound);
        cert.worst_single_ratio = std::max(cert.worst_single_ratio, c.ratio);
        if (c.ratio > 1) cert.witnesses.push_back("single " + c.label);
        cert.singles.push_back(c);
    }

    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = 0; j < family.size(); ++j) {
            const int m = family[i].degree(), n = family[j].degree();
            if (m + n > pair_order || 2 * std::max(m, n) > len) continue;
            PairCheck p;
            p.left = label(i);
            p.right = label(j);
            p.m = m;
            p.n = n;
            p.value = w_full_scalar(family[i].momentum().star().tensor(family[j].momentum()), model, spec.quad);
            p.chain_bound = cert.chain.b_at(m + n) * norms[i] * norms[j];
            p.bound = cert.chain.c_at(m) * cert.chain.c_at(n) * norms[i] * norms[j];
            p.ratio = std::max(ratio(std::abs(p.value), p.chain_bound), ratio(std::abs(p.value), p.bound));
            cert.worst_pair_ratio = std::max(cert.worst_pair_ratio, p.ratio);
            if (p.ratio > 1 || p.chain_bound > p.bound * (1 + 1e-12))
                cert.witnesses.push_back("pair " + p.left + " | " + p.right);
            cert.pairs.push_back(p);
        }

    bool bounds_ok = true;
    if (cert.table.higher_active) {
        const auto& s = cert.table.factors.double_sup;
        bounds_ok = std::isfinite(s.value) && s.stable && s.value < s.ceiling;
        if (!bounds_ok) cert.witnesses.push_back("bound integral not stable below its ceiling");
    }
    cert.pass = bounds_ok && cert.witnesses.empty();
    return cert;
}

}  // namespace wightlab
