// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/wightman_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wightlab/errors.hpp"
#include "wightlab/partitions.hpp"
#include "wightlab/schwinger_analytic.hpp"

namespace wightlab {

using std::numbers::pi;

MomentumTestFunction laplace_kernel(const std::vector<std::vector<double>>& y) {
    const int n = int(y.size());
    if (n < 2) throw DomainError("need at least two points");
    double mean = 0, gap = std::numeric_limits<double>::infinity(), reach = 0;
    for (int l = 0; l < n; ++l) {
        if (y[l].size() != y[0].size()) throw ShapeError("points differ in dimension");
        mean += y[l][0] / n;
        if (l > 0) {
            if (!(y[l][0] > y[l - 1][0]))
                throw PreconditionError("Euclidean times must be strictly increasing");
            gap = std::min(gap, y[l][0] - y[l - 1][0]);
        }
    }
    for (int l = 0; l < n; ++l) {
        double r2 = (y[l][0] - mean) * (y[l][0] - mean);
        for (std::size_t c = 1; c < y[l].size(); ++c) r2 += y[l][c] * y[l][c];
        reach = std::max(reach, std::sqrt(r2));
    }
    // the integrand decays at least like exp(-gap |k|)
    const double cutoff = 24 / gap;
    const double scale = std::min(gap, 1 / std::max(reach, 1e-300));
    std::vector<MomentumFactor> f;
    for (const auto& p : y)
        f.push_back(MomentumFactor::laplace(p[0] - mean, std::vector<double>(p.begin() + 1, p.end()),
                                            cutoff, std::min(1.0, scale)));
    return MomentumTestFunction::product(std::move(f));
}

BridgeResult laplace_bridge_check(const ScalarModel& model, const std::vector<std::vector<double>>& y,
                                  const Lattice& lat, const HyperplaneQuadrature& quad) {
    model.validate();
    const int n = int(y.size());
    if (n < 2 || n > 3) throw DomainError("the Laplace bridge supports n = 2, 3");
    if (model.dim() > 2) throw DomainError("the Laplace bridge supports d <= 2");
    if (lat.dim != model.dim()) throw ShapeError("lattice dimension does not match the model");
    for (const auto& p : y)
        if (int(p.size()) != model.dim()) throw ShapeError("point dimension does not match the model");
    auto kernel = laplace_kernel(y);
    BridgeResult r;
    r.lhs = model.cumulant(n) * g_n_scalar(y, model.green, lat);
    r.rhs_eval = w_hat_trunc_scalar(kernel, model, quad);
    r.rhs = std::pow(2 * pi, -0.5 * model.dim() * n) * r.rhs_eval.value.real();
    r.gap = std::abs(r.lhs - r.rhs) / std::abs(r.lhs);
    return r;
}

std::vector<double> backward_cone_margins(const ProductTerm& term) {
    const int n = int(term.factors.size());
    const int d = term.factors.front().dim();
    std::vector<Interval> q(d, Interval{0, 0});
    std::vector<double> out;
    for (int j = 0; j + 1 < n; ++j) {
        for (int c = 0; c < d; ++c) {
            q[c].lo += term.factors[j].box[c].lo;
            q[c].hi += term.factors[j].box[c].hi;
        }
        double dist2 = 0;
        for (int c = 1; c < d; ++c) {
            double v = q[c].lo > 0 ? q[c].lo : q[c].hi < 0 ? -q[c].hi : 0.0;
            dist2 += v * v;
        }
        out.push_back(q[0].lo + std::sqrt(dist2));
    }
    return out;
}

SpectralReport spectral_support_check(const std::vector<MomentumTestFunction>& family,
                                      const ScalarModel& model, const HyperplaneQuadrature& quad) {
    SpectralReport rep;
    rep.tolerance = quad.abs_tolerance;
    for (const auto& phi : family) {
        for (const auto& t : phi.terms()) {
            double cell = quad.panel_scale;
            for (const auto& f : t.factors) cell = std::min(cell, quad.panel_scale * f.scale);
            auto m = backward_cone_margins(t);
            if (m.empty() || *std::max_element(m.begin(), m.end()) < cell)
                throw PreconditionError("test function support is not separated from the backward cone");
        }
        auto ev = w_hat_trunc_scalar(phi, model, quad);
        rep.values.push_back(std::abs(ev.value));
        rep.max_abs = std::max(rep.max_abs, rep.values.back());
        rep.tolerance = std::max(rep.tolerance, ev.error);
    }
    return rep;
}

std::vector<ClusterRow> cluster_decay(const MomentumTestFunction& phi, const MomentumTestFunction& psi,
                                      const std::vector<double>& a, const std::vector<double>& lambdas,
                                      const ScalarModel& model, const HyperplaneQuadrature& quad) {
    if (int(a.size()) != model.dim()) throw ShapeError("translation has the wrong dimension");
    double a2 = a[0] * a[0];
    for (std::size_t c = 1; c < a.size(); ++c) a2 -= a[c] * a[c];
    if (!(a2 < 0)) throw PreconditionError("cluster translation must be spacelike");
    std::vector<ClusterRow> rows;
    for (double lam : lambdas) {
        std::vector<double> shift(a.size());
        for (std::size_t c = 0; c < a.size(); ++c) shift[c] = lam * a[c];
        auto f = phi.tensor(psi.translated(shift));
        rows.push_back({lam, w_hat_trunc_scalar(f, model, quad).value});
    }
    return rows;
}

std::complex<double> w_full_scalar(const MomentumTestFunction& phi, const ScalarModel& model,
                                   const HyperplaneQuadrature& quad) {
    const int n = phi.order();
    if (n < 1) throw DomainError("test function has no factors");
    if (n > kMaxPartitionOrder) throw SizeLimitError("order exceeds the partition cap");
    std::complex<double> total = 0;
    for (const auto& t : phi.terms()) {
        CorrelationTable trunc(n);
        for (SubsetMask m = 1; m <= trunc.full_mask(); ++m) {
            auto idx = elements_of(m);
            if (idx.size() < 2) continue;
            std::vector<MomentumFactor> sub;
            for (int i : idx) sub.push_back(t.factors[i]);
            trunc[m] = w_hat_trunc_scalar(MomentumTestFunction::product(sub), model, quad).value;
        }
        total += t.coef * moments_from_cumulants(trunc)[trunc.full_mask()];
    }
    return total;
}

}  // namespace wightlab
