// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace wightlab {

/// Nodes and weights on [-1, 1]. `gap` holds 1 - |x| computed without
/// cancellation, so integrands can resolve endpoint singularities.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> gap;
};

/// Gauss-Legendre rule of order n (cached, thread-safe).
const QuadratureRule& gauss_legendre(int n);

/// Truncated tanh-sinh rule with step h over |t| <= t_max (cached).
const QuadratureRule& tanh_sinh(double step, double t_max = 3.2);

/// Sum of f over the rule mapped to [a, b]. Nodes closer than `min_gap`
/// (relative to the half width) to either end are dropped.
template <class F>
auto integrate_rule(F&& f, double a, double b, const QuadratureRule& rule, double min_gap = 0)
    -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    R acc{};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        if (rule.gap[i] < min_gap) continue;
        double x = rule.nodes[i] < 0 ? a + h * rule.gap[i] : b - h * rule.gap[i];
        if (rule.nodes[i] == 0) x = c;
        acc += rule.weights[i] * f(x);
    }
    return acc * h;
}

/// Sorted, deduplicated breakpoints strictly inside (lo, hi) plus the ends,
/// with pieces longer than max_piece split evenly.
std::vector<double> partition_interval(double lo, double hi, std::vector<double> breaks,
                                       double max_piece);

/// Piecewise rule over a partition.
template <class F>
auto integrate_pieces(F&& f, const std::vector<double>& edges, const QuadratureRule& rule,
                      double min_gap = 0) -> decltype(f(0.0)) {
    decltype(f(0.0)) acc{};
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        acc += integrate_rule(f, edges[i], edges[i + 1], rule, min_gap);
    return acc;
}

/// Integral over [lo, hi] split at the breaks and into pieces no longer than
/// max_piece. Pieces touching lo, hi or a break use `edge_rule`; the interior
/// pieces of a long stretch use `smooth_rule`.
template <class F>
auto integrate_partition(F&& f, double lo, double hi, std::vector<double> breaks, double max_piece,
                         const QuadratureRule& edge_rule, const QuadratureRule& smooth_rule)
    -> decltype(f(0.0)) {
    decltype(f(0.0)) acc{};
    auto pts = partition_interval(lo, hi, std::move(breaks), 0);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double len = pts[i + 1] - pts[i];
        const int pieces = max_piece > 0 ? std::max(1, int(std::ceil(len / max_piece - 1e-9))) : 1;
        for (int k = 0; k < pieces; ++k) {
            double a = pts[i] + len * k / pieces, b = k + 1 == pieces ? pts[i + 1] : pts[i] + len * (k + 1) / pieces;
            bool edge = k == 0 || k + 1 == pieces;
            acc += integrate_rule(f, a, b, edge ? edge_rule : smooth_rule);
        }
    }
    return acc;
}

}  // namespace wightlab
