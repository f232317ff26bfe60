// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "wightlab/errors.hpp"

namespace wightlab {

namespace {

QuadratureRule make_gauss_legendre(int n) {
    QuadratureRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    r.gap.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1, p1 = x;
            dp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        double w = 2.0 / ((1 - x * x) * dp * dp);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = r.weights[n - 1 - i] = w;
        r.gap[i] = r.gap[n - 1 - i] = 1 - std::abs(x);
    }
    if (n % 2 == 1) {
        r.nodes[n / 2] = 0;
        r.gap[n / 2] = 1;
    }
    return r;
}

QuadratureRule make_tanh_sinh(double h, double t_max) {
    QuadratureRule r;
    const double half_pi = 0.5 * std::numbers::pi;
    int m = int(std::floor(t_max / h + 1e-9));
    for (int k = -m; k <= m; ++k) {
        double t = k * h;
        double u = half_pi * std::sinh(t);
        double cu = std::cosh(u);
        double w = h * half_pi * std::cosh(t) / (cu * cu);
        double g = 2.0 / (std::exp(2 * std::abs(u)) + 1.0);  // 1 - tanh|u|
        r.nodes.push_back(std::tanh(u));
        r.weights.push_back(w);
        r.gap.push_back(g);
    }
    return r;
}

}  // namespace

const QuadratureRule& gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss-legendre order must be positive");
    static std::mutex m;
    static std::map<int, std::unique_ptr<QuadratureRule>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<QuadratureRule>(make_gauss_legendre(n));
    return *slot;
}

const QuadratureRule& tanh_sinh(double step, double t_max) {
    if (!(step > 0) || !(t_max > 0)) throw DomainError("tanh-sinh step must be positive");
    static std::mutex m;
    static std::map<std::pair<double, double>, std::unique_ptr<QuadratureRule>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto& slot = cache[{step, t_max}];
    if (!slot) slot = std::make_unique<QuadratureRule>(make_tanh_sinh(step, t_max));
    return *slot;
}

std::vector<double> partition_interval(double lo, double hi, std::vector<double> breaks,
                                       double max_piece) {
    std::vector<double> pts{lo};
    std::sort(breaks.begin(), breaks.end());
    const double eps = 1e-13 * std::max({1.0, std::abs(lo), std::abs(hi)});
    for (double b : breaks)
        if (b > pts.back() + eps && b < hi - eps) pts.push_back(b);
    pts.push_back(hi);
    if (!(max_piece > 0)) return pts;
    std::vector<double> out{pts.front()};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        double len = pts[i] - pts[i - 1];
        int pieces = std::max(1, int(std::ceil(len / max_piece - 1e-9)));
        for (int k = 1; k < pieces; ++k) out.push_back(pts[i - 1] + len * k / pieces);
        out.push_back(pts[i]);
    }
    return out;
}

}  // namespace wightlab
