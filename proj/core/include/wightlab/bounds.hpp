// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <vector>

#include "wightlab/scalar_model.hpp"

namespace wightlab {

/// Nested parameter grids for sup estimates: `points` per axis on
/// [-half_width, half_width], refined `refinements` times by interleaving.
/// The box doubles while the outer shell still exceeds the interior maximum.
struct BoundGrid {
    int points = 11;
    double half_width = 10;
    int refinements = 1;
    int max_box_doublings = 3;
    double stability = 2e-2;
    double tolerance = 1e-7;
    unsigned threads = 1;
};

/// sup over (a, b, c) of the double integral of |x y (x+y+c)|^{-alpha}
/// / ((1 + (x+a)^2)(1 + (y+b)^2)).
struct DoubleSupEstimate {
    double value = 0;
    std::array<double, 3> argmax{};
    std::vector<double> history;  // sup on each nested grid
    double half_width = 0;        // final box
    double shell_max = 0;         // largest value on the last outer shell
    bool stable = false;
    double c1 = 0, c2 = 0;        // C1 + C2 |t|^{-gamma} bound of the inner integral
    double ceiling = 0;           // C1 (2/(1-alpha) + pi) + C2 (4/(1-alpha-gamma) + 2 pi)
};

DoubleSupEstimate double_singular_sup(double alpha, double gamma, const BoundGrid& grid = {});
double double_singular_integral(double alpha, double a, double b, double c, double tol = 1e-6);

/// Integral over R^{d-1} of (1 + |k|^2)^{-(d-1)}.
double spatial_factor(int d);
/// sup over the spatial momentum of the integral over k0 of |k^2 - m0^2|^{-beta} / (1 + k0^2).
double energy_sup_factor(double beta, double m0, const BoundGrid& grid = {});

struct ScalarBound {
    double a_n = 0;
    double prefactor = 0;  // n |c_n| 2^{n-1} (2 pi)^{d - dn/2}
    double spatial = 0;
    double energy_sup = 0;
    double third = 0;      // 8 m0^{-3 alpha} times the double sup
    DoubleSupEstimate double_sup;
};

/// Constant a_n with |W^T_n(phi)| <= a_n ||phi||_{0,2d}, n >= 3.
ScalarBound bound_integral_scalar(int n, const ScalarModel& model, const BoundGrid& grid = {},
                                  double gamma = 0.25);
/// Same constant for n = 2: exact free-field integral at alpha = 1/2, the
/// factorized estimate otherwise.
double bound_two_point(const ScalarModel& model, int norm_power, const BoundGrid& grid = {});

/// a_1 .. a_len for one model; the expensive factors are shared across n and
/// skipped when every cumulant beyond the second vanishes.
struct ScalarBoundTable {
    std::vector<double> a;  // index n - 1
    ScalarBound factors;    // a_n left at zero
    bool higher_active = false;
    double at(int n) const { return a.at(n - 1); }
};
ScalarBoundTable scalar_bound_table(const ScalarModel& model, int len, const BoundGrid& grid = {},
                                    double gamma = 0.25);

/// 4 pi int lambda^{2-gamma} (1 + lambda^2)^{-3/2}.
double radial_factor(int gamma);
/// A(|a|) = int |k + a|^{-1} |k|^{-1} (1 + |k|^2)^{-3/2} dk over R^3.
double shifted_singular_integral(double a);

struct VectorSupEstimate {
    double value = 0;
    double argmax = 0;
    std::vector<double> history;
    double half_width = 0;
    double ceiling = 0;  // 2 pi^2 int (1 + l^2)^{-3/2} dl = 4 pi^2
    bool stable = false;
};
VectorSupEstimate shifted_singular_sup(const BoundGrid& grid = {});

/// C^n_j with |M^n_j(phi)| <= C^n_j ||phi||_{0,3}.
double bound_integral_vector(int n, int j, const BoundGrid& grid = {});

struct ConstantChain {
    std::vector<double> b;  // b[k] for orders 1..len, index k-1
    std::vector<double> c;  // c[k] for k = 1..len/2, index k-1
    double b_at(int n) const { return b.at(n - 1); }
    double c_at(int n) const { return c.at(n - 1); }
};

/// b_n = sum over set partitions of prod a_{|block|}; c_n = max(max_{j <= 2n} b_j, 1).
ConstantChain constant_chain(const std::vector<double>& a);

}  // namespace wightlab
