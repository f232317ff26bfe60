// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "wightlab/test_function.hpp"

namespace wightlab {

using MomentumFn = std::function<std::complex<double>(std::span<const double>)>;
using EnvelopeFn = std::function<double(std::span<const double>)>;

/// One momentum-space factor f(k), k = (k0, spatial...).
struct MomentumFactor {
    MomentumFn fn;
    std::vector<Interval> box;  // f is negligible outside
    double scale = 1;           // shortest length on which f varies
    EnvelopeFn envelope;        // bound on sup over k0 of |f| at given spatial k; empty if unknown

    int dim() const { return int(box.size()); }
    std::complex<double> operator()(std::span<const double> k) const { return fn(k); }

    static MomentumFactor from(const TestFunction& f);
    static MomentumFactor from(const BumpFunction& b);
    /// e^{-k0 t + i kvec . y} cut to |k_mu| <= cutoff.
    static MomentumFactor laplace(double time, std::vector<double> position, double cutoff,
                                  double scale);

    /// k -> conj(f(-k)).
    MomentumFactor conjugate_reflected() const;
    EnvelopeFn reflected_envelope() const;
    /// f(k) e^{-i k.a}.
    MomentumFactor translated(std::span<const double> a) const;
    MomentumFactor scaled(std::complex<double> s) const;
    /// f(k) e^{i k.a} at unchanged resolution.
    MomentumFactor phased(std::span<const double> a) const;
};

struct ProductTerm {
    std::complex<double> coef = 1.0;
    std::vector<MomentumFactor> factors;
};

/// Finite sum of tensor products, a test function on (R^d)^n in momentum space.
class MomentumTestFunction {
  public:
    MomentumTestFunction() = default;
    explicit MomentumTestFunction(std::vector<ProductTerm> terms);

    static MomentumTestFunction product(std::vector<MomentumFactor> factors,
                                        std::complex<double> coef = 1.0);
    /// Split a Gaussian-polynomial on R^{dim*n} into tensor terms, one per monomial.
    static MomentumTestFunction from(const TestFunction& f, int dim);

    int order() const;
    int dim() const;
    bool empty() const { return terms_.empty(); }
    const std::vector<ProductTerm>& terms() const { return terms_; }

    std::complex<double> operator()(const std::vector<std::vector<double>>& k) const;

    /// conj(f(-k_n, ..., -k_1)).
    MomentumTestFunction star() const;
    MomentumTestFunction tensor(const MomentumTestFunction& other) const;
    /// Every variable translated by a.
    MomentumTestFunction translated(std::span<const double> a) const;
    /// Multiplied by e^{i a.(k_1 + ... + k_n)}; constant on the support of the
    /// truncated distributions, so resolution is left alone.
    MomentumTestFunction total_phase(std::span<const double> a) const;
    MomentumTestFunction scaled(std::complex<double> s) const;
    MomentumTestFunction operator+(const MomentumTestFunction& other) const;

  private:
    std::vector<ProductTerm> terms_;
};

}  // namespace wightlab
