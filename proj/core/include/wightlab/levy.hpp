// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "wightlab/quaternion.hpp"
#include "wightlab/test_function.hpp"

namespace wightlab {

/// Point mass of the jump measure: `rate` times a delta at `jump`.
struct Atom {
    double jump = 1;
    double rate = 1;
};

/// Drift a, Gaussian variance sigma2 and a finite atomic jump measure.
struct LevyTriple {
    double drift = 0;
    double sigma2 = 0;
    std::vector<Atom> atoms;

    void validate() const;
};

/// Levy-Khinchine exponent with the s/(1+s^2) compensator.
std::complex<double> psi(double t, const LevyTriple& triple);

/// Coefficient c_n in the cumulant expansion of psi.
double cumulant_coeff(int n, const LevyTriple& triple);

/// Drift after folding in the compensator of every atom.
double effective_drift(const LevyTriple& triple);

struct CubatureSpec {
    double rel_tolerance = 1e-10;
    double abs_tolerance = 1e-13;
    int max_depth = 15;
};

/// exp(int psi(phi(x)) dx) for a real test function on R^d, d <= 3.
std::complex<double> characteristic_functional(const TestFunction& phi, const LevyTriple& triple,
                                               const CubatureSpec& spec = {});

/// Levy data of the quaternionic noise; the jump measure lives on the real axis.
struct QuaternionLevyData {
    double beta = 0;
    double sigma0 = 1;
    double sigma = 1;
    std::vector<Atom> atoms;

    void validate() const;
};

std::complex<double> psi(const Quaternion& x, const QuaternionLevyData& data);

/// Coefficients of the expansion of psi used by the vector Schwinger functions.
double vector_c0(const QuaternionLevyData& data);
double vector_c(const QuaternionLevyData& data);
/// c^n_l = binom(n, l)/(l + 1) * int y_0^{n-l} |y_vec|^l dnu; the vector part of
/// every atom vanishes, so only l = 0 survives.
double vector_cnl(int n, int l, const QuaternionLevyData& data);

/// Fitted exponent p in |psi(x)| ~ |x|^p as x -> 0 along the real axis.
struct SmallXOrder {
    double exponent = 0;
    bool meets_four_thirds = false;
};

SmallXOrder small_x_order(const QuaternionLevyData& data);

}  // namespace wightlab
