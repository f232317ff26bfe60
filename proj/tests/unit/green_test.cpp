// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "wightlab/convolution.hpp"
#include "wightlab/errors.hpp"
#include "wightlab/green.hpp"

using namespace wightlab;
using std::numbers::pi;

TEST(Green, MomentumExamples) {
    std::vector<double> zero{0.0, 0.0}, unit{1.0, 0.0};
    EXPECT_DOUBLE_EQ(green_alpha_momentum(zero, {2, 0.5, 1.0}), 1.0);
    EXPECT_DOUBLE_EQ(green_alpha_momentum(zero, {2, 0.5, 2.0}), 0.5);
    EXPECT_NEAR(green_alpha_momentum(unit, {2, 0.25, 1.0}), std::pow(2.0, -0.25), 1e-15);
}

TEST(Green, SpecValidation) {
    EXPECT_THROW((GreenSpec{1, 0.6, 1.0}.validate()), DomainError);
    EXPECT_THROW((GreenSpec{1, 0.0, 1.0}.validate()), DomainError);
    EXPECT_THROW((GreenSpec{1, 0.5, -1.0}.validate()), ConfigError);
    EXPECT_THROW(green_alpha_lattice({1, 16, 0.1}, {1, 0.5, 1.0}), ConfigError);
}

TEST(Green, SumRuleAndSymmetry) {
    for (double alpha : {0.25, 0.5}) {
        Lattice lat{1, 256, 0.1};
        GreenSpec spec{1, alpha, 1.5};
        auto g = green_alpha_lattice(lat, spec);
        double sum = 0;
        for (double v : g.values) sum += v * lat.spacing;
        EXPECT_NEAR(sum / std::pow(spec.m0, -2 * alpha), 1.0, 1e-3);
        for (int m = 1; m < 128; ++m) EXPECT_EQ(g.values[m], g.values[256 - m]);
    }
    Lattice lat2{2, 32, 0.25};
    auto g2 = green_alpha_lattice(lat2, {2, 0.5, 1.0});
    for (std::size_t s = 0; s < g2.values.size(); ++s) {
        auto m = lat2.multi_index(s);
        std::vector<int> neg{-m[0], -m[1]};
        EXPECT_EQ(g2.values[s], g2.values[lat2.site_index(neg)]);
    }
}

TEST(Green, MonotoneDecayInOneDimension) {
    Lattice lat{1, 256, 0.1};
    auto g = green_alpha_lattice(lat, {1, 0.5, 1.0});
    for (int m = 1; m < 64; ++m) EXPECT_LT(g.values[m], g.values[m - 1]) << m;
}

TEST(Green, MatchesBandLimitedOracle) {
    {
        Lattice lat{1, 2048, 0.05};
        GreenSpec spec{1, 0.5, 1.0};
        auto g = green_alpha_lattice(lat, spec);
        for (int m : {0, 1, 5, 20, 60, 120}) {
            std::vector<double> x{m * lat.spacing};
            double ref = green_alpha_band_limited(x, spec, lat.spacing);
            EXPECT_NEAR(g.values[m] / ref, 1.0, 1e-3) << m;
        }
    }
    {
        Lattice lat{2, 64, 0.25};
        GreenSpec spec{2, 0.25, 1.0};
        auto g = green_alpha_lattice(lat, spec);
        for (auto [a, b] : {std::pair{0, 0}, {1, 0}, {3, 2}, {8, 5}}) {
            std::vector<double> x{a * lat.spacing, b * lat.spacing};
            double ref = green_alpha_band_limited(x, spec, lat.spacing);
            EXPECT_NEAR(g.values[lat.site_index({a, b})] / ref, 1.0, 1e-3) << a << "," << b;
        }
    }
}

TEST(Green, ApproachesContinuumBesselKernel) {
    Lattice lat{1, 2048, 0.02};
    auto g = green_alpha_lattice(lat, {1, 0.5, 1.0});
    for (int m : {50, 100, 200}) {
        double x = m * lat.spacing;
        double k0 = boost::math::cyl_bessel_k(0, x) / pi;
        EXPECT_NEAR(g.values[m] / k0, 1.0, 2e-2) << x;
    }
}

TEST(Green, SquaredKernelIsDoubledExponent) {
    Lattice lat{2, 32, 0.3};
    auto g = fractional_kernel_lattice(lat, 0.25, 1.0);
    auto g2 = fractional_kernel_lattice(lat, 0.5, 1.0);
    auto conv = convolve(g, g);
    for (std::size_t s = 0; s < g.values.size(); s += 37)
        EXPECT_NEAR(conv.values[s], g2.values[s], 1e-12 * std::abs(g2.values[0]));
}

TEST(Quaternion, HamiltonRelations) {
    EXPECT_EQ(kQuatI * kQuatJ, kQuatK);
    EXPECT_EQ(kQuatJ * kQuatK, kQuatI);
    EXPECT_EQ(kQuatK * kQuatI, kQuatJ);
    EXPECT_EQ(kQuatI * kQuatI, -kQuatOne);
    Quaternion q{0.3, -1.2, 0.7, 2.0};
    EXPECT_EQ(q * kQuatOne, q);
    EXPECT_EQ((kQuatOne + kQuatI) * (kQuatOne + kQuatJ), (Quaternion{1, 1, 1, 1}));
    std::mt19937 rng(3);
    std::normal_distribution<double> g;
    for (int t = 0; t < 20; ++t) {
        Quaternion a{g(rng), g(rng), g(rng), g(rng)}, b{g(rng), g(rng), g(rng), g(rng)},
            c{g(rng), g(rng), g(rng), g(rng)};
        auto l = (a * b) * c, r = a * (b * c);
        EXPECT_NEAR((l - r).norm(), 0, 1e-12);
        EXPECT_NEAR((a * b).norm(), a.norm() * b.norm(), 1e-12);
    }
}

TEST(Harmonic, ClosedFormValues) {
    std::vector<double> e{0, 1, 0, 0};
    EXPECT_NEAR(harmonic_green(e), 1 / (4 * pi * pi), 1e-16);
    std::vector<double> x{0.3, -0.2, 0.5, 0.1}, mx{-0.3, 0.2, -0.5, -0.1};
    auto k = dbar_harmonic_green(x), km = dbar_harmonic_green(mx);
    EXPECT_NEAR((k + km).norm(), 0, 1e-15);
    EXPECT_THROW(harmonic_green(std::vector<double>(4, 0.0)), SingularPointError);
    Lattice lat{4, 8, 0.5};
    EXPECT_EQ(dbar_g_kernel(lat).values[0], Quaternion{});
}

TEST(Harmonic, OriginCellAverage) {
    // independent decomposition: the shell between the 1/2 and 1/8 cubes by a
    // midpoint rule, then I(1/2) = 16/15 * shell
    const int m = 48;
    const double step = 1.0 / m;
    double shell = 0;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                for (int d = 0; d < m; ++d) {
                    double u[4] = {-0.5 + (a + 0.5) * step, -0.5 + (b + 0.5) * step,
                                   -0.5 + (c + 0.5) * step, -0.5 + (d + 0.5) * step};
                    double mx = 0, r2 = 0;
                    for (double v : u) mx = std::max(mx, std::abs(v)), r2 += v * v;
                    if (mx > 0.125) shell += 1.0 / r2;
                }
    shell *= std::pow(step, 4);
    double ref = 16.0 / 15.0 * shell / (4 * pi * pi);
    EXPECT_NEAR(harmonic_green_origin_average(1.0) / ref, 1.0, 2e-3);
    EXPECT_NEAR(harmonic_green_origin_average(0.5), 4 * harmonic_green_origin_average(1.0), 1e-14);
}

TEST(Harmonic, GradientMatchesFiniteDifference) {
    Lattice lat{4, 40, 0.1};
    auto g = harmonic_green_lattice(lat);
    auto k = dbar_g_kernel(lat);
    int checked = 0;
    for (std::size_t s = 0; s < g.values.size(); s += 97) {
        auto m = lat.multi_index(s);
        double r2 = 0;
        for (int a = 0; a < 4; ++a) r2 += double(lat.wrapped(m[a])) * lat.wrapped(m[a]);
        if (r2 < 256 || r2 > 18 * 18) continue;
        for (int mu = 0; mu < 4; ++mu) {
            auto p = m, q = m;
            p[mu] += 1;
            q[mu] -= 1;
            double fd = (g.values[lat.site_index(p)] - g.values[lat.site_index(q)]) / (2 * lat.spacing);
            double exact = -k.values[s][mu];  // -dbar g carries -grad g
            if (std::abs(exact) < 1e-3 * k.values[s].norm()) continue;
            EXPECT_NEAR(fd / exact, 1.0, 1e-2);
            ++checked;
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(Harmonic, DiscreteHarmonicityAndFlux) {
    const double h = 0.1;
    auto g_at = [&](int a, int b, int c, int d) {
        if (a == 0 && b == 0 && c == 0 && d == 0) return harmonic_green_origin_average(h);
        std::vector<double> x{a * h, b * h, c * h, d * h};
        return harmonic_green(x);
    };
    auto lap = [&](int r) {
        double s = -8 * g_at(r, 0, 0, 0);
        s += g_at(r + 1, 0, 0, 0) + g_at(r - 1, 0, 0, 0);
        s += 2 * g_at(r, 1, 0, 0) + 2 * g_at(r, 0, 1, 0) + 2 * g_at(r, 0, 0, 1);
        return s / (h * h);
    };
    // relative defect ~ (h/r)^2
    double d8 = std::abs(lap(8)) * 64 * h * h / g_at(8, 0, 0, 0);
    double d16 = std::abs(lap(16)) * 256 * h * h / g_at(16, 0, 0, 0);
    EXPECT_LT(d8, 0.5);
    EXPECT_NEAR(d8 / d16, 4.0, 1.5);

    // flux of -grad g out of the lattice cube of half side R
    const int R = 8;
    double flux = 0;
    for (int b = -R; b <= R; ++b)
        for (int c = -R; c <= R; ++c)
            for (int d = -R; d <= R; ++d) {
                double w = (std::abs(b) == R ? 0.5 : 1) * (std::abs(c) == R ? 0.5 : 1) *
                           (std::abs(d) == R ? 0.5 : 1);
                double grad = (g_at(R + 1, b, c, d) - g_at(R - 1, b, c, d)) / (2 * h);
                flux += -grad * w * h * h * h;
            }
    flux *= 8;  // eight faces by symmetry
    EXPECT_NEAR(flux, 1.0, 0.05);
}

TEST(Harmonic, DDbarIsLaplacian) {
    QuaternionTestFunction f;
    for (int c = 0; c < 4; ++c) {
        Polynomial p(4);
        p.add_term({0, 0, 0, 0}, 1.0 + c);
        p.add_term({1, 0, c % 2, 0}, 0.5);
        f.comp[c] = TestFunction({0.1, -0.2, 0.3, 0.0}, {0.8, 0.8, 0.8, 0.8}, p);
    }
    auto lap = apply_d(apply_dbar(f));
    auto lap2 = apply_dbar(apply_d(f));
    std::vector<double> x{0.3, 0.1, -0.4, 0.2};
    const double h = 1e-3;
    for (int c = 0; c < 4; ++c) {
        double fd = 0;
        for (int mu = 0; mu < 4; ++mu) {
            auto p = x, m = x;
            p[mu] += h;
            m[mu] -= h;
            fd += (f.comp[c](p).real() - 2 * f.comp[c](x).real() + f.comp[c](m).real()) / (h * h);
        }
        EXPECT_NEAR(lap(x)[c] / fd, 1.0, 1e-4);
        EXPECT_NEAR(lap2(x)[c] / fd, 1.0, 1e-4);
    }
}
