// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "wightlab/errors.hpp"
#include "wightlab/vector_measures.hpp"

using namespace wightlab;
using std::numbers::pi;

namespace {

MomentumFactor g4(std::vector<double> c, double w, double amp = 1.0) {
    return MomentumFactor::from(TestFunction::gaussian(std::move(c), w, amp));
}

MomentumTestFunction triple() {
    return MomentumTestFunction::product({g4({-2.0, -0.2, -0.8, 0.1}, 0.8),
                                          g4({1.0, 0.6, 0.3, 0.7}, 0.8),
                                          g4({1.0, -0.4, 0.5, -0.8}, 0.8)});
}

// midpoint grid in (r, cos, azimuth) for both free momenta about a fixed axis
double brute_m30(const MomentumTestFunction& phi, double R, int nr, int nu, int na) {
    auto grid = [&](double offset) {
    std::vector<std::array<double, 4>> nodes;
    for (int i = 0; i < nr; ++i)
        for (int a = 0; a < nu; ++a)
            for (int b = 0; b < na; ++b) {
                double r = (i + 0.5) * R / nr, u = -1 + (a + 0.5) * 2.0 / nu, az = (b + offset) * 2 * pi / na;
                double s = std::sqrt(1 - u * u);
                nodes.push_back({r * s * std::cos(az), r * s * std::sin(az), r * u,
                                 r * r * (R / nr) * (2.0 / nu) * (2 * pi / na)});
            }
    return nodes;
    };
    // offset azimuths keep the two grids from meeting where k2 = -k3
    auto first = grid(0.5), second = grid(0.2);
    std::vector<std::vector<double>> k(3, std::vector<double>(4));
    double acc = 0;
    for (const auto& p : first)
        for (const auto& q : second) {
            double o2 = std::hypot(p[0], p[1], p[2]), o3 = std::hypot(q[0], q[1], q[2]);
            double k1[3] = {-p[0] - q[0], -p[1] - q[1], -p[2] - q[2]};
            double o1 = std::hypot(k1[0], k1[1], k1[2]);
            k[1] = {o2, p[0], p[1], p[2]};
            k[2] = {o3, q[0], q[1], q[2]};
            k[0] = {-o2 - o3, k1[0], k1[1], k1[2]};
            double w = p[3] * q[3] / (4 * o2 * o3) / (2 * o1 * (k[0][0] - o1));
            acc += w * phi(k).real();
        }
    return acc;
}

}  // namespace

TEST(VectorMeasure, BoundaryTermAgainstBruteForce) {
    auto phi = triple();
    auto ev = m_n_j_eval(0, phi);
    double ref = brute_m30(phi, 5.0, 24, 12, 12);
    EXPECT_TRUE(ev.converged);
    EXPECT_NEAR(ev.value.real() / ref, 1.0, 2e-2) << ev.value << " " << ref;
}

TEST(VectorMeasure, ZeroOffSupport) {
    // slot two sits at negative energy far from every forward shell configuration used by j = 0
    auto phi = MomentumTestFunction::product(
        {g4({-2.0, 0, 0, 0}, 0.3), g4({-30.0, 0, 0, 0}, 0.3), g4({1.0, 0, 0, 0}, 0.3)});
    SphericalQuadrature q;
    EXPECT_EQ(m_n_j_level(0, SlotIntegrand::from(phi), q, 0), std::complex<double>(0.0));
}

TEST(VectorMeasure, ReflectionSymmetry) {
    auto phi = SlotIntegrand::from(triple());
    auto rphi = reflected(phi);
    SphericalQuadrature q;
    // boundary terms swap with a sign, interior terms swap exactly
    auto m0 = m_n_j_level(0, phi, q, 1), m3 = m_n_j_level(3, rphi, q, 1);
    EXPECT_NEAR(std::abs(m3 + m0), 0.0, 1e-2 * std::abs(m0)) << m0 << " " << m3;
    auto a = m_n_j_level(1, phi, q, 1), b = m_n_j_level(2, rphi, q, 1);
    EXPECT_NEAR(std::abs(a - b), 0.0, 1e-2 * std::abs(a)) << a << " " << b;
}

TEST(VectorMeasure, BadInput) {
    auto two = SlotIntegrand::from(MomentumTestFunction::product({g4({0, 0, 0, 0}, 1), g4({0, 0, 0, 0}, 1)}));
    EXPECT_THROW(m_n_j_level(0, two, {}, 0), DomainError);
    auto phi = SlotIntegrand::from(triple());
    EXPECT_THROW(m_n_j_level(4, phi, {}, 0), DomainError);
    EXPECT_THROW(vector_wightman_pairing(triple(), MomentumMultiplier{}), ConfigError);
    EXPECT_THROW(energy_difference(phi, 3, 1e-3), DomainError);
}

TEST(VectorMeasure, EnergyDifferenceOfLinear) {
    SlotIntegrand f;
    f.reach = {1, 1, 1};
    f.fn = [](const std::vector<std::vector<double>>& k) { return std::complex<double>(3 * k[0][0] + k[1][0] * k[1][0]); };
    auto d = energy_difference(f, 1, 1e-3);
    std::vector<std::vector<double>> k{{0.4, 0, 0, 0}, {0.7, 0, 0, 0}, {0, 0, 0, 0}};
    EXPECT_NEAR(d.fn(k).real(), 3 - 2 * 0.7, 1e-9);
}
