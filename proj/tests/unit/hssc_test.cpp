// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "wightlab/bounds.hpp"
#include "wightlab/certify.hpp"
#include "wightlab/errors.hpp"
#include "wightlab/partitions.hpp"
#include "wightlab/schwartz_norm.hpp"

using namespace wightlab;
using std::numbers::pi;

TEST(SchwartzNorm, UnitGaussian) {
    auto f = TestFunction::gaussian({0.0}, 1.0);
    auto b = schwartz_norm(f, 1, {0, 0});
    EXPECT_LE(b.lower, 1.0 + 1e-12);
    EXPECT_GE(b.upper, 1.0 - 1e-12);
    EXPECT_LE(b.width(), 1e-2);
}

TEST(SchwartzNorm, WeightedGaussianClosedForm) {
    // sup (1 + x^2) e^{-x^2/2} = 2 e^{-1/2} at x^2 = 1
    auto b = schwartz_norm(TestFunction::gaussian({0.0}, 1.0), 1, {0, 2});
    const double exact = 2 * std::exp(-0.5);
    EXPECT_LE(b.lower, exact * (1 + 1e-12));
    EXPECT_GE(b.upper, exact * (1 - 1e-12));
    EXPECT_LE(b.width(), 1e-2);
}

TEST(SchwartzNorm, TensorFactorizes) {
    auto f = TestFunction::gaussian({0.3, -0.5}, 0.7, 2.0);
    auto g = TestFunction::gaussian({-1.0, 0.2}, 1.2);
    SchwartzNormSpec spec{1, 4};
    auto bf = schwartz_norm(f, 2, spec), bg = schwartz_norm(g, 2, spec);
    auto joint = schwartz_norm(f.tensor(g), 2, spec);
    auto slots = schwartz_norm(std::vector<TestFunction>{f, g}, spec);
    EXPECT_LE(joint.lower, bf.upper * bg.upper);
    EXPECT_GE(joint.upper, bf.lower * bg.lower);
    EXPECT_LE(slots.lower, bf.upper * bg.upper);
    EXPECT_GE(slots.upper, bf.lower * bg.lower);
}

TEST(SchwartzNorm, MonotoneInOrderAndWeight) {
    Polynomial p(2);
    p.add_term({1, 0}, 1.0);
    p.add_term({0, 2}, {0.0, 0.5});
    TestFunction f({0.2, -0.1}, {0.9, 1.1}, p);
    auto small = schwartz_norm(f, 1, {0, 0});
    auto large = schwartz_norm(f, 1, {1, 2});
    EXPECT_LE(small.lower, large.upper);
    EXPECT_LE(small.upper, large.upper * 1.02);
    EXPECT_LE(large.width(), 1e-2);
}

TEST(SchwartzNorm, BadSpec) {
    auto f = TestFunction::gaussian({0.0}, 1.0);
    EXPECT_THROW(schwartz_norm(f, 1, {-1, 0}), ConfigError);
    EXPECT_THROW(schwartz_norm(f, 2, {0, 0}), ShapeError);
}

TEST(Bounds, SpatialFactor) {
    EXPECT_NEAR(spatial_factor(2), pi, 1e-10);
    EXPECT_NEAR(spatial_factor(1), 1.0, 0);
    EXPECT_NEAR(spatial_factor(4), pi * pi / 4, 1e-8);
}

TEST(Bounds, RadialFactors) {
    EXPECT_NEAR(radial_factor(1), 4 * pi, 1e-6);
    EXPECT_NEAR(radial_factor(2), 4 * pi, 1e-6);
    EXPECT_NEAR(shifted_singular_integral(0), 4 * pi, 1e-8);
    for (double a : {0.5, 3.0, 40.0}) EXPECT_LE(shifted_singular_integral(a), 8 * pi / a);
}

TEST(Bounds, ShiftedSupBelowCeiling) {
    BoundGrid g;
    g.points = 9;
    auto s = shifted_singular_sup(g);
    EXPECT_NEAR(s.value, 4 * pi, 1e-6);
    EXPECT_LT(s.value, s.ceiling);
    EXPECT_TRUE(s.stable);
}

TEST(Bounds, EnergyFactorBelowTailEstimate) {
    const double f = energy_sup_factor(0.5, 1.0);
    EXPECT_GT(f, 0);
    EXPECT_LE(f, 2 * (4 + pi));
}

TEST(Bounds, InnerIntegralBelowLargeTEstimate) {
    // for fixed a the inner integral tends to int |x|^{-2 alpha}... bounded by C1 |t|^{-alpha} style chain
    const double c1 = 2 * pi / std::cos(pi / 4);
    EXPECT_NEAR(c1, 8.885765876, 1e-8);
    const double j = double_singular_integral(0.5, 0, 0, 50);
    EXPECT_GT(j, 0);
    EXPECT_LT(j, double_singular_integral(0.5, 0, 0, 0));
}

TEST(Bounds, DoubleSupCoarse) {
    BoundGrid g;
    g.points = 5;
    g.refinements = 1;
    auto s = double_singular_sup(0.5, 0.25, g);
    EXPECT_TRUE(std::isfinite(s.value));
    EXPECT_LT(s.value, s.ceiling);
    EXPECT_NEAR(s.ceiling, 391.6268, 1e-3);
    ASSERT_EQ(s.history.size(), 2u);
    EXPECT_LE(s.history[0], s.history[1] * (1 + 1e-12));
    EXPECT_TRUE(s.stable);
}

TEST(Bounds, VectorConstantAssembly) {
    BoundGrid g;
    g.points = 9;
    for (int j = 0; j <= 3; ++j) EXPECT_NEAR(bound_integral_vector(3, j, g), 2 * pi * pi, 1e-5);
    EXPECT_NEAR(bound_integral_vector(4, 0, g), 2 * pi * pi, 1e-5);
    EXPECT_THROW(bound_integral_vector(2, 0, g), DomainError);
    EXPECT_THROW(bound_integral_vector(3, 4, g), DomainError);
}

TEST(Bounds, BadExponents) {
    EXPECT_THROW(double_singular_sup(0.7, 0.25), DomainError);
    EXPECT_THROW(energy_sup_factor(0.5, 0.0), DomainError);
}

TEST(ConstantChain, BellNumbers) {
    auto ch = constant_chain(std::vector<double>(8, 1.0));
    for (int n = 1; n <= 8; ++n) EXPECT_DOUBLE_EQ(ch.b_at(n), double(bell_number(n)));
    EXPECT_DOUBLE_EQ(ch.b_at(3), 5.0);
}

TEST(ConstantChain, PrintedConstruction) {
    // a = (1, 1, ...) gives b = Bell; c from explicit b
    auto ch = constant_chain({0.0, 2.0, 0.0, 0.0});
    EXPECT_DOUBLE_EQ(ch.b_at(1), 0.0);
    EXPECT_DOUBLE_EQ(ch.b_at(2), 2.0);
    EXPECT_DOUBLE_EQ(ch.b_at(4), 12.0);  // three pairings
    EXPECT_DOUBLE_EQ(ch.c_at(1), 2.0);
    EXPECT_DOUBLE_EQ(ch.c_at(2), 12.0);
}

TEST(ConstantChain, SubmultiplicativeAndMonotone) {
    std::vector<double> a{0.3, 1.7, 0.2, 5.0, 0.01, 2.5, 0.9, 1.1, 0.4, 3.0};
    auto ch = constant_chain(a);
    const int len = int(a.size());
    for (int m = 1; 2 * m <= len; ++m)
        for (int n = 1; 2 * n <= len && m + n <= len; ++n)
            EXPECT_LE(ch.b_at(m + n), ch.c_at(m) * ch.c_at(n) * (1 + 1e-12));
    for (std::size_t i = 0; i < ch.c.size(); ++i) {
        EXPECT_GE(ch.c[i], 1.0);
        if (i > 0) EXPECT_GE(ch.c[i], ch.c[i - 1]);
    }
}

TEST(ConstantChain, Errors) {
    EXPECT_THROW(constant_chain(std::vector<double>(13, 1.0)), SizeLimitError);
    EXPECT_THROW(constant_chain({1.0, -1.0}), DomainError);
}

namespace {

ComplexMatrix diag(std::vector<double> v) {
    ComplexMatrix m = ComplexMatrix::Zero(int(v.size()), int(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) m(i, i) = v[i];
    return m;
}

ScalarModel gaussian_model(int d) { return {{d, 0.5, 1.0}, {0.0, 1.0, {}}}; }

TestFunction slot(double e, double k, double w) { return TestFunction::gaussian({e, k}, w); }

std::vector<BorchersMonomial> small_family() {
    return {{{slot(1.5, 0.2, 0.7)}, 1.0, "a"},
            {{slot(-1.2, 0.5, 0.8)}, 1.0, "b"},
            {{slot(1.5, 0.2, 0.7), slot(-1.2, -0.3, 0.9)}, 1.0, "ab"},
            {{slot(0.5, 0.1, 1.0), slot(1.1, 0.4, 0.6)}, 1.0, "cd"}};
}

}  // namespace

TEST(Majorization, Examples) {
    auto eye = ComplexMatrix::Identity(3, 3);
    auto r = majorization_check(make_gram_pair(eye, eye));
    EXPECT_NEAR(r.ratio, 1.0, 1e-14);
    EXPECT_TRUE(r.pass);
    r = majorization_check(make_gram_pair(diag({1, -1}), ComplexMatrix::Identity(2, 2)));
    EXPECT_NEAR(r.ratio, 1.0, 1e-14);
    EXPECT_TRUE(r.pass);
    ComplexMatrix P = diag({2.0, 0.5});
    r = majorization_check(make_gram_pair(2 * P, P));
    EXPECT_NEAR(r.ratio, 2.0, 1e-14);
    EXPECT_FALSE(r.pass);
}

TEST(Majorization, Errors) {
    EXPECT_THROW(majorization_check(make_gram_pair(diag({1, 1}), diag({1, 0}))), InvalidMajorant);
    EXPECT_THROW(majorization_check(make_gram_pair(diag({1, 1}), diag({1, -1}))), InvalidMajorant);
    ComplexMatrix W = diag({1, 1});
    W(0, 1) = 0.5;
    EXPECT_THROW(make_gram_pair(W, diag({1, 1})), HermiticityViolation);
    EXPECT_THROW(make_gram_pair(diag({1, 1}), diag({1, 1, 1})), ShapeError);
}

TEST(Krein, IdentityPair) {
    auto eye = ComplexMatrix::Identity(4, 4);
    auto k = krein_reduce(make_gram_pair(eye, eye));
    EXPECT_EQ(k.degenerate_dim, 0);
    EXPECT_LE((k.T - ComplexMatrix::Identity(4, 4)).norm(), 1e-12);
}

TEST(Krein, DegenerateSplit) {
    auto k = krein_reduce(make_gram_pair(diag({1, -1, 0}), ComplexMatrix::Identity(3, 3)));
    EXPECT_EQ(k.degenerate_dim, 1);
    ASSERT_EQ(k.T.rows(), 2);
    std::vector<double> ev{k.T(0, 0).real(), k.T(1, 1).real()};
    std::sort(ev.begin(), ev.end());
    EXPECT_NEAR(ev[0], -1, 1e-12);
    EXPECT_NEAR(ev[1], 1, 1e-12);
    EXPECT_NEAR(std::abs(k.T(0, 1)), 0, 1e-12);
    EXPECT_LE(k.reconstruction_error, 1e-12);
}

TEST(Krein, RandomPairs) {
    for (int t = 0; t < 10; ++t) {
        auto g = random_majorized_pair(3 + t, t % 3, 100 + t);
        auto k = krein_reduce(g);
        EXPECT_EQ(k.degenerate_dim, t % 3);
        EXPECT_LE(k.involution_error, 1e-10);
        EXPECT_LE(k.reconstruction_error, 1e-9);
        EXPECT_NEAR(k.remajorization_ratio, 1.0, 1e-9);
        EXPECT_LE(k.spectral_norm_ratio, 1 + 1e-10);
    }
}

TEST(Krein, RequiresMajorization) {
    ComplexMatrix P = diag({1, 1});
    EXPECT_THROW(krein_reduce(make_gram_pair(3 * P, P)), PreconditionError);
}

TEST(Gram, VacuumOnly) {
    auto g = build_gram_pair(gaussian_model(2), {{{}, 1.0, "1"}}, [](const BorchersMonomial&) { return 1.0; });
    EXPECT_EQ(g.dim(), 1);
    EXPECT_NEAR(std::abs(g.W(0, 0) - 1.0), 0, 1e-15);
    EXPECT_NEAR(std::abs(g.P(0, 0) - 1.0), 0, 1e-15);
}

TEST(Gram, FreeOneParticlePositive) {
    std::vector<BorchersMonomial> basis;
    for (int i = 0; i < 5; ++i) basis.push_back({{slot(0.8 * i - 1.5, 0.3 * i - 0.4, 0.9)}, 1.0, ""});
    auto g = build_gram_pair(gaussian_model(2), basis, [](const BorchersMonomial&) { return 1.0; });
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(g.W);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-9 * std::max(1.0, es.eigenvalues().maxCoeff()));
    EXPECT_GT(es.eigenvalues().maxCoeff(), 0);
}

TEST(Gram, SeminormMajorantCoversFamily) {
    const int d = 2;
    auto p = [&](const BorchersMonomial& b) {
        if (b.slots.empty()) return 1.0;
        return schwartz_norm(b.slots, {0, 2 * d}).upper;
    };
    auto g = build_gram_pair(gaussian_model(d), small_family(), p);
    EXPECT_TRUE(majorization_check(g).pass);
}

TEST(Gram, AtomModelIndefinite) {
    ScalarModel m{{1, 0.5, 1.0}, {0.0, 0.0, {{2.0, 1.0}}}};
    HyperplaneQuadrature q;
    q.rel_tolerance = 1e-5;
    q.max_level = 6;
    NegativeSearchSpec spec;
    spec.trials = 10;
    auto r = search_negative_direction(m, spec, q);
    EXPECT_TRUE(r.found);
    EXPECT_LT(r.min_eigenvalue, -r.threshold);
    EXPECT_EQ(r.direction.size(), r.labels.size());

    ScalarModel free{{1, 0.5, 1.0}, {0.0, 2.0, {}}};
    auto none = search_negative_direction(free, spec, q);
    EXPECT_FALSE(none.found);
}

TEST(Certify, GaussianFastPath) {
    auto c = hssc_certify(gaussian_model(2), 4, small_family());
    EXPECT_TRUE(c.fast_path);
    EXPECT_TRUE(c.pass);
    EXPECT_TRUE(c.witnesses.empty());
    EXPECT_EQ(c.table.at(3), 0.0);
    EXPECT_GT(c.table.at(2), 0.0);
    EXPECT_EQ(c.singles.size(), 2u);
    EXPECT_EQ(c.pairs.size(), 16u);
}

TEST(Certify, ScalingHomogeneity) {
    auto fam = small_family();
    auto c1 = hssc_certify(gaussian_model(2), 4, fam);
    for (auto& f : fam) f.slots[0] = f.slots[0].scaled(10.0);
    auto c2 = hssc_certify(gaussian_model(2), 4, fam);
    ASSERT_EQ(c1.singles.size(), c2.singles.size());
    for (std::size_t i = 0; i < c1.singles.size(); ++i) {
        EXPECT_NEAR(std::abs(c2.singles[i].value), 10 * std::abs(c1.singles[i].value), 1e-10 * std::abs(c2.singles[i].value) + 1e-300);
        EXPECT_NEAR(c2.singles[i].ratio, c1.singles[i].ratio, 1e-10 * c1.singles[i].ratio);
    }
    for (std::size_t i = 0; i < c1.pairs.size(); ++i)
        EXPECT_NEAR(c2.pairs[i].ratio, c1.pairs[i].ratio, 1e-10 * c1.pairs[i].ratio);
}

TEST(Certify, BadInput) {
    EXPECT_THROW(hssc_certify(gaussian_model(2), 1, small_family()), DomainError);
    std::vector<BorchersMonomial> wrong{{{TestFunction::gaussian({0.0, 0.0, 0.0}, 1.0)}, 1.0, "x"}};
    EXPECT_THROW(hssc_certify(gaussian_model(2), 4, wrong), ShapeError);
}
