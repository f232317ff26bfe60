// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "wightlab/errors.hpp"
#include "wightlab/wightman_checks.hpp"
#include "wightlab/wightman_scalar.hpp"

using namespace wightlab;
using std::numbers::pi;

TEST(Mu, IndicatorsAndOrigin) {
    MinkowskiPoint inside{0.2, {0.1}}, back{-2.0, {0.5}}, fwd{2.0, {0.5}};
    EXPECT_EQ(mu_eval(inside, Branch::Plus, 0.5, 1.0), 0.0);
    EXPECT_EQ(mu_eval(back, Branch::Plus, 0.5, 1.0), 0.0);
    EXPECT_GT(mu_eval(fwd, Branch::Plus, 0.5, 1.0), 0.0);
    EXPECT_EQ(mu_eval(fwd, Branch::Minus, 0.5, 1.0), 0.0);
    MinkowskiPoint zero{0.0, {0.0}};
    EXPECT_NEAR(mu_eval(zero, Branch::Middle, 0.3, 1.0), 1 / (2 * pi), 1e-15);
    EXPECT_NEAR(mu_eval(fwd, Branch::Middle, 0.5, 1.0), 0.0, 1e-17);
    MinkowskiPoint shell{1.0, {0.0}};
    EXPECT_THROW(mu_eval(shell, Branch::Middle, 0.5, 1.0), SingularPointError);
    EXPECT_THROW(mu_eval(zero, Branch::Middle, 0.7, 1.0), DomainError);
}

namespace {
MomentumTestFunction laplace_pair(double t, double cutoff) {
    return MomentumTestFunction::product({MomentumFactor::laplace(-0.5 * t, {}, cutoff, 0.5),
                                          MomentumFactor::laplace(0.5 * t, {}, cutoff, 0.5)});
}
}  // namespace

TEST(WHat, LaplaceOfTwoPointInOneDimension) {
    // alpha = 1/4: S2 = c2 G_{1/2}, and G_{1/2}(t) = K0(m t) / pi in d = 1
    ScalarModel m{{1, 0.25, 1.0}, {0.0, 1.3, {}}};
    HyperplaneQuadrature q;
    q.rel_tolerance = 1e-6;
    for (double t : {1.0, 2.0}) {
        auto ev = w_hat_trunc_scalar(laplace_pair(t, 40 / t), m, q);
        double s2 = ev.value.real() / (2 * pi);
        double ref = 1.3 * boost::math::cyl_bessel_k(0, t) / pi;
        EXPECT_NEAR(s2 / ref, 1.0, 1e-5) << t;
    }
}

TEST(WHat, FreeCaseInOneDimension) {
    // alpha = 1/2: S2 = c2 G_1 = c2 e^{-m t} / (2m)
    ScalarModel m{{1, 0.5, 1.5}, {0.0, 0.8, {}}};
    double t = 1.2;
    auto ev = w_hat_trunc_scalar(laplace_pair(t, 40 / t), m);
    EXPECT_NEAR(ev.value.real() / (2 * pi) / (0.8 * std::exp(-1.5 * t) / 3.0), 1.0, 1e-12);
}

namespace {
MomentumFactor gauss(double e, double k, double w, double amp = 1.0) {
    return MomentumFactor::from(TestFunction::gaussian({e, k}, w, amp));
}

ScalarModel atom_model(double alpha) { return {{2, alpha, 1.0}, {-0.5, 0.0, {{1.0, 1.0}}}}; }

MomentumTestFunction three_point() {
    return MomentumTestFunction::product(
        {gauss(-2.0, 0.3, 0.4), gauss(0.6, 0.2, 0.4), gauss(1.4, -0.5, 0.4, 0.7)});
}

// smoothstep-mapped midpoint rule; absorbs inverse square-root endpoint singularities
template <class F>
double smooth_midpoint(F&& f, std::vector<double> br, double lo, double hi, int m) {
    br.push_back(lo);
    br.push_back(hi);
    std::sort(br.begin(), br.end());
    double acc = 0;
    for (std::size_t p = 0; p + 1 < br.size(); ++p) {
        double a = std::max(lo, br[p]), b = std::min(hi, br[p + 1]);
        if (!(b > a)) continue;
        for (int i = 0; i < m; ++i) {
            double u = (i + 0.5) / m;
            double x = a + (b - a) * u * u * (3 - 2 * u);
            acc += f(x) * (b - a) * 6 * u * (1 - u) / m;
        }
    }
    return acc;
}
}  // namespace

TEST(WHat, DenseGridOracleThreePoint) {
    auto model = atom_model(0.5);
    auto phi = three_point();
    const auto& fac = phi.terms()[0].factors;
    const double m0 = 1.0;
    auto mu = [&](double e, double w, int br) {
        double g = (e - w) * (e + w);
        double v = std::pow(std::abs(g), -0.5) / (2 * pi);
        if (br == 1) return e > w ? v : 0.0;
        if (br == -1) return e < -w ? v : 0.0;
        return g < 0 ? v : 0.0;
    };
    const int ms = 40, me = 24;
    double total = 0;
    for (int a = 0; a < ms; ++a)
        for (int b = 0; b < ms; ++b) {
            double k1 = 0.3 + 1.6 * ((a + 0.5) / ms - 0.5) * 2;
            double k2 = 0.2 + 1.6 * ((b + 0.5) / ms - 0.5) * 2;
            double k3 = -k1 - k2;
            double w1 = std::hypot(k1, m0), w2 = std::hypot(k2, m0), w3 = std::hypot(k3, m0);
            std::vector<double> s2{-w2, w2, -3.4 + 0.6, 3.4 + 0.6}, s3{-w3, w3, 1.4 - 3.4, 1.4 + 3.4};
            std::vector<double> outer{-w1, w1};
            for (double x : s2)
                for (double y : s3) outer.push_back(-x - y);
            double v = smooth_midpoint(
                [&](double e1) {
                    std::vector<double> inner{-w2, w2, -e1 - w3, -e1 + w3};
                    return smooth_midpoint(
                        [&](double e2) {
                            double e3 = -e1 - e2;
                            double br = mu(e1, w1, 0) * mu(e2, w2, 1) * mu(e3, w3, 1) +
                                        mu(e1, w1, -1) * mu(e2, w2, 0) * mu(e3, w3, 1) +
                                        mu(e1, w1, -1) * mu(e2, w2, -1) * mu(e3, w3, 0);
                            if (br == 0) return 0.0;
                            std::vector<double> p1{e1, k1}, p2{e2, k2}, p3{e3, k3};
                            return br * (fac[0](p1) * fac[1](p2) * fac[2](p3)).real();
                        },
                        inner, 0.6 - 3.4, 0.6 + 3.4, me);
                },
                outer, -2.0 - 3.4, -2.0 + 3.4, me);
            total += v * (3.2 / ms) * (3.2 / ms);
        }
    total *= model.cumulant(3) * 4 * std::pow(2 * pi, 2);
    HyperplaneQuadrature q;
    q.rel_tolerance = 1e-3;
    auto ev = w_hat_trunc_scalar(phi, model, q);
    EXPECT_TRUE(ev.converged);
    EXPECT_GT(std::abs(ev.value), 1e-6);
    EXPECT_NEAR(ev.value.real() / total, 1.0, 0.02) << ev.value << " " << total;
}

namespace {
MomentumTestFunction one_dim_three_point() {
    Polynomial p(1);
    p.add_term({0}, std::complex<double>(1.0, 0.4));
    p.add_term({1}, std::complex<double>(-0.3, 0.2));
    TestFunction a({-2.2}, {0.5}, p);
    return MomentumTestFunction::product({MomentumFactor::from(a),
                                          MomentumFactor::from(TestFunction::gaussian({0.5}, 0.6)),
                                          MomentumFactor::from(TestFunction::gaussian({1.5}, 0.4, 0.5))});
}
}  // namespace

TEST(WHat, VanishesOffSupport) {
    // every slot inside the mass gap with alpha = 1/2: only middle weights survive,
    // and no branch can place all other slots on the shells
    auto model = atom_model(0.5);
    BumpFunction b{{0.0, 0.0}, 0.3};
    auto phi = MomentumTestFunction::product(
        {MomentumFactor::from(b), MomentumFactor::from(b), MomentumFactor::from(b)});
    auto ev = w_hat_trunc_scalar(phi, model);
    EXPECT_EQ(ev.value, std::complex<double>(0.0));
}

TEST(WHat, Hermiticity) {
    ScalarModel m{{1, 0.25, 1.0}, {0.0, 0.0, {{1.0, 1.0}}}};
    auto phi = one_dim_three_point();
    HyperplaneQuadrature q;
    q.rel_tolerance = 1e-7;
    auto a = w_hat_trunc_scalar(phi.star(), m, q);
    auto b = w_hat_trunc_scalar(phi, m, q);
    EXPECT_GT(std::abs(b.value), 1e-4);
    EXPECT_LT(std::abs(a.value - std::conj(b.value)), 1e-6 * std::abs(b.value));
}

TEST(WHat, TotalMomentumPhaseInvariance) {
    ScalarModel m{{1, 0.25, 1.0}, {0.0, 0.0, {{1.0, 1.0}}}};
    auto phi = one_dim_three_point();
    std::vector<double> a{1.7};
    auto ref = w_hat_trunc_scalar(phi, m);
    auto ph = w_hat_trunc_scalar(phi.total_phase(a), m);
    EXPECT_LT(std::abs(ph.value - ref.value), 1e-10 * std::abs(ref.value));
    auto model2 = atom_model(0.5);
    auto phi2 = three_point();
    std::vector<double> a2{0.4, -1.1};
    HyperplaneQuadrature q;
    q.max_level = 1;
    auto x = w_hat_trunc_scalar_level(phi2, model2, q, 0);
    auto y = w_hat_trunc_scalar_level(phi2.total_phase(a2), model2, q, 0);
    EXPECT_LT(std::abs(x - y), 1e-10 * std::abs(x));
}

TEST(WHat, RefinementIsStable) {
    ScalarModel m{{1, 0.4, 1.0}, {0.0, 0.0, {{1.0, 1.0}}}};
    auto phi = one_dim_three_point();
    HyperplaneQuadrature q;
    q.rel_tolerance = 1e-4;
    auto ev = w_hat_trunc_scalar(phi, m, q);
    ASSERT_TRUE(ev.converged);
    int level = int(ev.history.size());
    auto next = w_hat_trunc_scalar_level(phi, m, q, level);
    EXPECT_LE(std::abs(next - ev.value), std::max(ev.error, 1e-4 * std::abs(ev.value)));
}

TEST(WHat, GaussianModelHasNoHigherOrders) {
    ScalarModel m{{1, 0.25, 1.0}, {0.0, 1.0, {}}};
    EXPECT_EQ(w_hat_trunc_scalar(one_dim_three_point(), m).value, std::complex<double>(0.0));
}

TEST(WHat, RejectsBadInput) {
    ScalarModel m{{1, 0.75, 1.0}, {0.0, 1.0, {}}};
    EXPECT_THROW(w_hat_trunc_scalar(one_dim_three_point(), m), DomainError);
    auto model = atom_model(0.5);
    EXPECT_THROW(w_hat_trunc_scalar(one_dim_three_point(), model), ShapeError);
}

TEST(Bridge, TwoPointOneDimension) {
    ScalarModel m{{1, 0.25, 1.0}, {0.0, 1.3, {}}};
    Lattice lat{1, 1024, 0.05};
    std::vector<std::vector<double>> y{{-0.5}, {0.75}};
    auto r = laplace_bridge_check(m, y, lat);
    EXPECT_LT(r.gap, 1e-2);
    std::vector<std::vector<double>> shifted{{0.0}, {1.25}};
    auto s = laplace_bridge_check(m, shifted, lat);
    EXPECT_NEAR(s.lhs, r.lhs, 1e-12 * std::abs(r.lhs));
    EXPECT_NEAR(s.rhs, r.rhs, 1e-12 * std::abs(r.rhs));
    EXPECT_NEAR(s.gap, r.gap, 1e-10);
    std::vector<std::vector<double>> bad{{0.5}, {0.0}};
    EXPECT_THROW(laplace_bridge_check(m, bad, lat), PreconditionError);
}

TEST(Spectral, OffSupportFamilyVanishes) {
    auto model = atom_model(0.5);
    auto bump = [](double e, double k) { return MomentumFactor::from(BumpFunction{{e, k}, 0.5}); };
    std::vector<MomentumTestFunction> off{
        MomentumTestFunction::product({bump(0.0, 3.0), bump(0.2, -1.0), bump(-0.2, -2.0)}),
        MomentumTestFunction::product({bump(3.0, 0.0), bump(-1.0, 0.5), bump(-2.0, -0.5)})};
    auto rep = spectral_support_check(off, model);
    EXPECT_LE(rep.max_abs, rep.tolerance);
    auto control = MomentumTestFunction::product({bump(-2.6, 0.3), bump(1.2, 0.2), bump(1.4, -0.5)});
    auto ev = w_hat_trunc_scalar(control, model);
    EXPECT_GT(std::abs(ev.value), 10 * rep.tolerance);
    std::vector<MomentumTestFunction> bad{control};
    EXPECT_THROW(spectral_support_check(bad, model), PreconditionError);
}

TEST(Cluster, FreeTwoPointDecays) {
    ScalarModel m{{2, 0.5, 1.0}, {0.0, 1.0, {}}};
    auto phi = MomentumTestFunction::product({gauss(-1.5, 0.0, 0.4)});
    auto psi = MomentumTestFunction::product({gauss(1.5, 0.0, 0.4)});
    std::vector<double> a{0.0, 1.0};
    auto rows = cluster_decay(phi, psi, a, {0, 1, 2, 4, 8}, m);
    auto direct = w_hat_trunc_scalar(phi.tensor(psi), m);
    EXPECT_EQ(rows[0].value, direct.value);
    for (std::size_t i = 3; i < rows.size(); ++i)
        EXPECT_LT(std::abs(rows[i].value), std::abs(rows[i - 1].value));
    EXPECT_LT(std::abs(rows.back().value), 0.1 * std::abs(rows[0].value));
    std::vector<double> timelike{1.0, 0.5};
    EXPECT_THROW(cluster_decay(phi, psi, timelike, {0}, m), PreconditionError);
    ScalarModel gaussian{{2, 0.5, 1.0}, {0.0, 1.0, {}}};
    auto chi = MomentumTestFunction::product({gauss(-1.5, 0.0, 0.4), gauss(0.5, 0.0, 0.4)});
    for (const auto& r : cluster_decay(chi, psi, a, {0, 2}, gaussian))
        EXPECT_EQ(r.value, std::complex<double>(0.0));
}

TEST(FullWightman, GaussianPairings) {
    ScalarModel m{{1, 0.5, 1.0}, {0.0, 1.0, {}}};
    auto g1 = [](double c, double w) { return MomentumFactor::from(TestFunction::gaussian({c}, w)); };
    std::vector<MomentumFactor> fs{g1(-1.0, 0.5), g1(0.8, 0.4), g1(-0.9, 0.6), g1(1.2, 0.5)};
    auto w2 = [&](int i, int j) {
        return w_hat_trunc_scalar(MomentumTestFunction::product({fs[i], fs[j]}), m).value;
    };
    auto full = w_full_scalar(MomentumTestFunction::product(fs), m);
    auto expect = w2(0, 1) * w2(2, 3) + w2(0, 2) * w2(1, 3) + w2(0, 3) * w2(1, 2);
    EXPECT_GT(std::abs(expect), 1e-6);
    EXPECT_NEAR(std::abs(full - expect), 0.0, 1e-12 * std::abs(expect));
}
