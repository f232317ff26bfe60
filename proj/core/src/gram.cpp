// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/gram.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wightlab/errors.hpp"
#include "wightlab/parallel.hpp"
#include "wightlab/random.hpp"
#include "wightlab/wightman_checks.hpp"

namespace wightlab {

namespace {

using Eigen::SelfAdjointEigenSolver;
using Eigen::VectorXd;

double max_abs(const ComplexMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

struct PosRoot {
    ComplexMatrix half, inv_half;
};

PosRoot positive_root(const ComplexMatrix& P) {
    SelfAdjointEigenSolver<ComplexMatrix> es(P);
    if (es.info() != Eigen::Success) throw InvalidMajorant("eigendecomposition of P failed");
    const VectorXd& ev = es.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    if (ev.minCoeff() <= 1e-14 * scale) throw InvalidMajorant("P is not positive definite");
    const ComplexMatrix& V = es.eigenvectors();
    PosRoot r;
    r.half = V * ev.cwiseSqrt().asDiagonal() * V.adjoint();
    r.inv_half = V * ev.cwiseSqrt().cwiseInverse().asDiagonal() * V.adjoint();
    return r;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

MomentumTestFunction BorchersMonomial::momentum() const {
    if (slots.empty()) throw DomainError("the vacuum has no momentum representation");
    std::vector<MomentumFactor> f;
    for (const auto& s : slots) f.push_back(MomentumFactor::from(s));
    return MomentumTestFunction::product(std::move(f), coef);
}

GramPair make_gram_pair(ComplexMatrix W, ComplexMatrix P, std::vector<std::string> labels, double guard) {
    if (W.rows() != W.cols() || P.rows() != P.cols() || W.rows() != P.rows())
        throw ShapeError("W and P must be square and of equal size");
    if (!labels.empty() && int(labels.size()) != W.rows()) throw ShapeError("one label per basis element");
    GramPair g;
    const double scale = std::max(max_abs(W), 1e-300);
    g.asymmetry = max_abs(W - W.adjoint()) / scale;
    if (g.asymmetry > guard) throw HermiticityViolation("W is not hermitian", g.asymmetry);
    const double pscale = std::max(max_abs(P), 1e-300);
    if (max_abs(P - P.adjoint()) / pscale > guard) throw InvalidMajorant("P is not hermitian");
    g.W = hermitian_part(W);
    g.P = hermitian_part(P);
    g.labels = std::move(labels);
    return g;
}

GramPair build_gram_pair(const ScalarModel& model, const std::vector<BorchersMonomial>& basis,
                         const Seminorm& seminorm, const HyperplaneQuadrature& quad) {
    model.validate();
    if (basis.empty()) throw ShapeError("empty basis");
    if (!seminorm) throw ConfigError("a seminorm is required");
    const int m = int(basis.size());
    std::vector<MomentumTestFunction> mom(m), star(m);
    for (int i = 0; i < m; ++i)
        if (basis[i].degree() > 0) {
            mom[i] = basis[i].momentum();
            star[i] = mom[i].star();
        }
    std::vector<std::pair<int, int>> entries;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) entries.push_back({i, j});
    ComplexMatrix W(m, m);
    parallel_for(entries.size(), quad.threads, [&](std::size_t e) {
        auto [i, j] = entries[e];
        HyperplaneQuadrature q = quad;
        q.threads = 1;
        std::complex<double> v;
        if (basis[i].degree() == 0 && basis[j].degree() == 0)
            v = std::conj(basis[i].coef) * basis[j].coef;
        else if (basis[i].degree() == 0)
            v = std::conj(basis[i].coef) * w_full_scalar(mom[j], model, q);
        else if (basis[j].degree() == 0)
            v = w_full_scalar(star[i], model, q) * basis[j].coef;
        else
            v = w_full_scalar(star[i].tensor(mom[j]), model, q);
        W(i, j) = v;
    });
    ComplexMatrix P = ComplexMatrix::Zero(m, m);
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) {
        const double p = seminorm(basis[i]);
        P(i, i) = double(m) * p * p;
        labels.push_back(basis[i].label.empty() ? "F" + std::to_string(i) : basis[i].label);
    }
    const double guard = std::max(1e-8, 10 * quad.rel_tolerance);
    return make_gram_pair(std::move(W), std::move(P), std::move(labels), guard);
}

Majorization majorization_check(const GramPair& g) {
    const auto root = positive_root(g.P);
    ComplexMatrix T = hermitian_part(root.inv_half * g.W * root.inv_half);
    SelfAdjointEigenSolver<ComplexMatrix> es(T, Eigen::EigenvaluesOnly);
    Majorization out;
    out.ratio = es.eigenvalues().cwiseAbs().maxCoeff();
    out.pass = out.ratio <= 1 + 1e-10;
    return out;
}

KreinResult krein_reduce(const GramPair& g, double kernel_tol) {
    const auto maj = majorization_check(g);
    if (!maj.pass) throw PreconditionError("W is not majorized by P");
    const auto root = positive_root(g.P);
    KreinResult out;
    out.metric = hermitian_part(root.inv_half * g.W * root.inv_half);
    out.spectral_norm_ratio = maj.ratio;
    SelfAdjointEigenSolver<ComplexMatrix> es(out.metric);
    const VectorXd& ev = es.eigenvalues();
    const double thresh = kernel_tol * std::max(1.0, ev.cwiseAbs().maxCoeff());
    std::vector<int> keep;
    for (int i = 0; i < ev.size(); ++i)
        if (std::abs(ev[i]) > thresh) keep.push_back(i);
    const int r = int(keep.size());
    out.degenerate_dim = int(ev.size()) - r;

    ComplexMatrix Q(g.dim(), r);
    VectorXd lam(r);
    for (int c = 0; c < r; ++c) {
        Q.col(c) = es.eigenvectors().col(keep[c]);
        lam[c] = ev[keep[c]];
    }
    // sign of the metric operator on the complement, expressed in its eigenbasis
    ComplexMatrix sign_full = Q * lam.cwiseSign().asDiagonal() * Q.adjoint();
    out.T = Q.adjoint() * sign_full * Q;
    out.involution_error = r ? (out.T * out.T - ComplexMatrix::Identity(r, r)).norm() : 0.0;

    const ComplexMatrix S = root.half * Q * lam.cwiseAbs().cwiseSqrt().asDiagonal();
    const ComplexMatrix rebuilt = S * out.T * S.adjoint();
    out.reconstruction_error = max_abs(g.W - rebuilt) / std::max(max_abs(g.W), 1e-300);

    if (r > 0) {
        // P_K = P^{1/2} |T| P^{1/2} and W restricted to the complement coordinates x = P^{-1/2} Q y
        const ComplexMatrix abs_full = Q * lam.cwiseAbs().asDiagonal() * Q.adjoint();
        const ComplexMatrix PK = root.half * abs_full * root.half;
        const ComplexMatrix B = root.inv_half * Q;
        GramPair reduced;
        reduced.W = hermitian_part(B.adjoint() * g.W * B);
        reduced.P = hermitian_part(B.adjoint() * PK * B);
        out.remajorization_ratio = majorization_check(reduced).ratio;
    }
    return out;
}

GramPair random_majorized_pair(int dim, int kernel_dim, std::uint64_t seed) {
    if (dim < 1 || kernel_dim < 0 || kernel_dim > dim) throw DomainError("bad dimensions for a random pair");
    PhiloxEngine eng(seed, 0x6772616d);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    auto gaussian_matrix = [&] {
        ComplexMatrix A(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) A(i, j) = {normal(eng), normal(eng)};
        return A;
    };
    ComplexMatrix A = gaussian_matrix();
    ComplexMatrix P = A * A.adjoint() + 0.5 * ComplexMatrix::Identity(dim, dim);
    Eigen::HouseholderQR<ComplexMatrix> qr(gaussian_matrix());
    ComplexMatrix U = qr.householderQ();
    VectorXd t(dim);
    for (int i = 0; i < dim; ++i) t[i] = i < kernel_dim ? 0.0 : unif(eng);
    if (kernel_dim < dim) t[kernel_dim] = 1.0;  // saturate the bound once
    const auto root = positive_root(P);
    ComplexMatrix W = root.half * U * t.asDiagonal() * U.adjoint() * root.half;
    return make_gram_pair(hermitian_part(W), P, {}, 1e-8);
}

NegativeSearch search_negative_direction(const ScalarModel& model, const NegativeSearchSpec& spec,
                                         const HyperplaneQuadrature& quad) {
    model.validate();
    if (spec.trials < 1 || spec.max_degree < 1 || spec.per_degree < 1)
        throw ConfigError("search needs positive trials, degree and monomials per degree");
    const int d = model.dim();
    PhiloxEngine eng(spec.seed, 0x6e656761);
    std::uniform_real_distribution<double> centre(-spec.center_spread, spec.center_spread);
    std::uniform_real_distribution<double> width(spec.min_width, spec.max_width);
    NegativeSearch out;
    const int m = 1 + spec.max_degree * spec.per_degree;
    // eigenvalues move by at most m times the largest entry error
    out.threshold = std::max(1e-12, m * quad.rel_tolerance);
    auto random_slot = [&] {
        std::vector<double> c(d);
        for (auto& x : c) x = centre(eng);
        return TestFunction::gaussian(c, width(eng));
    };
    for (int trial = 0; trial < spec.trials; ++trial) {
        std::vector<BorchersMonomial> basis{{{}, 1.0, "1"}};
        for (int k = 1; k <= spec.max_degree; ++k)
            for (int r = 0; r < spec.per_degree; ++r) {
                BorchersMonomial b;
                for (int s = 0; s < k; ++s) b.slots.push_back(random_slot());
                b.label = "deg" + std::to_string(k) + "_" + std::to_string(r);
                basis.push_back(std::move(b));
            }
        auto g = build_gram_pair(model, basis, [](const BorchersMonomial&) { return 1.0; }, quad);
        SelfAdjointEigenSolver<ComplexMatrix> es(g.W);
        const double rel = es.eigenvalues()[0] / std::max(max_abs(g.W), 1e-300);
        ++out.trials;
        if (trial == 0 || rel < out.min_eigenvalue) {
            out.min_eigenvalue = rel;
            out.labels = g.labels;
            const auto v = es.eigenvectors().col(0);
            out.direction.assign(v.data(), v.data() + v.size());
        }
    }
    out.found = out.min_eigenvalue < -out.threshold;
    return out;
}

}  // namespace wightlab
