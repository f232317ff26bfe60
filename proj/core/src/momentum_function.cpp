// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/momentum_function.hpp"

#include <algorithm>
#include <cmath>

#include "wightlab/errors.hpp"

namespace wightlab {

MomentumFactor MomentumFactor::from(const TestFunction& f) {
    auto box = f.support_box();
    double s = f.min_width();
    // sup over the energy of |y0^e| exp(-y0^2 / 2w^2) is (e w^2)^{e/2} exp(-e/2)
    std::vector<std::pair<std::vector<int>, double>> terms;
    for (const auto& [e, c] : f.polynomial().terms()) {
        double a = std::abs(c);
        if (e[0] > 0) a *= std::pow(e[0] * f.widths()[0] * f.widths()[0], 0.5 * e[0]) * std::exp(-0.5 * e[0]);
        terms.push_back({e, a});
    }
    auto env = [terms, c = f.center(), w = f.widths()](std::span<const double> kv) {
        double g = 0;
        for (std::size_t i = 0; i < kv.size(); ++i) g += std::pow((kv[i] - c[i + 1]) / w[i + 1], 2);
        double q = 0;
        for (const auto& [e, a] : terms) {
            double m = a;
            for (std::size_t i = 0; i < kv.size(); ++i) m *= std::pow(std::abs(kv[i] - c[i + 1]), e[i + 1]);
            q += m;
        }
        return q * std::exp(-0.5 * g);
    };
    return {[f](std::span<const double> k) { return f(k); }, box, s, env};
}

MomentumFactor MomentumFactor::from(const BumpFunction& b) {
    if (!(b.radius > 0)) throw DomainError("bump radius must be positive");
    return {[b](std::span<const double> k) { return b(k); }, b.support_box(), b.radius / 3, {}};
}

MomentumFactor MomentumFactor::laplace(double time, std::vector<double> position, double cutoff,
                                       double scale) {
    if (!(cutoff > 0)) throw DomainError("laplace cutoff must be positive");
    std::vector<Interval> box(position.size() + 1, Interval{-cutoff, cutoff});
    auto fn = [time, position](std::span<const double> k) {
        double phase = 0;
        for (std::size_t i = 0; i < position.size(); ++i) phase += k[i + 1] * position[i];
        return std::polar(std::exp(-k[0] * time), phase);
    };
    return {fn, box, scale, {}};
}

EnvelopeFn MomentumFactor::reflected_envelope() const {
    if (!envelope) return {};
    return [e = envelope](std::span<const double> kv) {
        std::vector<double> m(kv.begin(), kv.end());
        for (auto& v : m) v = -v;
        return e(m);
    };
}

MomentumFactor MomentumFactor::conjugate_reflected() const {
    std::vector<Interval> b(box.size());
    for (std::size_t i = 0; i < box.size(); ++i) b[i] = {-box[i].hi, -box[i].lo};
    auto g = fn;
    return {[g](std::span<const double> k) {
                double m[8];
                std::vector<double> big;
                double* p = m;
                if (k.size() > 8) {
                    big.resize(k.size());
                    p = big.data();
                }
                for (std::size_t i = 0; i < k.size(); ++i) p[i] = -k[i];
                return std::conj(g(std::span<const double>(p, k.size())));
            },
            b, scale, reflected_envelope()};
}

MomentumFactor MomentumFactor::translated(std::span<const double> a) const {
    if (a.size() != box.size()) throw ShapeError("translation vector has the wrong dimension");
    std::vector<double> shift(a.begin(), a.end());
    auto g = fn;
    double len = 0;
    for (double v : shift) len += v * v;
    len = std::sqrt(len);
    double s = len > 0 ? std::min(scale, 1.0 / len) : scale;
    return {[g, shift](std::span<const double> k) {
                double phase = 0;
                for (std::size_t i = 0; i < shift.size(); ++i) phase -= k[i] * shift[i];
                return g(k) * std::polar(1.0, phase);
            },
            box, s, envelope};
}

MomentumFactor MomentumFactor::phased(std::span<const double> a) const {
    if (a.size() != box.size()) throw ShapeError("phase vector has the wrong dimension");
    std::vector<double> shift(a.begin(), a.end());
    auto g = fn;
    return {[g, shift](std::span<const double> k) {
                double phase = 0;
                for (std::size_t i = 0; i < shift.size(); ++i) phase += k[i] * shift[i];
                return g(k) * std::polar(1.0, phase);
            },
            box, scale, envelope};
}

MomentumFactor MomentumFactor::scaled(std::complex<double> s) const {
    auto g = fn;
    EnvelopeFn env;
    if (envelope) env = [e = envelope, a = std::abs(s)](std::span<const double> kv) { return a * e(kv); };
    return {[g, s](std::span<const double> k) { return s * g(k); }, box, scale, env};
}

MomentumTestFunction::MomentumTestFunction(std::vector<ProductTerm> terms) : terms_(std::move(terms)) {
    for (const auto& t : terms_) {
        if (t.factors.size() != terms_.front().factors.size())
            throw ShapeError("all terms need the same number of factors");
        for (const auto& f : t.factors)
            if (f.dim() != terms_.front().factors.front().dim())
                throw ShapeError("all factors need the same dimension");
    }
}

MomentumTestFunction MomentumTestFunction::product(std::vector<MomentumFactor> factors,
                                                   std::complex<double> coef) {
    return MomentumTestFunction({ProductTerm{coef, std::move(factors)}});
}

MomentumTestFunction MomentumTestFunction::from(const TestFunction& f, int dim) {
    if (dim < 1 || f.dim() % dim != 0) throw ShapeError("test function does not split into factors");
    const int n = f.dim() / dim;
    std::vector<ProductTerm> terms;
    for (const auto& [exps, c] : f.polynomial().terms()) {
        ProductTerm t{c, {}};
        for (int l = 0; l < n; ++l) {
            std::vector<double> center(f.center().begin() + l * dim, f.center().begin() + (l + 1) * dim);
            std::vector<double> widths(f.widths().begin() + l * dim, f.widths().begin() + (l + 1) * dim);
            Polynomial p(dim);
            p.add_term(Polynomial::Exponents(exps.begin() + l * dim, exps.begin() + (l + 1) * dim), 1.0);
            t.factors.push_back(MomentumFactor::from(TestFunction(center, widths, p)));
        }
        terms.push_back(std::move(t));
    }
    return MomentumTestFunction(std::move(terms));
}

int MomentumTestFunction::order() const {
    return terms_.empty() ? 0 : int(terms_.front().factors.size());
}

int MomentumTestFunction::dim() const {
    return terms_.empty() || terms_.front().factors.empty() ? 0 : terms_.front().factors.front().dim();
}

std::complex<double> MomentumTestFunction::operator()(const std::vector<std::vector<double>>& k) const {
    if (int(k.size()) != order()) throw ShapeError("wrong number of momentum arguments");
    std::complex<double> acc = 0;
    for (const auto& t : terms_) {
        std::complex<double> p = t.coef;
        for (std::size_t l = 0; l < k.size(); ++l) p *= t.factors[l](k[l]);
        acc += p;
    }
    return acc;
}

MomentumTestFunction MomentumTestFunction::star() const {
    std::vector<ProductTerm> out;
    for (const auto& t : terms_) {
        ProductTerm s{std::conj(t.coef), {}};
        for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it)
            s.factors.push_back(it->conjugate_reflected());
        out.push_back(std::move(s));
    }
    return MomentumTestFunction(std::move(out));
}

MomentumTestFunction MomentumTestFunction::tensor(const MomentumTestFunction& other) const {
    if (empty()) return other;
    if (other.empty()) return *this;
    std::vector<ProductTerm> out;
    for (const auto& a : terms_)
        for (const auto& b : other.terms_) {
            ProductTerm t{a.coef * b.coef, a.factors};
            t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
            out.push_back(std::move(t));
        }
    return MomentumTestFunction(std::move(out));
}

MomentumTestFunction MomentumTestFunction::translated(std::span<const double> a) const {
    std::vector<ProductTerm> out;
    for (const auto& t : terms_) {
        ProductTerm s{t.coef, {}};
        for (const auto& f : t.factors) s.factors.push_back(f.translated(a));
        out.push_back(std::move(s));
    }
    return MomentumTestFunction(std::move(out));
}

MomentumTestFunction MomentumTestFunction::total_phase(std::span<const double> a) const {
    std::vector<ProductTerm> out;
    for (const auto& t : terms_) {
        ProductTerm s{t.coef, {}};
        for (const auto& f : t.factors) s.factors.push_back(f.phased(a));
        out.push_back(std::move(s));
    }
    return MomentumTestFunction(std::move(out));
}

MomentumTestFunction MomentumTestFunction::scaled(std::complex<double> s) const {
    auto out = terms_;
    for (auto& t : out) t.coef *= s;
    return MomentumTestFunction(std::move(out));
}

MomentumTestFunction MomentumTestFunction::operator+(const MomentumTestFunction& other) const {
    if (empty()) return other;
    if (other.empty()) return *this;
    if (order() != other.order() || dim() != other.dim())
        throw ShapeError("cannot add test functions of different shape");
    auto out = terms_;
    out.insert(out.end(), other.terms_.begin(), other.terms_.end());
    return MomentumTestFunction(std::move(out));
}

}  // namespace wightlab
