// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/levy.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>

#include "wightlab/errors.hpp"

namespace wightlab {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

void LevyTriple::validate() const {
    if (!(sigma2 >= 0)) throw ConfigError("levy sigma2 must be nonnegative");
    if (!std::isfinite(drift)) throw ConfigError("levy drift must be finite");
    for (const auto& a : atoms) {
        if (a.jump == 0 || !std::isfinite(a.jump)) throw ConfigError("levy atom jump must be nonzero");
        if (!(a.rate > 0)) throw ConfigError("levy atom rate must be positive");
    }
}

cplx psi(double t, const LevyTriple& triple) {
    cplx acc = kI * triple.drift * t - 0.5 * triple.sigma2 * t * t;
    for (const auto& a : triple.atoms) {
        double st = a.jump * t;
        // e^{ist} - 1 written to keep relative accuracy for small st
        cplx em1{-2.0 * std::sin(0.5 * st) * std::sin(0.5 * st), std::sin(st)};
        acc += a.rate * (em1 - kI * st / (1.0 + a.jump * a.jump));
    }
    return acc;
}

double cumulant_coeff(int n, const LevyTriple& triple) {
    if (n < 1) throw DomainError("cumulant order must be positive");
    double acc = 0;
    if (n == 1) {
        acc = triple.drift;
        for (const auto& a : triple.atoms)
            acc += a.rate * a.jump * a.jump * a.jump / (1.0 + a.jump * a.jump);
        return acc;
    }
    if (n == 2) acc = triple.sigma2;
    for (const auto& a : triple.atoms) acc += a.rate * std::pow(a.jump, n);
    return acc;
}

double effective_drift(const LevyTriple& triple) {
    double a = triple.drift;
    for (const auto& at : triple.atoms) a -= at.rate * at.jump / (1.0 + at.jump * at.jump);
    return a;
}

std::complex<double> characteristic_functional(const TestFunction& phi, const LevyTriple& triple,
                                               const CubatureSpec& spec) {
    triple.validate();
    const int d = phi.dim();
    if (d < 1 || d > 3) throw DomainError("characteristic functional supports 1 <= d <= 3");
    auto box = phi.support_box();
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

    std::vector<double> x(d);
    double outer_error = 0;
    auto integrate_part = [&](bool imag_part) {
        std::function<double(int)> level = [&](int axis) -> double {
            auto f = [&](double v) {
                x[axis] = v;
                if (axis + 1 < d) return level(axis + 1);
                cplx val = phi(x);
                if (std::abs(val.imag()) > 1e-12 * (1 + std::abs(val.real())))
                    throw DomainError("characteristic functional needs a real test function");
                cplx p = psi(val.real(), triple);
                return imag_part ? p.imag() : p.real();
            };
            double err = 0;
            double v = GK::integrate(f, box[axis].lo, box[axis].hi, spec.max_depth,
                                     spec.rel_tolerance, &err);
            if (axis == 0) outer_error = std::max(outer_error, err);
            return v;
        };
        return level(0);
    };
    double re = integrate_part(false);
    double im = integrate_part(true);
    double scale = std::abs(cplx(re, im));
    if (outer_error > std::max(spec.abs_tolerance, 10 * spec.rel_tolerance * scale))
        throw ToleranceFailure("characteristic functional quadrature did not converge", outer_error);
    return std::exp(cplx(re, im));
}

void QuaternionLevyData::validate() const {
    if (!(sigma0 > 0) || !(sigma > 0)) throw ConfigError("quaternion levy sigma0, sigma must be positive");
    for (const auto& a : atoms) {
        if (a.jump == 0) throw ConfigError("quaternion levy atom must be nonzero");
        if (!(a.rate > 0)) throw ConfigError("quaternion levy atom rate must be positive");
    }
}

cplx psi(const Quaternion& x, const QuaternionLevyData& data) {
    double t = x.x0;
    double v2 = x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3;
    cplx acc = kI * data.beta * t - 0.5 * data.sigma0 * t * t - 0.5 * data.sigma * v2;
    for (const auto& a : data.atoms) {
        double ty = t * a.jump;
        double small = std::abs(a.jump) < 1.0 ? 1.0 : 0.0;
        cplx em1{-2.0 * std::sin(0.5 * ty) * std::sin(0.5 * ty), std::sin(ty)};
        acc -= a.rate * (kI * ty * small - em1);
    }
    return acc;
}

double vector_c0(const QuaternionLevyData& data) {
    double c = data.sigma0;
    for (const auto& a : data.atoms) c += a.rate * a.jump * a.jump;
    return c;
}

double vector_c(const QuaternionLevyData& data) { return data.sigma; }

double vector_cnl(int n, int l, const QuaternionLevyData& data) {
    if (n < 3 || l < 0 || l > n) throw DomainError("vector_cnl needs n >= 3 and 0 <= l <= n");
    if (l != 0) return 0.0;
    double m = 0;
    for (const auto& a : data.atoms) m += a.rate * std::pow(a.jump, n);
    return m;  // binom(n, 0) / 1
}

SmallXOrder small_x_order(const QuaternionLevyData& data) {
    const Quaternion dirs[] = {{1, 0, 0, 0}, {0.5, 0.5, 0.5, 0.5}, {0, 1, 0, 0}};
    double worst = 1e300;
    for (const auto& u : dirs) {
        double t1 = 1e-3, t2 = 1e-4;
        double a1 = std::abs(psi(u * t1, data));
        double a2 = std::abs(psi(u * t2, data));
        double p = (a1 > 0 && a2 > 0) ? std::log(a1 / a2) / std::log(t1 / t2) : 1e300;
        worst = std::min(worst, p);
    }
    return {worst, worst > 4.0 / 3.0};
}

}  // namespace wightlab
