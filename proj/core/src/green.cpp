// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/green.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "wightlab/errors.hpp"
#include "wightlab/fft.hpp"
#include "wightlab/quadrature.hpp"

namespace wightlab {

using std::numbers::pi;

void GreenSpec::validate() const {
    if (dim < 1) throw ConfigError("green dimension must be positive");
    if (!(alpha > 0) || alpha > 0.5) throw DomainError("alpha must lie in (0, 1/2]");
    if (!(m0 > 0)) throw ConfigError("green mass m0 must be positive");
}

double green_alpha_momentum(std::span<const double> k, const GreenSpec& spec) {
    double k2 = 0;
    for (double v : k) k2 += v * v;
    return std::pow(k2 + spec.m0 * spec.m0, -spec.alpha);
}

ScalarField fractional_kernel_lattice(const Lattice& lat, double exponent, double m0) {
    lat.validate();
    if (!(exponent > 0)) throw DomainError("kernel exponent must be positive");
    const int n = lat.sites_per_axis;
    std::vector<int> dims(lat.dim, n);
    RealFft fft(dims);
    std::vector<std::complex<double>> spec(fft.complex_size());
    const int half = n / 2 + 1;
    const double dk = 2 * pi / lat.extent();
    std::vector<int> m(lat.dim);
    for (std::size_t idx = 0; idx < spec.size(); ++idx) {
        std::size_t rest = idx;
        m[lat.dim - 1] = int(rest % half);
        rest /= half;
        for (int a = lat.dim - 2; a >= 0; --a) {
            m[a] = int(rest % n);
            rest /= n;
        }
        double k2 = 0;
        for (int a = 0; a < lat.dim; ++a) {
            double k = dk * lat.wrapped(m[a]);
            k2 += k * k;
        }
        spec[idx] = std::pow(k2 + m0 * m0, -exponent);
    }
    ScalarField out(lat);
    fft.backward(spec.data(), out.values.data());
    const double norm = 1.0 / std::pow(lat.extent(), lat.dim);
    for (auto& v : out.values) v *= norm;
    // exact reflection symmetry
    ScalarField sym = out;
    std::vector<int> neg(lat.dim);
    for (std::size_t s = 0; s < out.values.size(); ++s) {
        auto mi = lat.multi_index(s);
        for (int a = 0; a < lat.dim; ++a) neg[a] = -mi[a];
        sym.values[s] = 0.5 * (out.values[s] + out.values[lat.site_index(neg)]);
    }
    return sym;
}

ScalarField green_alpha_lattice(const Lattice& lat, const GreenSpec& spec) {
    spec.validate();
    if (lat.dim != spec.dim) throw ShapeError("lattice and green dimensions differ");
    if (spec.m0 * lat.extent() < 4)
        throw ConfigError("lattice extent does not resolve the mass: m0 * extent < 4");
    return fractional_kernel_lattice(lat, spec.alpha, spec.m0);
}

double green_alpha_band_limited(std::span<const double> x, const GreenSpec& spec, double spacing) {
    spec.validate();
    const int d = int(x.size());
    if (d < 1 || d > 2) throw DomainError("band-limited oracle supports d <= 2");
    const double kmax = pi / spacing;
    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    const double m2 = spec.m0 * spec.m0;
    // even integrand: integrate cos over [0, kmax]^d and scale by 2^d
    auto inner = [&](double k0) {
        if (d == 1) return std::cos(k0 * x[0]) * std::pow(k0 * k0 + m2, -spec.alpha);
        auto g = [&](double k1) {
            return std::cos(k0 * x[0]) * std::cos(k1 * x[1]) *
                   std::pow(k0 * k0 + k1 * k1 + m2, -spec.alpha);
        };
        return GK::integrate(g, 0.0, kmax, 20, 1e-11);
    };
    double v = GK::integrate(inner, 0.0, kmax, 20, 1e-11);
    return v * std::pow(2.0, d) / std::pow(2 * pi, d);
}

double harmonic_green(std::span<const double> x) {
    double r2 = 0;
    for (double v : x) r2 += v * v;
    if (r2 == 0) throw SingularPointError("g is singular at the origin");
    return 1.0 / (4 * pi * pi * r2);
}

Quaternion dbar_harmonic_green(std::span<const double> x) {
    double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    if (r2 == 0) throw SingularPointError("dbar g is singular at the origin");
    double s = 1.0 / (2 * pi * pi * r2 * r2);
    return {x[0] * s, x[1] * s, x[2] * s, x[3] * s};
}

double harmonic_green_origin_average(double spacing) {
    // I(s) = int_{[-s,s]^4} |u|^{-2} scales as s^2, so the unit cell integral is
    // 4/3 of the shell between the half-width 1/4 and 1/2 cubes; the shell is
    // 240 subcubes of side 1/4 with smooth integrand.
    static const double cell = [] {
        const auto& gl = gauss_legendre(10);
        double shell = 0;
        for (int c = 0; c < 256; ++c) {
            int idx[4] = {c & 3, (c >> 2) & 3, (c >> 4) & 3, (c >> 6) & 3};
            bool inner = true;
            for (int a = 0; a < 4; ++a) inner &= (idx[a] == 1 || idx[a] == 2);
            if (inner) continue;
            double lo[4];
            for (int a = 0; a < 4; ++a) lo[a] = -0.5 + 0.25 * idx[a];
            const int q = int(gl.nodes.size());
            for (int i0 = 0; i0 < q; ++i0)
                for (int i1 = 0; i1 < q; ++i1)
                    for (int i2 = 0; i2 < q; ++i2)
                        for (int i3 = 0; i3 < q; ++i3) {
                            int ii[4] = {i0, i1, i2, i3};
                            double r2 = 0, w = 1;
                            for (int a = 0; a < 4; ++a) {
                                double u = lo[a] + 0.125 * (1 + gl.nodes[ii[a]]);
                                r2 += u * u;
                                w *= 0.125 * gl.weights[ii[a]];
                            }
                            shell += w / r2;
                        }
        }
        return 4.0 / 3.0 * shell / (4 * pi * pi);
    }();
    return cell / (spacing * spacing);
}

namespace {
void require_4d(const Lattice& lat) {
    lat.validate();
    if (lat.dim != 4) throw ShapeError("harmonic kernels need a 4-dimensional lattice");
}
}  // namespace

ScalarField harmonic_green_lattice(const Lattice& lat) {
    require_4d(lat);
    ScalarField out(lat);
    std::vector<double> x(4);
    for (std::size_t s = 0; s < out.values.size(); ++s) {
        auto m = lat.multi_index(s);
        double r2 = 0;
        for (int a = 0; a < 4; ++a) {
            x[a] = lat.wrapped(m[a]) * lat.spacing;
            r2 += x[a] * x[a];
        }
        out.values[s] = r2 == 0 ? harmonic_green_origin_average(lat.spacing) : harmonic_green(x);
    }
    return out;
}

QuaternionField dbar_g_kernel(const Lattice& lat) {
    require_4d(lat);
    QuaternionField out(lat);
    std::vector<double> x(4);
    for (std::size_t s = 0; s < out.values.size(); ++s) {
        auto m = lat.multi_index(s);
        double r2 = 0;
        for (int a = 0; a < 4; ++a) {
            x[a] = lat.wrapped(m[a]) * lat.spacing;
            r2 += x[a] * x[a];
        }
        out.values[s] = r2 == 0 ? Quaternion{} : dbar_harmonic_green(x);
    }
    return out;
}

Quaternion QuaternionTestFunction::operator()(std::span<const double> x) const {
    return {comp[0](x).real(), comp[1](x).real(), comp[2](x).real(), comp[3](x).real()};
}

namespace {

// sum_mu u_mu * (d_mu f), with u_mu a unit quaternion times sign
QuaternionTestFunction apply_first_order(const QuaternionTestFunction& f, double sign) {
    const Quaternion units[4] = {kQuatOne, kQuatI * sign, kQuatJ * sign, kQuatK * sign};
    const Quaternion basis[4] = {kQuatOne, kQuatI, kQuatJ, kQuatK};
    const auto& ref = f.comp[0];
    std::array<Polynomial, 4> acc;
    acc.fill(Polynomial(4));
    for (int c = 0; c < 4; ++c) {
        if (f.comp[c].center() != ref.center() || f.comp[c].widths() != ref.widths())
            throw ShapeError("quaternion components must share centre and widths");
    }
    for (int mu = 0; mu < 4; ++mu) {
        int alpha[4] = {0, 0, 0, 0};
        alpha[mu] = 1;
        for (int c = 0; c < 4; ++c) {
            Quaternion prod = units[mu] * basis[c];
            auto deriv = f.comp[c].derivative(alpha).polynomial();
            for (int out = 0; out < 4; ++out)
                if (prod[out] != 0) acc[out] = acc[out] + deriv.scaled(prod[out]);
        }
    }
    QuaternionTestFunction g;
    for (int c = 0; c < 4; ++c) g.comp[c] = TestFunction(ref.center(), ref.widths(), acc[c]);
    return g;
}

}  // namespace

QuaternionTestFunction apply_d(const QuaternionTestFunction& f) { return apply_first_order(f, -1); }
QuaternionTestFunction apply_dbar(const QuaternionTestFunction& f) { return apply_first_order(f, 1); }

}  // namespace wightlab
