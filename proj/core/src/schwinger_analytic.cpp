// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/schwinger_analytic.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "wightlab/convolution.hpp"
#include "wightlab/errors.hpp"
#include "wightlab/schwinger_mc.hpp"

namespace wightlab {

using std::numbers::pi;

namespace {

std::vector<std::vector<int>> inner_half_sites(const std::vector<std::vector<double>>& points,
                                               const Lattice& lat) {
    std::vector<std::vector<int>> sites;
    const int n = lat.sites_per_axis;
    for (const auto& p : points) {
        auto m = lat.site_of(p);
        for (int v : m)
            if (v < n / 4 || v >= n - n / 4)
                throw DomainError("point lies in the padding margin of the lattice");
        sites.push_back(m);
    }
    return sites;
}

}  // namespace

double g_n_scalar(const std::vector<std::vector<double>>& points, const GreenSpec& spec,
                  const Lattice& lat) {
    spec.validate();
    if (points.empty()) throw DomainError("need at least one point");
    auto sites = inner_half_sites(points, lat);
    const Lattice work = lat.padded();
    auto kernel = green_alpha_lattice(work, spec);
    const int nw = work.sites_per_axis;
    std::vector<int> disp(lat.dim);
    double acc = 0;
    for (std::size_t s = 0; s < work.site_count(); ++s) {
        auto m = work.multi_index(s);
        double prod = 1;
        for (const auto& y : sites) {
            for (int a = 0; a < lat.dim; ++a) disp[a] = (m[a] - y[a] + nw) % nw;
            prod *= kernel.values[work.site_index(disp)];
        }
        acc += prod;
    }
    return acc * work.cell_volume();
}

double g_n_vector(const std::vector<std::vector<double>>& points, const Lattice& lat) {
    const int n = int(points.size());
    if (n < 2) throw DomainError("g_n_vector needs at least two points");
    for (const auto& p : points)
        if (p.size() != 4) throw ShapeError("vector-model points live in R^4");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            double r2 = 0;
            for (int c = 0; c < 4; ++c) r2 += std::pow(points[a][c] - points[b][c], 2);
            if (r2 == 0) throw SingularPointError("coincident points");
        }
    if (n == 2) {
        double r2 = 0;
        for (int c = 0; c < 4; ++c) r2 += std::pow(points[0][c] - points[1][c], 2);
        return -std::log(std::sqrt(r2)) / (8 * pi);
    }
    if (lat.dim != 4) throw ShapeError("g_n_vector needs a 4-dimensional lattice");
    auto sites = inner_half_sites(points, lat);
    const double h = lat.spacing;
    const double origin = harmonic_green_origin_average(h);
    const int N = lat.sites_per_axis;
    double acc = 0;
    for (std::size_t s = 0; s < lat.site_count(); ++s) {
        auto m = lat.multi_index(s);
        double prod = 1;
        for (const auto& y : sites) {
            double r2 = 0;
            for (int c = 0; c < 4; ++c) r2 += double(m[c] - y[c]) * double(m[c] - y[c]);
            prod *= r2 == 0 ? origin : 1.0 / (4 * pi * pi * r2 * h * h);
        }
        acc += prod;
    }
    acc *= std::pow(h, 4);
    // far field: |x|^{-2n} outside the cube of half-width R around the centroid,
    // 8 faces * int_R^inf t^{3-2n} dt * int_{[-1,1]^3} (1+|u|^2)^{-n} du
    const double R = 0.5 * N * h;
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    auto f3 = [&](double u1) {
        auto f2 = [&](double u2) {
            auto f1 = [&](double u3) { return std::pow(1 + u1 * u1 + u2 * u2 + u3 * u3, -n); };
            return GK::integrate(f1, -1.0, 1.0, 10, 1e-10);
        };
        return GK::integrate(f2, -1.0, 1.0, 10, 1e-10);
    };
    double J = GK::integrate(f3, -1.0, 1.0, 10, 1e-10);
    double tail = 8 * J * std::pow(R, 4 - 2 * n) / (2 * n - 4) / std::pow(4 * pi * pi, n);
    return acc + tail;
}

double smeared_kernel_contraction(const std::vector<TestFunction>& phis, const GreenSpec& spec,
                                  const Lattice& lat) {
    spec.validate();
    lat.validate();
    if (phis.empty()) throw DomainError("need at least one test function");
    const Lattice work = lat.padded();
    Convolver conv(work, green_alpha_lattice(work, spec));
    std::vector<double> prod(work.site_count(), 1.0);
    for (const auto& phi : phis) {
        check_resolvable(phi, lat);
        auto h = conv.apply(sample_on_lattice(phi, work));
        for (std::size_t i = 0; i < prod.size(); ++i) prod[i] *= h.values[i];
    }
    double acc = 0;
    for (double v : prod) acc += v;
    return acc * work.cell_volume();
}

double s_t_eval(const std::vector<TestFunction>& phis, const ScalarModel& model, const Lattice& lat) {
    model.validate();
    const int n = int(phis.size());
    double c = model.cumulant(n);
    if (c == 0) return 0.0;
    return c * smeared_kernel_contraction(phis, model.green, lat);
}

}  // namespace wightlab
