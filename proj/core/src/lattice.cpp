// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/lattice.hpp"

#include <cmath>
#include <string>

namespace wightlab {

void Lattice::validate(std::size_t site_cap) const {
    if (dim < 1) throw ConfigError("lattice dimension must be positive");
    if (sites_per_axis < 1) throw ConfigError("lattice sites_per_axis must be positive");
    if (!(spacing > 0)) throw ConfigError("lattice spacing must be positive");
    double total = std::pow(double(sites_per_axis), dim);
    if (total > double(site_cap))
        throw SizeLimitError("lattice has " + std::to_string(total) + " sites, cap is " +
                             std::to_string(site_cap));
}

std::size_t Lattice::site_count() const {
    std::size_t n = 1;
    for (int i = 0; i < dim; ++i) n *= std::size_t(sites_per_axis);
    return n;
}

double Lattice::cell_volume() const { return std::pow(spacing, dim); }

std::vector<int> Lattice::multi_index(std::size_t site) const {
    std::vector<int> m(dim);
    for (int a = dim - 1; a >= 0; --a) {
        m[a] = int(site % sites_per_axis);
        site /= sites_per_axis;
    }
    return m;
}

std::size_t Lattice::site_index(const std::vector<int>& m) const {
    std::size_t s = 0;
    for (int a = 0; a < dim; ++a) {
        int v = ((m[a] % sites_per_axis) + sites_per_axis) % sites_per_axis;
        s = s * sites_per_axis + std::size_t(v);
    }
    return s;
}

std::vector<int> Lattice::site_of(const std::vector<double>& x) const {
    if (int(x.size()) != dim) throw ShapeError("point dimension does not match lattice");
    std::vector<int> m(dim);
    for (int a = 0; a < dim; ++a) {
        double u = x[a] / spacing + sites_per_axis / 2;
        double r = std::round(u);
        if (std::abs(u - r) > 1e-9) throw DomainError("point is not a lattice site");
        if (r < 0 || r >= sites_per_axis) throw DomainError("point lies outside the lattice");
        m[a] = int(r);
    }
    return m;
}

ScalarField sample_on_lattice(const TestFunction& phi, const Lattice& lat) {
    if (phi.dim() != lat.dim) throw ShapeError("test function dimension does not match lattice");
    ScalarField f(lat);
    std::vector<double> x(lat.dim);
    for (std::size_t s = 0; s < f.values.size(); ++s) {
        auto m = lat.multi_index(s);
        for (int a = 0; a < lat.dim; ++a) x[a] = lat.coordinate(m[a]);
        auto v = phi(x);
        if (std::abs(v.imag()) > 1e-12 * (1 + std::abs(v.real())))
            throw DomainError("lattice sampling needs a real test function");
        f.values[s] = v.real();
    }
    return f;
}

}  // namespace wightlab
