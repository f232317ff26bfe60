// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "wightlab/errors.hpp"
#include "wightlab/quaternion.hpp"
#include "wightlab/test_function.hpp"

namespace wightlab {

inline constexpr std::size_t kDefaultSiteCap = std::size_t{1} << 25;

/// Hypercubic periodic lattice. Sites are stored row-major with the last
/// axis fastest. Field coordinates are centred: x = (m - N/2) * spacing.
/// Kernels use wrapped order instead: site m holds displacement
/// (m < N/2 ? m : m - N) * spacing.
struct Lattice {
    int dim = 1;
    int sites_per_axis = 1;
    double spacing = 1;

    void validate(std::size_t site_cap = kDefaultSiteCap) const;

    std::size_t site_count() const;
    double cell_volume() const;
    double extent() const { return sites_per_axis * spacing; }

    /// Same spacing, twice the sites per axis.
    Lattice padded() const { return {dim, 2 * sites_per_axis, spacing}; }

    std::vector<int> multi_index(std::size_t site) const;
    std::size_t site_index(const std::vector<int>& m) const;

    double coordinate(int m) const { return (m - sites_per_axis / 2) * spacing; }
    int wrapped(int m) const { return m < sites_per_axis / 2 ? m : m - sites_per_axis; }

    /// Site whose centred coordinate equals x; throws DomainError if x is not a site.
    std::vector<int> site_of(const std::vector<double>& x) const;

    bool operator==(const Lattice& o) const {
        return dim == o.dim && sites_per_axis == o.sites_per_axis && spacing == o.spacing;
    }
};

template <class T>
struct LatticeField {
    Lattice lattice;
    std::vector<T> values;

    LatticeField() = default;
    explicit LatticeField(const Lattice& lat, T fill = T{})
        : lattice(lat), values(lat.site_count(), fill) {}
};

using ScalarField = LatticeField<double>;
using QuaternionField = LatticeField<Quaternion>;

/// Samples a real test function at the centred site coordinates.
ScalarField sample_on_lattice(const TestFunction& phi, const Lattice& lat);

}  // namespace wightlab
