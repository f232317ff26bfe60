// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/white_noise.hpp"

#include <cmath>
#include <random>

#include "wightlab/random.hpp"

namespace wightlab {

ScalarField sample_white_noise(const Lattice& lat, const LevyTriple& triple, std::uint64_t seed,
                               std::uint64_t replicate) {
    lat.validate();
    triple.validate();
    const double v = lat.cell_volume();
    const double mean = effective_drift(triple) * v;
    const double sd = std::sqrt(triple.sigma2 * v);
    PhiloxEngine eng(seed, replicate);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::poisson_distribution<long>> counts;
    for (const auto& a : triple.atoms) counts.emplace_back(a.rate * v);

    ScalarField f(lat);
    for (auto& site : f.values) {
        double y = mean;
        if (sd > 0) y += sd * gauss(eng);
        for (std::size_t j = 0; j < counts.size(); ++j)
            y += triple.atoms[j].jump * double(counts[j](eng));
        site = y / v;
    }
    return f;
}

QuaternionField sample_quaternion_noise(const Lattice& lat, const QuaternionLevyData& data,
                                        std::uint64_t seed, std::uint64_t replicate) {
    lat.validate();
    data.validate();
    const double v = lat.cell_volume();
    // compensator of atoms inside the unit ball
    double drift = data.beta;
    for (const auto& a : data.atoms)
        if (std::abs(a.jump) < 1) drift -= a.rate * a.jump;
    PhiloxEngine eng(seed, replicate);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::poisson_distribution<long>> counts;
    for (const auto& a : data.atoms) counts.emplace_back(a.rate * v);
    const double sd0 = std::sqrt(data.sigma0 * v), sd = std::sqrt(data.sigma * v);

    QuaternionField f(lat);
    for (auto& site : f.values) {
        double y0 = drift * v + sd0 * gauss(eng);
        for (std::size_t j = 0; j < counts.size(); ++j)
            y0 += data.atoms[j].jump * double(counts[j](eng));
        site = Quaternion{y0, sd * gauss(eng), sd * gauss(eng), sd * gauss(eng)} * (1.0 / v);
    }
    return f;
}

}  // namespace wightlab
