// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "wightlab/lattice.hpp"
#include "wightlab/levy.hpp"

namespace wightlab {

/// One realization of the white-noise density on the lattice: each site
/// holds (Gaussian(a_eff v, sigma^2 v) + sum_j s_j Poisson(lambda_j v)) / v.
ScalarField sample_white_noise(const Lattice& lat, const LevyTriple& triple, std::uint64_t seed,
                               std::uint64_t replicate);

/// Quaternionic white noise: the real part carries the scalar Levy law with
/// variance sigma0 and the jumps, imaginary parts are Gaussian with variance sigma.
QuaternionField sample_quaternion_noise(const Lattice& lat, const QuaternionLevyData& data,
                                        std::uint64_t seed, std::uint64_t replicate);

}  // namespace wightlab
