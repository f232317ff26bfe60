// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "wightlab/errors.hpp"

namespace wightlab {

/// Bit i set means element i (0-based) belongs to the subset.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxPartitionOrder = 12;

enum class Statistics { Bose, Fermi };

/// A set partition of {0, ..., n-1}. Blocks are increasing and ordered by
/// their smallest element.
struct SetPartition {
    std::vector<std::vector<int>> blocks;
};

std::vector<SetPartition> enumerate_partitions(int n);

std::uint64_t bell_number(int n);

/// Sign of the permutation that concatenates the blocks of a partition.
int fermionic_parity(const SetPartition& partition);

/// Sign picked up when a block B is moved in front of the rest R of a set,
/// i.e. (-1)^{#{(b, r) : b in B, r in R, b > r}}.
inline int cross_sign(SubsetMask block, SubsetMask rest) {
    int inversions = 0;
    for (SubsetMask b = block; b != 0; b &= b - 1) {
        int idx = std::countr_zero(b);
        inversions += std::popcount(rest & ((SubsetMask{1} << idx) - 1));
    }
    return (inversions & 1) ? -1 : 1;
}

SubsetMask mask_of(std::span<const int> ordered_tuple);
std::vector<int> elements_of(SubsetMask mask);

/// Values indexed by every nonempty subset of {0, ..., n-1}, each subset
/// read as the increasing tuple of its elements.
template <class T>
class BasicCorrelationTable {
  public:
    BasicCorrelationTable() = default;
    explicit BasicCorrelationTable(int n, T fill = T{}) : n_(n) {
        if (n < 0) throw DomainError("correlation table order must be nonnegative");
        if (n > kMaxPartitionOrder)
            throw SizeLimitError("correlation table order " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(kMaxPartitionOrder));
        values_.assign(std::size_t{1} << n, fill);
    }

    int order() const { return n_; }
    SubsetMask full_mask() const { return (SubsetMask{1} << n_) - 1; }

    T& operator[](SubsetMask s) { return values_[s]; }
    const T& operator[](SubsetMask s) const { return values_[s]; }

    T& at(std::span<const int> tuple) { return values_.at(mask_of(tuple)); }
    const T& at(std::span<const int> tuple) const { return values_.at(mask_of(tuple)); }

  private:
    int n_ = 0;
    std::vector<T> values_;
};

using CorrelationTable = BasicCorrelationTable<std::complex<double>>;

/// Full moments from truncated ones; W(J) = sum over partitions of J of
/// sign * prod T(block).
CorrelationTable moments_from_cumulants(const CorrelationTable& truncated,
                                        Statistics stats = Statistics::Bose);

/// Inverse of moments_from_cumulants.
CorrelationTable cumulants_from_moments(const CorrelationTable& full,
                                        Statistics stats = Statistics::Bose);

}  // namespace wightlab
