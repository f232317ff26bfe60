// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "wightlab/partitions.hpp"

#include <string>

namespace wightlab {

namespace {

void check_order(int n) {
    if (n < 0) throw DomainError("partition order must be nonnegative");
    if (n > kMaxPartitionOrder)
        throw SizeLimitError("partition order " + std::to_string(n) + " exceeds cap " +
                             std::to_string(kMaxPartitionOrder));
}

// Loop over proper nonempty sub-blocks B of J containing min(J), paired
// with the remainder J \ B. Rest masks are enumerated as submasks of
// J \ {min}.
template <class F>
void for_each_leading_block(SubsetMask j, F&& f) {
    SubsetMask lead = j & (~j + 1);
    SubsetMask others = j ^ lead;
    for (SubsetMask rest = others;; rest = (rest - 1) & others) {
        f(j ^ rest, rest);
        if (rest == 0) break;
    }
}

int sign_for(Statistics stats, SubsetMask block, SubsetMask rest) {
    return stats == Statistics::Fermi ? cross_sign(block, rest) : 1;
}

}  // namespace

SubsetMask mask_of(std::span<const int> tuple) {
    SubsetMask m = 0;
    int prev = -1;
    for (int i : tuple) {
        if (i <= prev) throw DomainError("tuple must be strictly increasing");
        if (i >= kMaxPartitionOrder) throw SizeLimitError("tuple index exceeds cap");
        m |= SubsetMask{1} << i;
        prev = i;
    }
    return m;
}

std::vector<int> elements_of(SubsetMask mask) {
    std::vector<int> out;
    for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
    return out;
}

std::vector<SetPartition> enumerate_partitions(int n) {
    check_order(n);
    std::vector<SetPartition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1])
    std::vector<int> a(n, 0), run_max(n, 0);
    while (true) {
        SetPartition p;
        int nblocks = run_max[n - 1] + 1;
        p.blocks.resize(nblocks);
        for (int i = 0; i < n; ++i) p.blocks[a[i]].push_back(i);
        out.push_back(std::move(p));

        int i = n - 1;
        while (i > 0 && a[i] == run_max[i - 1] + 1) --i;
        if (i == 0) break;
        ++a[i];
        run_max[i] = std::max(run_max[i - 1], a[i]);
        for (int k = i + 1; k < n; ++k) {
            a[k] = 0;
            run_max[k] = run_max[k - 1];
        }
    }
    return out;
}

std::uint64_t bell_number(int n) {
    check_order(n);
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (auto v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

int fermionic_parity(const SetPartition& partition) {
    std::vector<int> seq;
    for (const auto& b : partition.blocks) seq.insert(seq.end(), b.begin(), b.end());
    int inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t k = i + 1; k < seq.size(); ++k)
            if (seq[i] > seq[k]) ++inversions;
    return (inversions & 1) ? -1 : 1;
}

CorrelationTable moments_from_cumulants(const CorrelationTable& truncated, Statistics stats) {
    const int n = truncated.order();
    CorrelationTable full(n);
    full[0] = 1.0;
    for (SubsetMask j = 1; j <= truncated.full_mask(); ++j) {
        std::complex<double> acc = 0.0;
        for_each_leading_block(j, [&](SubsetMask block, SubsetMask rest) {
            acc += double(sign_for(stats, block, rest)) * truncated[block] * full[rest];
        });
        full[j] = acc;
    }
    return full;
}

CorrelationTable cumulants_from_moments(const CorrelationTable& full, Statistics stats) {
    const int n = full.order();
    CorrelationTable trunc(n);
    CorrelationTable w = full;
    w[0] = 1.0;
    for (SubsetMask j = 1; j <= full.full_mask(); ++j) {
        std::complex<double> acc = w[j];
        for_each_leading_block(j, [&](SubsetMask block, SubsetMask rest) {
            if (rest == 0) return;
            acc -= double(sign_for(stats, block, rest)) * trunc[block] * w[rest];
        });
        trunc[j] = acc;
    }
    return trunc;
}

}  // namespace wightlab
