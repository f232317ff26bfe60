// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>
#include <set>

#include "wightlab/partitions.hpp"

using namespace wightlab;

namespace {

// Brute force over enumerated partitions of a subset.
CorrelationTable moments_by_enumeration(const CorrelationTable& t, Statistics stats) {
    CorrelationTable w(t.order());
    for (SubsetMask j = 1; j <= t.full_mask(); ++j) {
        auto elems = elements_of(j);
        std::complex<double> acc = 0.0;
        for (const auto& p : enumerate_partitions(int(elems.size()))) {
            std::complex<double> term = 1.0;
            SetPartition mapped;
            for (const auto& b : p.blocks) {
                std::vector<int> mb;
                for (int i : b) mb.push_back(elems[i]);
                term *= t.at(mb);
                mapped.blocks.push_back(mb);
            }
            if (stats == Statistics::Fermi) term *= double(fermionic_parity(mapped));
            acc += term;
        }
        w[j] = acc;
    }
    return w;
}

CorrelationTable random_table(int n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    CorrelationTable t(n);
    for (SubsetMask s = 1; s <= t.full_mask(); ++s) t[s] = {g(rng), g(rng)};
    return t;
}

}  // namespace

TEST(Partitions, CountsMatchBellNumbers) {
    const std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (int n = 0; n <= 8; ++n) {
        EXPECT_EQ(enumerate_partitions(n).size(), bell[n]) << n;
        EXPECT_EQ(bell_number(n), bell[n]);
    }
}

TEST(Partitions, EnumerationIsDistinctAndCanonical) {
    auto parts = enumerate_partitions(5);
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& p : parts) {
        for (std::size_t b = 1; b < p.blocks.size(); ++b)
            EXPECT_LT(p.blocks[b - 1].front(), p.blocks[b].front());
        EXPECT_TRUE(seen.insert(p.blocks).second);
    }
}

TEST(Partitions, ParityOfConcatenation) {
    EXPECT_EQ(fermionic_parity({{{0, 1}, {2, 3}}}), 1);
    EXPECT_EQ(fermionic_parity({{{0, 2}, {1, 3}}}), -1);
    EXPECT_EQ(fermionic_parity({{{0, 3}, {1, 2}}}), 1);
    EXPECT_EQ(fermionic_parity({{{0}, {1}, {2}}}), 1);
}

TEST(Partitions, SizeCapIsEnforced) {
    EXPECT_THROW(enumerate_partitions(13), SizeLimitError);
    EXPECT_THROW(CorrelationTable(13), SizeLimitError);
    EXPECT_NO_THROW(CorrelationTable(12));
}

TEST(Partitions, SingletonIsIdentity) {
    CorrelationTable t(1);
    t[1] = {0.3, -0.7};
    EXPECT_EQ(moments_from_cumulants(t)[1], t[1]);
    EXPECT_EQ(cumulants_from_moments(t)[1], t[1]);
}

TEST(Partitions, PairingTableBoseAndFermi) {
    // only pair cumulants, each equal to one
    CorrelationTable t(4);
    for (SubsetMask s = 1; s <= t.full_mask(); ++s)
        if (std::popcount(s) == 2) t[s] = 1.0;
    EXPECT_NEAR(moments_from_cumulants(t, Statistics::Bose)[0xF].real(), 3.0, 1e-15);
    EXPECT_NEAR(moments_from_cumulants(t, Statistics::Fermi)[0xF].real(), 1.0, 1e-15);
}

TEST(Partitions, PoissonMomentsHaveConstantCumulants) {
    // raw moments of a Poisson(lambda) variable at every subset size
    const double lambda = 0.8;
    const double m[] = {1.0, lambda, lambda + lambda * lambda,
                        lambda + 3 * lambda * lambda + lambda * lambda * lambda,
                        lambda + 7 * lambda * lambda + 6 * std::pow(lambda, 3) +
                            std::pow(lambda, 4)};
    CorrelationTable w(4);
    for (SubsetMask s = 1; s <= w.full_mask(); ++s) w[s] = m[std::popcount(s)];
    auto t = cumulants_from_moments(w);
    for (SubsetMask s = 1; s <= t.full_mask(); ++s) EXPECT_NEAR(t[s].real(), lambda, 1e-12);
}

TEST(Partitions, RecursionMatchesEnumeration) {
    for (auto stats : {Statistics::Bose, Statistics::Fermi}) {
        auto t = random_table(7, 11);
        auto fast = moments_from_cumulants(t, stats);
        auto slow = moments_by_enumeration(t, stats);
        for (SubsetMask s = 1; s <= t.full_mask(); ++s)
            EXPECT_LT(std::abs(fast[s] - slow[s]), 1e-11 * (1 + std::abs(slow[s])));
    }
}

TEST(Partitions, RoundTripIsIdentity) {
    for (int n = 1; n <= 10; ++n) {
        const double tol = n <= 6 ? 1e-12 : 1e-9;
        for (auto stats : {Statistics::Bose, Statistics::Fermi}) {
            auto t = random_table(n, 100 + n);
            auto back = cumulants_from_moments(moments_from_cumulants(t, stats), stats);
            auto w = random_table(n, 200 + n);
            auto forth = moments_from_cumulants(cumulants_from_moments(w, stats), stats);
            double worst = 0;
            for (SubsetMask s = 1; s <= t.full_mask(); ++s) {
                worst = std::max(worst, std::abs(back[s] - t[s]) / (1 + std::abs(t[s])));
                worst = std::max(worst, std::abs(forth[s] - w[s]) / (1 + std::abs(w[s])));
            }
            EXPECT_LT(worst, tol) << n;
        }
    }
}

TEST(Partitions, TupleIndexingRejectsUnordered) {
    CorrelationTable t(3);
    std::vector<int> bad{2, 1};
    EXPECT_THROW(t.at(bad), DomainError);
}
