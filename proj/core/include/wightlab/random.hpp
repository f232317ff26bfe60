// Copyright 2026 wightlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace wightlab {

/// Philox4x32-10 counter-based generator. The key is derived from
/// (seed, stream) so every replicate owns an independent, reproducible stream.
class PhiloxEngine {
  public:
    using result_type = std::uint32_t;

    PhiloxEngine(std::uint64_t seed, std::uint64_t stream) {
        key_ = {std::uint32_t(seed), std::uint32_t(seed >> 32)};
        counter_ = {0, 0, std::uint32_t(stream), std::uint32_t(stream >> 32)};
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        if (pos_ == 4) {
            block_ = generate(counter_, key_);
            if (++counter_[0] == 0) ++counter_[1];
            pos_ = 0;
        }
        return block_[pos_++];
    }

    /// Raw block for a given counter; exposed for known-answer tests.
    static std::array<std::uint32_t, 4> generate(std::array<std::uint32_t, 4> ctr,
                                                 std::array<std::uint32_t, 2> key) {
        constexpr std::uint32_t m0 = 0xD2511F53, m1 = 0xCD9E8D57;
        constexpr std::uint32_t w0 = 0x9E3779B9, w1 = 0xBB67AE85;
        for (int r = 0; r < 10; ++r) {
            std::uint64_t p0 = std::uint64_t(m0) * ctr[0];
            std::uint64_t p1 = std::uint64_t(m1) * ctr[2];
            ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1),
                   std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], std::uint32_t(p0)};
            key[0] += w0;
            key[1] += w1;
        }
        return ctr;
    }

  private:
    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> counter_;
    std::array<std::uint32_t, 4> block_{};
    int pos_ = 4;
};

}  // namespace wightlab
