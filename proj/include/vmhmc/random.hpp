/*
   Copyright 2026 The vmhmc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace vmhmc {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11). The 64-bit
/// seed is the key; the stream position is a 128-bit block counter, so a
/// stream is a pure function of (seed, position). Satisfies
/// UniformRandomBitGenerator with 64-bit output.
class Philox4x32 {
public:
    using result_type = std::uint64_t;

    explicit Philox4x32(std::uint64_t seed = 0) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}
    {
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept
    {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept
    {
        if (cursor_ == 2) {
            refill();
            cursor_ = 0;
        }
        const auto lo = static_cast<std::uint64_t>(block_[2 * cursor_]);
        const auto hi = static_cast<std::uint64_t>(block_[2 * cursor_ + 1]);
        ++cursor_;
        return lo | (hi << 32);
    }

    /// Skips n 64-bit outputs.
    void discard(std::uint64_t n) noexcept
    {
        while (n > 0 && cursor_ < 2) {
            ++cursor_;
            --n;
        }
        if (n == 0)
            return;
        advance_counter(n / 2);
        refill();
        cursor_ = static_cast<int>(n % 2);
    }

    std::uint64_t seed() const noexcept
    {
        return static_cast<std::uint64_t>(key_[0]) | (static_cast<std::uint64_t>(key_[1]) << 32);
    }

    /// One raw Philox block for the given counter and key.
    static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                              std::array<std::uint32_t, 2> key) noexcept
    {
        constexpr std::uint32_t kM0 = 0xD2511F53u;
        constexpr std::uint32_t kM1 = 0xCD9E8D57u;
        constexpr std::uint32_t kW0 = 0x9E3779B9u;
        constexpr std::uint32_t kW1 = 0xBB67AE85u;
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
            key[0] += kW0;
            key[1] += kW1;
        }
        return ctr;
    }

private:
    void refill() noexcept
    {
        block_ = block(counter_, key_);
        advance_counter(1);
    }

    void advance_counter(std::uint64_t n) noexcept
    {
        std::uint64_t low = static_cast<std::uint64_t>(counter_[0]) |
                            (static_cast<std::uint64_t>(counter_[1]) << 32);
        const std::uint64_t next = low + n;
        if (next < low) {
            if (++counter_[2] == 0)
                ++counter_[3];
        }
        counter_[0] = static_cast<std::uint32_t>(next);
        counter_[1] = static_cast<std::uint32_t>(next >> 32);
    }

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> counter_{0, 0, 0, 0};
    std::array<std::uint32_t, 4> block_{0, 0, 0, 0};
    int cursor_ = 2;
};

using RandomStream = Philox4x32;

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic per-cell seed for grid position (i, j) under a master seed.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t i,
                                    std::uint64_t j = 0) noexcept
{
    return mix64(mix64(mix64(master) ^ (i + 1)) ^ ((j + 1) * 0xD6E8FEB86659FD93ull));
}

/// Uniform double strictly inside (0, 1), 53-bit resolution.
inline double uniform_open01(RandomStream& rng) noexcept
{
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

} // namespace vmhmc
