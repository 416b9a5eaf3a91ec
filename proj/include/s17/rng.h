// Copyright 2026 The s17bench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef S17_RNG_H
#define S17_RNG_H

#include <array>
#include <cstdint>
#include <limits>

namespace s17 {

/// Philox4x32-10 block function.
std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

/// Counter-based random stream.
///
/// The key is the 64-bit seed. The 128-bit counter holds (stream, draw index), so stream k of a
/// given seed is the same sequence no matter which thread draws it or in what order streams run.
class PhiloxStream {
   public:
    using result_type = uint32_t;

    PhiloxStream(uint64_t seed, uint64_t stream) : key_{(uint32_t)seed, (uint32_t)(seed >> 32)}, stream_(stream) {
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<uint32_t>::max();
    }

    result_type operator()() {
        if (used_ == 4) {
            refill();
        }
        return block_[used_++];
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        uint64_t hi = (*this)() >> 5;
        uint64_t lo = (*this)() >> 6;
        return (double)(hi * 67108864 + lo) * (1.0 / 9007199254740992.0);
    }

    uint64_t blocks_drawn() const {
        return draw_;
    }

   private:
    void refill() {
        block_ = philox4x32_10({(uint32_t)stream_, (uint32_t)(stream_ >> 32), (uint32_t)draw_, (uint32_t)(draw_ >> 32)}, key_);
        draw_++;
        used_ = 0;
    }

    std::array<uint32_t, 2> key_;
    uint64_t stream_;
    uint64_t draw_ = 0;
    std::array<uint32_t, 4> block_{};
    int used_ = 4;
};

inline std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> ctr, std::array<uint32_t, 2> key) {
    constexpr uint64_t m0 = 0xD2511F53;
    constexpr uint64_t m1 = 0xCD9E8D57;
    for (int round = 0; round < 10; round++) {
        if (round > 0) {
            key[0] += 0x9E3779B9;
            key[1] += 0xBB67AE85;
        }
        uint64_t p0 = m0 * ctr[0];
        uint64_t p1 = m1 * ctr[2];
        ctr = {
            (uint32_t)(p1 >> 32) ^ ctr[1] ^ key[0],
            (uint32_t)p1,
            (uint32_t)(p0 >> 32) ^ ctr[3] ^ key[1],
            (uint32_t)p0,
        };
    }
    return ctr;
}

}  // namespace s17

#endif
