// Copyright 2026 The Polarcascade Authors
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

#ifndef POLARCASCADE_PHILOX_H
#define POLARCASCADE_PHILOX_H

#include <array>
#include <cstdint>

namespace polarcascade {

/// Philox4x32-10 counter-based bijection (Salmon et al., SC'11).
///
/// Output is a pure function of (counter, key), so any photon's random
/// numbers can be regenerated without touching any other photon's.
using PhiloxCounter = std::array<uint32_t, 4>;
using PhiloxKey = std::array<uint32_t, 2>;

constexpr PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) {
    constexpr uint32_t kMulA = 0xD2511F53;
    constexpr uint32_t kMulB = 0xCD9E8D57;
    constexpr uint32_t kWeylA = 0x9E3779B9;
    constexpr uint32_t kWeylB = 0xBB67AE85;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kWeylA;
            key[1] += kWeylB;
        }
        uint64_t p0 = uint64_t{kMulA} * ctr[0];
        uint64_t p1 = uint64_t{kMulB} * ctr[2];
        ctr = PhiloxCounter{
            static_cast<uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
            static_cast<uint32_t>(p1),
            static_cast<uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
            static_cast<uint32_t>(p0),
        };
    }
    return ctr;
}

/// Stream of uniform doubles owned by one photon.
///
/// The stream is keyed by the run seed and addressed by (photon index, block
/// index); each Philox block yields two 53-bit uniforms.
class PhotonStream {
   public:
    constexpr PhotonStream(uint64_t seed, uint64_t photon_index)
        : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)}, photon_(photon_index) {
    }

    /// Uniform on [0, 1).
    constexpr double uniform() {
        if (cursor_ == 2) {
            refill();
        }
        uint64_t bits = buffer_[cursor_++];
        return static_cast<double>(bits >> 11) * 0x1.0p-53;
    }

   private:
    constexpr void refill() {
        PhiloxCounter ctr{
            static_cast<uint32_t>(block_),
            static_cast<uint32_t>(block_ >> 32),
            static_cast<uint32_t>(photon_),
            static_cast<uint32_t>(photon_ >> 32),
        };
        PhiloxCounter out = philox4x32_10(ctr, key_);
        buffer_[0] = (uint64_t{out[1]} << 32) | out[0];
        buffer_[1] = (uint64_t{out[3]} << 32) | out[2];
        ++block_;
        cursor_ = 0;
    }

    PhiloxKey key_;
    uint64_t photon_;
    uint64_t block_ = 0;
    std::array<uint64_t, 2> buffer_{};
    int cursor_ = 2;
};

}  // namespace polarcascade

#endif
