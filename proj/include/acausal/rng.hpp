// Copyright 2026 The acausal Authors
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

#pragma once

#include <cstdint>

namespace acausal {

/// SplitMix64 (Steele, Lea, Flood 2014), reproduced exactly so that seeded
/// runs agree across implementations:
///
///     state += 0x9e3779b97f4a7c15
///     z = state
///     z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
///     z = (z ^ (z >> 27)) * 0x94d049bb133111eb
///     return z ^ (z >> 31)
///
/// uniform() takes the top 53 bits of next() scaled by 2^-53, giving a double
/// in [0, 1).
class SplitMix64 {
   public:
    using result_type = std::uint64_t;

    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {
    }

    constexpr std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    constexpr double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// The finalizer applied to the incremented state.
    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // UniformRandomBitGenerator
    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return ~result_type{0};
    }
    constexpr result_type operator()() {
        return next();
    }

   private:
    std::uint64_t state_;
};

/// Seed for sub-stream `stream` of `seed`: mix(seed + (stream + 1) * 0x9e3779b97f4a7c15).
/// Per-trial seeds are derive_seed(run_seed, trial_index), which makes every
/// trial independent of how trials are split across workers.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64::mix(seed + (stream + 1) * 0x9e3779b97f4a7c15ULL);
}

}  // namespace acausal
