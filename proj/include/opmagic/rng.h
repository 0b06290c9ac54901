// Copyright 2026 The opmagic Authors
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

#ifndef OPMAGIC_RNG_H
#define OPMAGIC_RNG_H

#include <cstdint>
#include <random>

namespace opmagic {

/// SplitMix64 finalizer.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133CE111ULL;
    return x ^ (x >> 31);
}

/// Seed of the independent stream number `stream` under `master`.
///
/// Every Monte-Carlo sample (or every circuit of an ensemble) owns one stream,
/// so results do not depend on how work is split between threads.
constexpr uint64_t derive_seed(uint64_t master, uint64_t stream) {
    return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x51ED270B27A3C1A5ULL));
}

using Rng = std::mt19937_64;

__extension__ typedef unsigned __int128 uint128_t;

/// Integer in [0, bound) via multiply-shift, identical on every standard library.
inline uint64_t uniform_below(Rng &rng, uint64_t bound) {
    return static_cast<uint64_t>((static_cast<uint128_t>(rng()) * bound) >> 64);
}

/// Double in [0, 1) from the top 53 bits.
inline double uniform_unit(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace opmagic

#endif
