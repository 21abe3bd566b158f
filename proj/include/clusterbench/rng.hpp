// Copyright 2026 The clusterbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace clusterbench {

using Rng = std::mt19937_64;

// Hand-rolled draws instead of std distributions: the standard leaves
// their algorithms implementation-defined, and seeded runs must replay
// bit-identically.

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Independent child stream: mixes the master seed with a stream index.
inline Rng derive_stream(std::uint64_t master_seed, std::uint64_t stream) {
    std::uint64_t s = master_seed ^ (0xa0761d6478bd642full * (stream + 1));
    return Rng(splitmix64(s));
}

inline int draw_bit(Rng& rng) { return static_cast<int>(rng() >> 63); }

/// Uniform double in [0,1) with 53 bits of precision.
inline double draw_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [0, bound) by rejection.
inline std::uint64_t draw_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

}  // namespace clusterbench
