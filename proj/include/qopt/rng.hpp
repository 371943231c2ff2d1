// Copyright 2026 The qopt-bench Authors
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

#ifndef QOPT_RNG_HPP
#define QOPT_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qopt {

// Deterministic randomness utilities. Everything in this project that draws
// random numbers goes through these helpers so results are bit-identical
// across platforms and runs. std::mt19937_64 output is pinned by the C++
// standard; the std::* distributions are not, so we never use them.

// splitmix64 finalizer. Good avalanche, cheap, stable.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent stream seed from a base seed and a path of labels,
// e.g. derive_seed(master, {tag, size, restart, iteration}).
inline uint64_t derive_seed(uint64_t base, std::initializer_list<uint64_t> path) {
    uint64_t h = mix64(base ^ 0x6a09e667f3bcc909ULL);
    for (uint64_t p : path) {
        h = mix64(h ^ mix64(p + 0x9e3779b97f4a7c15ULL));
    }
    return h;
}

// Short string tags hashed into the seed path ("inst", "smp", ...).
inline uint64_t tag(const char *s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (; *s; ++s) {
        h = (h ^ (uint8_t)*s) * 0x100000001b3ULL;
    }
    return h;
}

using Rng = std::mt19937_64;

inline Rng make_rng(uint64_t seed) {
    return Rng(seed);
}

// Uniform double in [0, 1) with 53 random bits. Portable, unlike
// std::uniform_real_distribution.
inline double uniform01(Rng &rng) {
    return (double)(rng() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, n) by rejection. Portable, unlike
// std::uniform_int_distribution.
inline uint64_t uniform_below(Rng &rng, uint64_t n) {
    uint64_t threshold = (0 - n) % n;
    for (;;) {
        uint64_t x = rng();
        if (x >= threshold) {
            return x % n;
        }
    }
}

}  // namespace qopt

#endif
