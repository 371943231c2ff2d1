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

#ifndef QOPT_BITS_HPP
#define QOPT_BITS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qopt {

// Bit-string convention used everywhere: node k maps to bit k of the basis
// state index (node 0 is the least significant bit). Rendered strings are
// written most significant bit first, so node 0 is the last character.

inline std::string index_to_bits(uint64_t idx, int num_bits) {
    std::string s(num_bits, '0');
    for (int k = 0; k < num_bits; ++k) {
        if ((idx >> k) & 1ULL) {
            s[num_bits - 1 - k] = '1';
        }
    }
    return s;
}

inline uint64_t bits_to_index(const std::string &bits) {
    if (bits.size() > 63) {
        throw std::invalid_argument("bits_to_index: string longer than 63 bits");
    }
    uint64_t idx = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bits_to_index: character is not 0 or 1");
        }
        idx = (idx << 1) | (uint64_t)(c - '0');
    }
    return idx;
}

inline char bit_of(const std::string &bits, int node) {
    return bits[bits.size() - 1 - (size_t)node];
}

}  // namespace qopt

#endif
