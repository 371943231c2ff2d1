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

#ifndef QOPT_SAMPLESET_HPP
#define QOPT_SAMPLESET_HPP

#include <cstdint>
#include <map>
#include <string>

namespace qopt {

// Measurement outcomes as bit string -> count. Keys are strings rather than
// integers because the classical annealing proxy handles instances wider
// than 64 nodes. std::map keeps iteration order deterministic.
struct SampleSet {
    int num_bits = 0;
    std::map<std::string, uint64_t> counts;

    uint64_t total() const {
        uint64_t t = 0;
        for (auto &[_, c] : counts) {
            t += c;
        }
        return t;
    }

    void add(const std::string &bits, uint64_t k = 1) {
        counts[bits] += k;
    }
};

}  // namespace qopt

#endif
