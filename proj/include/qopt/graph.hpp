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

#ifndef QOPT_GRAPH_HPP
#define QOPT_GRAPH_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qopt {

// An undirected, connected, simple graph used as an optimization instance.
// Edges are stored normalized: first < second, list sorted ascending.
struct GraphInstance {
    int num_nodes = 0;
    std::vector<std::pair<int, int>> edges;
    uint64_t seed = 0;
    std::optional<int> optimal_cut_size;
    std::optional<std::string> optimal_partition;

    int num_edges() const { return (int)edges.size(); }
};

// Generates a connected simple 3-regular graph on n nodes (n even, n >= 4)
// with the pairing model. Invalid pairings (self loops, repeated edges) and
// disconnected results are rejected and retried with a sub-seed derived from
// the attempt index, so the result is a pure function of (n, seed).
GraphInstance generate_3_regular(int num_nodes, uint64_t seed);

struct MaxCutResult {
    int cut_size = 0;
    // Partition rendered as a bit string, node 0 = last character. The
    // lexicographically-smallest optimal assignment with node (n-1) fixed
    // to side 0, so the result is unique.
    std::string partition;
};

// Exhaustive maximum-cut search over 2^(n-1) assignments. Throws if
// num_nodes exceeds exhaustion_limit. Annotates g with the result.
MaxCutResult exact_max_cut(GraphInstance &g, int exhaustion_limit = 24);

// Number of edges crossing the partition encoded by basis index s
// (bit k of s = side of node k). Exposed for the report module's exact
// cut-size background law.
int cut_size_of_index(const GraphInstance &g, uint64_t s);

void store_instance(const GraphInstance &g, const std::filesystem::path &file);
GraphInstance load_instance(const std::filesystem::path &file);

}  // namespace qopt

#endif
