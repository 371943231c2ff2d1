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

#include "qopt/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "qopt/bits.hpp"
#include "qopt/rng.hpp"

namespace qopt {

namespace {

bool is_connected(int n, const std::vector<std::pair<int, int>> &edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto &[a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

// One pairing-model attempt: shuffle 3n stubs, pair them off, reject if the
// pairing is not a simple graph.
bool try_pairing(int n, Rng &rng, std::vector<std::pair<int, int>> &out) {
    std::vector<int> stubs;
    stubs.reserve(3 * (size_t)n);
    for (int v = 0; v < n; ++v) {
        for (int k = 0; k < 3; ++k) {
            stubs.push_back(v);
        }
    }
    for (size_t i = stubs.size() - 1; i > 0; --i) {
        size_t j = (size_t)uniform_below(rng, i + 1);
        std::swap(stubs[i], stubs[j]);
    }
    std::set<std::pair<int, int>> seen;
    out.clear();
    for (size_t i = 0; i < stubs.size(); i += 2) {
        int a = stubs[i];
        int b = stubs[i + 1];
        if (a == b) {
            return false;
        }
        auto e = std::minmax(a, b);
        if (!seen.insert({e.first, e.second}).second) {
            return false;
        }
        out.push_back({e.first, e.second});
    }
    return true;
}

int cut_size_by_edges(const std::vector<std::pair<int, int>> &edges, const std::string &bits) {
    int cut = 0;
    for (auto &[a, b] : edges) {
        cut += bit_of(bits, a) != bit_of(bits, b);
    }
    return cut;
}

}  // namespace

GraphInstance generate_3_regular(int num_nodes, uint64_t seed) {
    if (num_nodes < 4 || num_nodes % 2 != 0) {
        throw std::invalid_argument(
            "generate_3_regular: num_nodes must be even and at least 4");
    }
    constexpr int kMaxAttempts = 100000;
    std::vector<std::pair<int, int>> edges;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Rng rng = make_rng(derive_seed(seed, {tag("gen3reg"), (uint64_t)attempt}));
        if (!try_pairing(num_nodes, rng, edges)) {
            continue;
        }
        if (!is_connected(num_nodes, edges)) {
            continue;
        }
        std::sort(edges.begin(), edges.end());
        GraphInstance g;
        g.num_nodes = num_nodes;
        g.edges = std::move(edges);
        g.seed = seed;
        return g;
    }
    throw std::runtime_error("generate_3_regular: no valid pairing found");
}

int cut_size_of_index(const GraphInstance &g, uint64_t s) {
    int cut = 0;
    for (auto &[a, b] : g.edges) {
        cut += (int)(((s >> a) ^ (s >> b)) & 1ULL);
    }
    return cut;
}

MaxCutResult exact_max_cut(GraphInstance &g, int exhaustion_limit) {
    if (g.num_nodes > exhaustion_limit) {
        throw std::invalid_argument(
            "exact_max_cut: instance exceeds the exhaustion limit of " +
            std::to_string(exhaustion_limit) + " nodes");
    }
    if (g.num_nodes < 1) {
        throw std::invalid_argument("exact_max_cut: empty instance");
    }
    std::vector<uint64_t> masks;
    masks.reserve(g.edges.size());
    for (auto &[a, b] : g.edges) {
        masks.push_back((1ULL << a) | (1ULL << b));
    }
    // Complement symmetry: fixing node n-1 to side 0 halves the search.
    const int64_t half = 1LL << (g.num_nodes - 1);
    int best_cut = -1;
    int64_t best_s = 0;
#pragma omp parallel
    {
        int local_best = -1;
        int64_t local_s = 0;
#pragma omp for schedule(static)
        for (int64_t s = 0; s < half; ++s) {
            int cut = 0;
            for (uint64_t m : masks) {
                cut += std::popcount((uint64_t)s & m) & 1;
            }
            if (cut > local_best || (cut == local_best && s < local_s)) {
                local_best = cut;
                local_s = s;
            }
        }
#pragma omp critical
        {
            if (local_best > best_cut ||
                (local_best == best_cut && local_s < best_s)) {
                best_cut = local_best;
                best_s = local_s;
            }
        }
    }
    MaxCutResult r;
    r.cut_size = best_cut;
    r.partition = index_to_bits((uint64_t)best_s, g.num_nodes);
    g.optimal_cut_size = r.cut_size;
    g.optimal_partition = r.partition;
    return r;
}

void store_instance(const GraphInstance &g, const std::filesystem::path &file) {
    nlohmann::json j;
    j["nodes"] = g.num_nodes;
    auto edges = nlohmann::json::array();
    for (auto &[a, b] : g.edges) {
        edges.push_back({a, b});
    }
    j["edges"] = edges;
    j["seed"] = g.seed;
    if (g.optimal_cut_size) {
        j["optimal_cut_size"] = *g.optimal_cut_size;
    }
    if (g.optimal_partition) {
        j["optimal_partition"] = *g.optimal_partition;
    }
    std::ofstream out(file);
    if (!out) {
        throw std::runtime_error("store_instance: cannot open " + file.string());
    }
    out << j.dump(2) << "\n";
}

GraphInstance load_instance(const std::filesystem::path &file) {
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error("load_instance: cannot open " + file.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw std::runtime_error("load_instance: " + file.string() +
                                 " is not valid JSON: " + e.what());
    }
    auto fail = [&](const std::string &field, const std::string &why) {
        throw std::runtime_error("load_instance: " + file.string() + ": field '" +
                                 field + "': " + why);
    };
    GraphInstance g;
    if (!j.contains("nodes") || !j["nodes"].is_number_integer()) {
        fail("nodes", "missing or not an integer");
    }
    g.num_nodes = j["nodes"].get<int>();
    if (g.num_nodes < 1 || g.num_nodes > 320) {
        fail("nodes", "out of the supported range 1..320");
    }
    if (!j.contains("edges") || !j["edges"].is_array()) {
        fail("edges", "missing or not an array");
    }
    std::set<std::pair<int, int>> seen;
    for (auto &e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            fail("edges", "each entry must be a pair of node indices");
        }
        int a = e[0].get<int>();
        int b = e[1].get<int>();
        if (a < 0 || a >= g.num_nodes || b < 0 || b >= g.num_nodes) {
            fail("edges", "node index out of range");
        }
        if (a == b) {
            fail("edges", "self loop at node " + std::to_string(a));
        }
        auto norm = std::minmax(a, b);
        if (!seen.insert({norm.first, norm.second}).second) {
            fail("edges", "duplicate edge (" + std::to_string(norm.first) + "," +
                              std::to_string(norm.second) + ")");
        }
        g.edges.push_back({norm.first, norm.second});
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (!j.contains("seed") || !j["seed"].is_number()) {
        fail("seed", "missing or not a number");
    }
    g.seed = j["seed"].get<uint64_t>();
    if (j.contains("optimal_partition")) {
        if (!j["optimal_partition"].is_string()) {
            fail("optimal_partition", "not a string");
        }
        auto p = j["optimal_partition"].get<std::string>();
        if ((int)p.size() != g.num_nodes) {
            fail("optimal_partition", "length does not match node count");
        }
        for (char c : p) {
            if (c != '0' && c != '1') {
                fail("optimal_partition", "characters must be 0 or 1");
            }
        }
        g.optimal_partition = p;
    }
    if (j.contains("optimal_cut_size")) {
        if (!j["optimal_cut_size"].is_number_integer()) {
            fail("optimal_cut_size", "not an integer");
        }
        g.optimal_cut_size = j["optimal_cut_size"].get<int>();
        if (g.optimal_partition &&
            cut_size_by_edges(g.edges, *g.optimal_partition) != *g.optimal_cut_size) {
            fail("optimal_cut_size", "inconsistent with optimal_partition");
        }
    }
    return g;
}

}  // namespace qopt
