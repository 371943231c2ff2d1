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

#include "qopt/hamiltonian.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

#include "qopt/bits.hpp"

namespace qopt {

int cut_size(const GraphInstance &g, const std::string &partition) {
    if ((int)partition.size() != g.num_nodes) {
        throw std::invalid_argument("cut_size: partition length does not match node count");
    }
    int cut = 0;
    for (auto &[a, b] : g.edges) {
        cut += bit_of(partition, a) != bit_of(partition, b);
    }
    return cut;
}

int DiagonalCostTable::max_value() const {
    int best = 0;
    for (uint16_t c : cut_sizes) {
        best = std::max(best, (int)c);
    }
    return best;
}

DiagonalCostTable diagonal_cost_table(const GraphInstance &g, int qubit_limit) {
    if (g.num_nodes > qubit_limit) {
        throw std::invalid_argument(
            "diagonal_cost_table: instance exceeds the table limit of " +
            std::to_string(qubit_limit) + " qubits");
    }
    DiagonalCostTable t;
    t.num_qubits = g.num_nodes;
    const uint64_t dim = t.dimension();
    t.cut_sizes.resize(dim);
    std::vector<uint64_t> masks;
    masks.reserve(g.edges.size());
    for (auto &[a, b] : g.edges) {
        masks.push_back((1ULL << a) | (1ULL << b));
    }
#pragma omp parallel for schedule(static)
    for (int64_t s = 0; s < (int64_t)dim; ++s) {
        int cut = 0;
        for (uint64_t m : masks) {
            cut += std::popcount((uint64_t)s & m) & 1;
        }
        t.cut_sizes[s] = (uint16_t)cut;
    }
    return t;
}

IsingEncoding ising_encoding(const GraphInstance &g) {
    IsingEncoding enc;
    enc.num_nodes = g.num_nodes;
    enc.fields.assign(g.num_nodes, 0.0);
    enc.couplings.reserve(g.edges.size());
    for (auto &e : g.edges) {
        enc.couplings.push_back({e, 1.0});
    }
    return enc;
}

double ising_energy(const IsingEncoding &enc, const std::string &partition) {
    if ((int)partition.size() != enc.num_nodes) {
        throw std::invalid_argument("ising_energy: partition length does not match node count");
    }
    double e = 0.0;
    for (size_t k = 0; k < enc.fields.size(); ++k) {
        double z = bit_of(partition, (int)k) == '0' ? 1.0 : -1.0;
        e += enc.fields[k] * z;
    }
    for (auto &[pair, j] : enc.couplings) {
        double za = bit_of(partition, pair.first) == '0' ? 1.0 : -1.0;
        double zb = bit_of(partition, pair.second) == '0' ? 1.0 : -1.0;
        e += j * za * zb;
    }
    return e;
}

void write_coupling_csv(const IsingEncoding &enc, const std::filesystem::path &file) {
    std::ofstream out(file);
    if (!out) {
        throw std::runtime_error("write_coupling_csv: cannot open " + file.string());
    }
    out << "i,j,J\n";
    for (auto &[pair, j] : enc.couplings) {
        out << pair.first << "," << pair.second << "," << j << "\n";
    }
}

}  // namespace qopt
