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

#ifndef QOPT_HAMILTONIAN_HPP
#define QOPT_HAMILTONIAN_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qopt/graph.hpp"

namespace qopt {

// The cost function being maximized is the cut size. The corresponding
// problem Hamiltonian is diagonal with energy(s) = -cut(s), so lower energy
// means a larger cut and the ground energy is -max_cut.

// Cut size of a partition bit string (node 0 = last character). The string
// length must equal g.num_nodes.
int cut_size(const GraphInstance &g, const std::string &partition);

// Precomputed cut sizes for every basis state of an n-qubit register.
// Memory is 2 bytes per state, so the default limit of 20 qubits costs 2 MiB.
struct DiagonalCostTable {
    int num_qubits = 0;
    std::vector<uint16_t> cut_sizes;

    uint64_t dimension() const { return 1ULL << num_qubits; }
    int max_value() const;
};

DiagonalCostTable diagonal_cost_table(const GraphInstance &g, int qubit_limit = 20);

// Ising form of the same objective: H = sum_{(i,j) in E} J_ij Z_i Z_j with
// J_ij = +1 and no linear fields. Spin z_k = +1 encodes bit 0, z_k = -1
// encodes bit 1. Ground states of H are exactly the maximum cuts, with
// energy(s) = |E| - 2 cut(s).
struct IsingEncoding {
    int num_nodes = 0;
    std::vector<double> fields;                               // h_i, all zero
    std::vector<std::pair<std::pair<int, int>, double>> couplings;  // ((i,j), J_ij)
};

IsingEncoding ising_encoding(const GraphInstance &g);

double ising_energy(const IsingEncoding &enc, const std::string &partition);

// Writes the couplings as CSV rows "i,j,J" with a header line, the exchange
// format used to hand an instance to an annealing backend.
void write_coupling_csv(const IsingEncoding &enc, const std::filesystem::path &file);

}  // namespace qopt

#endif
