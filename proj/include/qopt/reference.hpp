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

#ifndef QOPT_REFERENCE_HPP
#define QOPT_REFERENCE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "qopt/graph.hpp"
#include "qopt/hamiltonian.hpp"
#include "qopt/qaoa.hpp"
#include "qopt/statevector.hpp"

namespace qopt::ref {

// Serial reference implementations of the parallel kernels, plus dense
// brute-force oracles built along independent routes. Tests compare the
// production kernels against these; bench/kernel_bench.cpp measures the
// speedup of the parallel versions.

// Cut size computed from an adjacency matrix instead of edge masks.
int cut_size_adjacency(const GraphInstance &g, uint64_t index);

// Exhaustive maximum-cut search, serial, adjacency-matrix route, scanning
// all 2^n assignments instead of the half space.
MaxCutResult max_cut_serial(const GraphInstance &g);

// Serial twin of diagonal_cost_table.
DiagonalCostTable cost_table_serial(const GraphInstance &g, int qubit_limit = 20);

// Serial twin of evolve_ansatz.
Statevector evolve_ansatz_serial(const DiagonalCostTable &costs,
                                 const AnsatzParams &params);

// Ansatz evolution by explicit dense matrix-vector products: the cost phase
// as a dense diagonal from the adjacency route, the mixer as the full
// 2^n x 2^n tensor-product matrix. Only sensible for small n.
std::vector<cdouble> evolve_ansatz_dense(const GraphInstance &g,
                                         const AnsatzParams &params);

// Time-dependent Schroedinger integration with dense RK4 over
// H(s) = A(s) * (-sum_k X_k) + B(s) * sum_{(i,j) in E} Z_i Z_j,
// s = t / duration, duration = anneal_time_us * time_scale.
std::vector<cdouble> anneal_dense_rk4(const GraphInstance &g,
                                      const std::function<double(double)> &A,
                                      const std::function<double(double)> &B,
                                      double anneal_time_us, double time_scale,
                                      double dt);

}  // namespace qopt::ref

#endif
