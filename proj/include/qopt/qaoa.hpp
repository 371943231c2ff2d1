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

#ifndef QOPT_QAOA_HPP
#define QOPT_QAOA_HPP

#include <cstdint>
#include <vector>

#include "qopt/graph.hpp"
#include "qopt/hamiltonian.hpp"
#include "qopt/sampleset.hpp"
#include "qopt/statevector.hpp"

namespace qopt {

// Alternating-operator ansatz angles. Round r applies the cost phase with
// gammas[r], then the transverse mixer with betas[r].
struct AnsatzParams {
    std::vector<double> betas;
    std::vector<double> gammas;

    int rounds() const { return (int)betas.size(); }
    std::vector<double> flat() const;
    static AnsatzParams from_flat(const std::vector<double> &x);
};

struct NoiseModel {
    double p1 = 0.0;  // depolarizing probability after each one-qubit gate
    double p2 = 0.0;  // after each two-qubit gate

    bool enabled() const { return p1 > 0.0 || p2 > 0.0; }
};

struct CircuitResources {
    int width = 0;
    long long two_qubit_gates = 0;
    long long one_qubit_gates = 0;
    int algorithmic_depth = 0;
};

struct HellingerFidelity {
    double raw = 0.0;
    double normalized = 0.0;
};

// Applies the full ansatz to the uniform superposition. Cost phase:
// amps[s] *= exp(i * gamma * cut(s)), i.e. exp(-i gamma H) with
// H = -cut. Mixer: exp(-i beta X) on every qubit.
Statevector evolve_ansatz(const DiagonalCostTable &costs, const AnsatzParams &params);
Statevector evolve_ansatz(const GraphInstance &g, const AnsatzParams &params,
                          int qubit_limit = 20);

// Ideal measurement of the evolved state.
SampleSet sample(const Statevector &sv, uint64_t shots, uint64_t seed);

// Monte-Carlo trajectory sampling under a depolarizing noise model: the
// circuit is replayed once per shot; after each gate, with the per-gate
// probability, a uniformly random non-identity Pauli is applied to the
// qubits the gate touched; one measurement is drawn per trajectory.
// With p1 = p2 = 0 the sampled distribution matches the ideal one.
SampleSet noisy_sample(const GraphInstance &g, const AnsatzParams &params,
                       uint64_t shots, const NoiseModel &noise, uint64_t seed,
                       int qubit_limit = 20);

// Squared Bhattacharyya overlap between the empirical distribution and an
// ideal one, plus the rescaled variant that maps "no better than uniform"
// to 0 and "matches ideal" to 1.
HellingerFidelity hellinger_fidelities(const SampleSet &measured,
                                       const std::vector<double> &ideal_probs);

// Gate counts and algorithmic depth of the ansatz circuit: one layer of
// state preparation, then per round the cost phases (scheduled greedily so
// disjoint edges share a layer) plus one mixer layer.
CircuitResources circuit_resources(const GraphInstance &g, int rounds);

}  // namespace qopt

#endif
