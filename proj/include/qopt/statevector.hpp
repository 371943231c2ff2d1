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

#ifndef QOPT_STATEVECTOR_HPP
#define QOPT_STATEVECTOR_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "qopt/sampleset.hpp"

namespace qopt {

using cdouble = std::complex<double>;

// Dense state vector over n qubits, amps[s] indexed by basis state s with
// qubit k at bit k. The kernels below are OpenMP parallel; serial twins used
// as test references live in qopt::ref (reference.hpp).
struct Statevector {
    int num_qubits = 0;
    std::vector<cdouble> amps;

    static Statevector zero_state(int num_qubits);
    static Statevector uniform(int num_qubits);

    uint64_t dimension() const { return 1ULL << num_qubits; }
    double norm() const;
    std::vector<double> probabilities() const;
};

// amps[s] *= exp(i * theta * values[s]) for an integer-valued diagonal.
// The phase factors are precomputed per distinct value, one table lookup
// per amplitude.
void apply_phase_int_diagonal(Statevector &sv, const std::vector<uint16_t> &values,
                              double theta);
void apply_phase_int_diagonal(Statevector &sv, const std::vector<int16_t> &values,
                              double theta);

// exp(-i * beta * X) on one qubit: [[cos b, -i sin b], [-i sin b, cos b]].
void apply_rx(Statevector &sv, int qubit, double beta);

// exp(-i * beta * X) on every qubit.
void apply_rx_all(Statevector &sv, double beta);

// Pauli gates, used by the noisy trajectory sampler.
void apply_x(Statevector &sv, int qubit);
void apply_y(Statevector &sv, int qubit);
void apply_z(Statevector &sv, int qubit);

// Hadamard on one qubit, the state-preparation layer of the circuits here.
void apply_h(Statevector &sv, int qubit);

// Draws `shots` basis states from |amps|^2 by inverse transform over the
// cumulative distribution. Deterministic in (sv, shots, seed).
SampleSet sample_counts(const Statevector &sv, uint64_t shots, uint64_t seed);

}  // namespace qopt

#endif
