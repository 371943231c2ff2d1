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

#include "qopt/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qopt/bits.hpp"
#include "qopt/rng.hpp"

namespace qopt {

Statevector Statevector::zero_state(int num_qubits) {
    Statevector sv;
    sv.num_qubits = num_qubits;
    sv.amps.assign(1ULL << num_qubits, cdouble(0.0, 0.0));
    sv.amps[0] = 1.0;
    return sv;
}

Statevector Statevector::uniform(int num_qubits) {
    Statevector sv;
    sv.num_qubits = num_qubits;
    const uint64_t dim = 1ULL << num_qubits;
    sv.amps.assign(dim, cdouble(1.0 / std::sqrt((double)dim), 0.0));
    return sv;
}

double Statevector::norm() const {
    double n = 0.0;
    for (const cdouble &a : amps) {
        n += std::norm(a);
    }
    return std::sqrt(n);
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> p(amps.size());
#pragma omp parallel for schedule(static)
    for (int64_t s = 0; s < (int64_t)amps.size(); ++s) {
        p[s] = std::norm(amps[s]);
    }
    return p;
}

namespace {

template <typename Int>
void phase_by_value_table(Statevector &sv, const std::vector<Int> &values,
                          double theta) {
    if (values.size() != sv.amps.size()) {
        throw std::invalid_argument("diagonal phase: table size does not match state");
    }
    Int lo = values[0];
    Int hi = values[0];
    for (Int v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    std::vector<cdouble> table((size_t)(hi - lo) + 1);
    for (size_t k = 0; k < table.size(); ++k) {
        double phase = theta * (double)(lo + (Int)k);
        table[k] = cdouble(std::cos(phase), std::sin(phase));
    }
#pragma omp parallel for schedule(static)
    for (int64_t s = 0; s < (int64_t)sv.amps.size(); ++s) {
        sv.amps[s] *= table[(size_t)(values[s] - lo)];
    }
}

}  // namespace

void apply_phase_int_diagonal(Statevector &sv, const std::vector<uint16_t> &values,
                              double theta) {
    phase_by_value_table(sv, values, theta);
}

void apply_phase_int_diagonal(Statevector &sv, const std::vector<int16_t> &values,
                              double theta) {
    phase_by_value_table(sv, values, theta);
}

namespace {

// Visits each (s0, s1 = s0 | 2^qubit) amplitude pair once.
template <typename PairOp>
void for_each_pair(Statevector &sv, int qubit, PairOp op) {
    const uint64_t step = 1ULL << qubit;
    const int64_t pairs = (int64_t)(sv.dimension() >> 1);
#pragma omp parallel for schedule(static)
    for (int64_t g = 0; g < pairs; ++g) {
        uint64_t s0 = (((uint64_t)g >> qubit) << (qubit + 1)) | ((uint64_t)g & (step - 1));
        op(sv.amps[s0], sv.amps[s0 | step]);
    }
}

}  // namespace

void apply_rx(Statevector &sv, int qubit, double beta) {
    const double c = std::cos(beta);
    const cdouble ms(0.0, -std::sin(beta));
    for_each_pair(sv, qubit, [&](cdouble &a, cdouble &b) {
        cdouble a0 = a;
        a = c * a0 + ms * b;
        b = ms * a0 + c * b;
    });
}

void apply_rx_all(Statevector &sv, double beta) {
    for (int q = 0; q < sv.num_qubits; ++q) {
        apply_rx(sv, q, beta);
    }
}

void apply_x(Statevector &sv, int qubit) {
    for_each_pair(sv, qubit, [](cdouble &a, cdouble &b) { std::swap(a, b); });
}

void apply_y(Statevector &sv, int qubit) {
    const cdouble i(0.0, 1.0);
    for_each_pair(sv, qubit, [&](cdouble &a, cdouble &b) {
        cdouble a0 = a;
        a = -i * b;
        b = i * a0;
    });
}

void apply_z(Statevector &sv, int qubit) {
    for_each_pair(sv, qubit, [](cdouble &, cdouble &b) { b = -b; });
}

void apply_h(Statevector &sv, int qubit) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for_each_pair(sv, qubit, [&](cdouble &a, cdouble &b) {
        cdouble a0 = a;
        a = (a0 + b) * inv_sqrt2;
        b = (a0 - b) * inv_sqrt2;
    });
}

SampleSet sample_counts(const Statevector &sv, uint64_t shots, uint64_t seed) {
    const uint64_t dim = sv.dimension();
    std::vector<double> cumulative(dim);
    double acc = 0.0;
    for (uint64_t s = 0; s < dim; ++s) {
        acc += std::norm(sv.amps[s]);
        cumulative[s] = acc;
    }
    const double total = acc;
    Rng rng = make_rng(seed);
    SampleSet out;
    out.num_bits = sv.num_qubits;
    for (uint64_t k = 0; k < shots; ++k) {
        double u = uniform01(rng) * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        uint64_t s = it == cumulative.end() ? dim - 1
                                            : (uint64_t)(it - cumulative.begin());
        out.add(index_to_bits(s, sv.num_qubits));
    }
    return out;
}

}  // namespace qopt
