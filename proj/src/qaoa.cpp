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

#include "qopt/qaoa.hpp"

#include <cmath>
#include <stdexcept>

#include "qopt/bits.hpp"
#include "qopt/rng.hpp"

namespace qopt {

std::vector<double> AnsatzParams::flat() const {
    std::vector<double> x = betas;
    x.insert(x.end(), gammas.begin(), gammas.end());
    return x;
}

AnsatzParams AnsatzParams::from_flat(const std::vector<double> &x) {
    if (x.size() % 2 != 0 || x.empty()) {
        throw std::invalid_argument("AnsatzParams::from_flat: length must be even and positive");
    }
    AnsatzParams p;
    p.betas.assign(x.begin(), x.begin() + (long)(x.size() / 2));
    p.gammas.assign(x.begin() + (long)(x.size() / 2), x.end());
    return p;
}

namespace {

void validate_params(const AnsatzParams &params) {
    if (params.betas.empty() || params.betas.size() != params.gammas.size()) {
        throw std::invalid_argument("ansatz: betas and gammas must be non-empty, equal length");
    }
    for (double b : params.betas) {
        if (!std::isfinite(b)) {
            throw std::invalid_argument("ansatz: non-finite mixer angle");
        }
    }
    for (double c : params.gammas) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("ansatz: non-finite cost angle");
        }
    }
}

}  // namespace

Statevector evolve_ansatz(const DiagonalCostTable &costs, const AnsatzParams &params) {
    validate_params(params);
    Statevector sv = Statevector::uniform(costs.num_qubits);
    for (int r = 0; r < params.rounds(); ++r) {
        apply_phase_int_diagonal(sv, costs.cut_sizes, params.gammas[r]);
        apply_rx_all(sv, params.betas[r]);
    }
    return sv;
}

Statevector evolve_ansatz(const GraphInstance &g, const AnsatzParams &params,
                          int qubit_limit) {
    return evolve_ansatz(diagonal_cost_table(g, qubit_limit), params);
}

SampleSet sample(const Statevector &sv, uint64_t shots, uint64_t seed) {
    return sample_counts(sv, shots, seed);
}

namespace {

// Serial single-amplitude-pair helpers for the trajectory sampler, which
// parallelizes over shots instead of amplitudes.

template <typename PairOp>
void serial_pairs(std::vector<cdouble> &amps, int qubit, PairOp op) {
    const uint64_t step = 1ULL << qubit;
    const uint64_t pairs = amps.size() >> 1;
    for (uint64_t g = 0; g < pairs; ++g) {
        uint64_t s0 = ((g >> qubit) << (qubit + 1)) | (g & (step - 1));
        op(amps[s0], amps[s0 | step]);
    }
}

void serial_h(std::vector<cdouble> &amps, int q) {
    const double r = 1.0 / std::sqrt(2.0);
    serial_pairs(amps, q, [&](cdouble &a, cdouble &b) {
        cdouble a0 = a;
        a = (a0 + b) * r;
        b = (a0 - b) * r;
    });
}

void serial_rx(std::vector<cdouble> &amps, int q, double beta) {
    const double c = std::cos(beta);
    const cdouble ms(0.0, -std::sin(beta));
    serial_pairs(amps, q, [&](cdouble &a, cdouble &b) {
        cdouble a0 = a;
        a = c * a0 + ms * b;
        b = ms * a0 + c * b;
    });
}

void serial_pauli(std::vector<cdouble> &amps, int q, int which) {
    const cdouble i(0.0, 1.0);
    switch (which) {
        case 0:
            serial_pairs(amps, q, [](cdouble &a, cdouble &b) { std::swap(a, b); });
            break;
        case 1:
            serial_pairs(amps, q, [&](cdouble &a, cdouble &b) {
                cdouble a0 = a;
                a = -i * b;
                b = i * a0;
            });
            break;
        default:
            serial_pairs(amps, q, [](cdouble &, cdouble &b) { b = -b; });
            break;
    }
}

void serial_zz_phase(std::vector<cdouble> &amps, int a, int b, double gamma) {
    const cdouble ph(std::cos(gamma), std::sin(gamma));
    for (uint64_t s = 0; s < amps.size(); ++s) {
        if (((s >> a) ^ (s >> b)) & 1ULL) {
            amps[s] *= ph;
        }
    }
}

// With probability p, applies a uniformly random non-identity Pauli drawn
// over the given qubits (3 choices for one qubit, 15 for two).
void maybe_depolarize(std::vector<cdouble> &amps, Rng &rng, double p, int qa, int qb) {
    if (p <= 0.0 || uniform01(rng) >= p) {
        return;
    }
    if (qb < 0) {
        serial_pauli(amps, qa, (int)uniform_below(rng, 3));
        return;
    }
    int choice = 1 + (int)uniform_below(rng, 15);  // skip identity-identity
    int pa = choice & 3;
    int pb = choice >> 2;
    if (pa != 0) {
        serial_pauli(amps, qa, pa - 1);
    }
    if (pb != 0) {
        serial_pauli(amps, qb, pb - 1);
    }
}

uint64_t measure_once(const std::vector<cdouble> &amps, Rng &rng) {
    double total = 0.0;
    for (const cdouble &a : amps) {
        total += std::norm(a);
    }
    double u = uniform01(rng) * total;
    double acc = 0.0;
    for (uint64_t s = 0; s + 1 < amps.size(); ++s) {
        acc += std::norm(amps[s]);
        if (u < acc) {
            return s;
        }
    }
    return amps.size() - 1;
}

}  // namespace

SampleSet noisy_sample(const GraphInstance &g, const AnsatzParams &params,
                       uint64_t shots, const NoiseModel &noise, uint64_t seed,
                       int qubit_limit) {
    validate_params(params);
    if (g.num_nodes > qubit_limit) {
        throw std::invalid_argument("noisy_sample: instance exceeds the qubit limit");
    }
    if (noise.p1 < 0 || noise.p1 > 1 || noise.p2 < 0 || noise.p2 > 1) {
        throw std::invalid_argument("noisy_sample: gate error probabilities must be in [0,1]");
    }
    const int n = g.num_nodes;
    const uint64_t dim = 1ULL << n;
    SampleSet out;
    out.num_bits = n;
#pragma omp parallel
    {
        SampleSet local;
        local.num_bits = n;
        std::vector<cdouble> amps(dim);
#pragma omp for schedule(static)
        for (int64_t shot = 0; shot < (int64_t)shots; ++shot) {
            Rng rng = make_rng(derive_seed(seed, {tag("traj"), (uint64_t)shot}));
            std::fill(amps.begin(), amps.end(), cdouble(0.0, 0.0));
            amps[0] = 1.0;
            for (int q = 0; q < n; ++q) {
                serial_h(amps, q);
                maybe_depolarize(amps, rng, noise.p1, q, -1);
            }
            for (int r = 0; r < params.rounds(); ++r) {
                for (auto &[a, b] : g.edges) {
                    serial_zz_phase(amps, a, b, params.gammas[r]);
                    maybe_depolarize(amps, rng, noise.p2, a, b);
                }
                for (int q = 0; q < n; ++q) {
                    serial_rx(amps, q, params.betas[r]);
                    maybe_depolarize(amps, rng, noise.p1, q, -1);
                }
            }
            local.add(index_to_bits(measure_once(amps, rng), n));
        }
#pragma omp critical
        {
            for (auto &[bits, count] : local.counts) {
                out.counts[bits] += count;
            }
        }
    }
    return out;
}

HellingerFidelity hellinger_fidelities(const SampleSet &measured,
                                       const std::vector<double> &ideal_probs) {
    const uint64_t dim = 1ULL << measured.num_bits;
    if (ideal_probs.size() != dim) {
        throw std::invalid_argument("hellinger_fidelities: distribution sizes differ");
    }
    const double total = (double)measured.total();
    if (total == 0.0) {
        throw std::invalid_argument("hellinger_fidelities: empty sample set");
    }
    double overlap = 0.0;
    for (auto &[bits, count] : measured.counts) {
        uint64_t s = bits_to_index(bits);
        overlap += std::sqrt(((double)count / total) * ideal_probs[s]);
    }
    double sqrt_sum = 0.0;
    for (double q : ideal_probs) {
        sqrt_sum += std::sqrt(q);
    }
    // Overlap a uniform sampler would score against the same ideal
    // distribution; the floor of the rescaled fidelity.
    const double uniform_overlap = sqrt_sum * sqrt_sum / (double)dim;
    HellingerFidelity f;
    f.raw = overlap * overlap;
    const double denom = std::max(1.0 - uniform_overlap, 1e-12);
    f.normalized = std::clamp((f.raw - uniform_overlap) / denom, 0.0, 1.0);
    return f;
}

CircuitResources circuit_resources(const GraphInstance &g, int rounds) {
    if (rounds < 1) {
        throw std::invalid_argument("circuit_resources: rounds must be at least 1");
    }
    CircuitResources r;
    r.width = g.num_nodes;
    r.two_qubit_gates = (long long)rounds * g.num_edges();
    r.one_qubit_gates = (long long)g.num_nodes * (1 + rounds);
    // Greedy scheduling: each cost phase goes into the first layer whose
    // qubits it does not touch.
    std::vector<std::vector<char>> layers;
    for (auto &[a, b] : g.edges) {
        bool placed = false;
        for (auto &layer : layers) {
            if (!layer[a] && !layer[b]) {
                layer[a] = layer[b] = 1;
                placed = true;
                break;
            }
        }
        if (!placed) {
            layers.emplace_back(g.num_nodes, 0);
            layers.back()[a] = layers.back()[b] = 1;
        }
    }
    r.algorithmic_depth = 1 + rounds * ((int)layers.size() + 1);
    return r;
}

}  // namespace qopt
