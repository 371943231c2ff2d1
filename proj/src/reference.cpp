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

#include "qopt/reference.hpp"

#include <cmath>
#include <stdexcept>

#include "qopt/bits.hpp"

namespace qopt::ref {

namespace {

std::vector<std::vector<char>> adjacency(const GraphInstance &g) {
    std::vector<std::vector<char>> adj(g.num_nodes, std::vector<char>(g.num_nodes, 0));
    for (auto &[a, b] : g.edges) {
        adj[a][b] = adj[b][a] = 1;
    }
    return adj;
}

int cut_from_adjacency(const std::vector<std::vector<char>> &adj, uint64_t s) {
    int n = (int)adj.size();
    int cut = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (adj[a][b] && (((s >> a) ^ (s >> b)) & 1ULL)) {
                ++cut;
            }
        }
    }
    return cut;
}

}  // namespace

int cut_size_adjacency(const GraphInstance &g, uint64_t index) {
    return cut_from_adjacency(adjacency(g), index);
}

MaxCutResult max_cut_serial(const GraphInstance &g) {
    if (g.num_nodes < 1 || g.num_nodes > 30) {
        throw std::invalid_argument("max_cut_serial: unsupported size");
    }
    auto adj = adjacency(g);
    const uint64_t dim = 1ULL << g.num_nodes;
    int best = -1;
    uint64_t best_s = 0;
    for (uint64_t s = 0; s < dim; ++s) {
        int cut = cut_from_adjacency(adj, s);
        if (cut > best) {
            best = cut;
            best_s = s;
        }
    }
    MaxCutResult r;
    r.cut_size = best;
    // Match the canonical form used by the parallel search: complement so
    // node n-1 sits on side 0.
    if ((best_s >> (g.num_nodes - 1)) & 1ULL) {
        best_s = ~best_s & (dim - 1);
    }
    r.partition = index_to_bits(best_s, g.num_nodes);
    return r;
}

DiagonalCostTable cost_table_serial(const GraphInstance &g, int qubit_limit) {
    if (g.num_nodes > qubit_limit) {
        throw std::invalid_argument("cost_table_serial: instance exceeds the qubit limit");
    }
    DiagonalCostTable t;
    t.num_qubits = g.num_nodes;
    t.cut_sizes.resize(1ULL << g.num_nodes);
    for (uint64_t s = 0; s < t.cut_sizes.size(); ++s) {
        int cut = 0;
        for (auto &[a, b] : g.edges) {
            cut += (int)(((s >> a) ^ (s >> b)) & 1ULL);
        }
        t.cut_sizes[s] = (uint16_t)cut;
    }
    return t;
}

Statevector evolve_ansatz_serial(const DiagonalCostTable &costs,
                                 const AnsatzParams &params) {
    Statevector sv = Statevector::uniform(costs.num_qubits);
    const uint64_t dim = sv.dimension();
    for (int r = 0; r < params.rounds(); ++r) {
        for (uint64_t s = 0; s < dim; ++s) {
            double phase = params.gammas[r] * (double)costs.cut_sizes[s];
            sv.amps[s] *= cdouble(std::cos(phase), std::sin(phase));
        }
        const double c = std::cos(params.betas[r]);
        const cdouble ms(0.0, -std::sin(params.betas[r]));
        for (int q = 0; q < costs.num_qubits; ++q) {
            const uint64_t step = 1ULL << q;
            for (uint64_t s0 = 0; s0 < dim; ++s0) {
                if (s0 & step) {
                    continue;
                }
                cdouble a = sv.amps[s0];
                cdouble b = sv.amps[s0 | step];
                sv.amps[s0] = c * a + ms * b;
                sv.amps[s0 | step] = ms * a + c * b;
            }
        }
    }
    return sv;
}

namespace {

using Matrix = std::vector<cdouble>;  // row-major dim x dim

Matrix matvec_ready_mixer(int n, double beta) {
    const uint64_t dim = 1ULL << n;
    const cdouble m[2][2] = {
        {cdouble(std::cos(beta), 0.0), cdouble(0.0, -std::sin(beta))},
        {cdouble(0.0, -std::sin(beta)), cdouble(std::cos(beta), 0.0)},
    };
    Matrix mat(dim * dim);
    for (uint64_t s = 0; s < dim; ++s) {
        for (uint64_t t = 0; t < dim; ++t) {
            cdouble v(1.0, 0.0);
            for (int k = 0; k < n; ++k) {
                v *= m[(s >> k) & 1ULL][(t >> k) & 1ULL];
            }
            mat[s * dim + t] = v;
        }
    }
    return mat;
}

std::vector<cdouble> matvec(const Matrix &mat, const std::vector<cdouble> &x) {
    const uint64_t dim = x.size();
    std::vector<cdouble> y(dim, cdouble(0.0, 0.0));
    for (uint64_t s = 0; s < dim; ++s) {
        for (uint64_t t = 0; t < dim; ++t) {
            y[s] += mat[s * dim + t] * x[t];
        }
    }
    return y;
}

}  // namespace

std::vector<cdouble> evolve_ansatz_dense(const GraphInstance &g,
                                         const AnsatzParams &params) {
    if (g.num_nodes > 10) {
        throw std::invalid_argument("evolve_ansatz_dense: too many nodes for the dense route");
    }
    auto adj = adjacency(g);
    const uint64_t dim = 1ULL << g.num_nodes;
    std::vector<cdouble> psi(dim, cdouble(1.0 / std::sqrt((double)dim), 0.0));
    for (int r = 0; r < params.rounds(); ++r) {
        for (uint64_t s = 0; s < dim; ++s) {
            double phase = params.gammas[r] * (double)cut_from_adjacency(adj, s);
            psi[s] *= cdouble(std::cos(phase), std::sin(phase));
        }
        psi = matvec(matvec_ready_mixer(g.num_nodes, params.betas[r]), psi);
    }
    return psi;
}

std::vector<cdouble> anneal_dense_rk4(const GraphInstance &g,
                                      const std::function<double(double)> &A,
                                      const std::function<double(double)> &B,
                                      double anneal_time_us, double time_scale,
                                      double dt) {
    if (g.num_nodes > 10) {
        throw std::invalid_argument("anneal_dense_rk4: too many nodes for the dense route");
    }
    auto adj = adjacency(g);
    const int n = g.num_nodes;
    const uint64_t dim = 1ULL << n;
    // H_init = -sum_k X_k, whose ground state is the uniform superposition.
    Matrix h_init(dim * dim, cdouble(0.0, 0.0));
    for (uint64_t s = 0; s < dim; ++s) {
        for (int k = 0; k < n; ++k) {
            h_init[s * dim + (s ^ (1ULL << k))] = cdouble(-1.0, 0.0);
        }
    }
    std::vector<double> h_target(dim);
    for (uint64_t s = 0; s < dim; ++s) {
        h_target[s] = (double)g.num_edges() - 2.0 * cut_from_adjacency(adj, s);
    }
    const double duration = anneal_time_us * time_scale;
    std::vector<cdouble> psi(dim, cdouble(1.0 / std::sqrt((double)dim), 0.0));
    if (duration <= 0.0) {
        return psi;
    }
    auto deriv = [&](double t, const std::vector<cdouble> &y) {
        double s_frac = std::min(1.0, std::max(0.0, t / duration));
        double a = A(s_frac);
        double b = B(s_frac);
        std::vector<cdouble> d(dim, cdouble(0.0, 0.0));
        const cdouble mi(0.0, -1.0);
        for (uint64_t s = 0; s < dim; ++s) {
            cdouble h_psi = b * h_target[s] * y[s];
            for (uint64_t t2 = 0; t2 < dim; ++t2) {
                h_psi += a * h_init[s * dim + t2] * y[t2];
            }
            d[s] = mi * h_psi;
        }
        return d;
    };
    const int64_t steps = (int64_t)std::ceil(duration / dt);
    const double h = duration / (double)steps;
    double t = 0.0;
    for (int64_t k = 0; k < steps; ++k) {
        auto k1 = deriv(t, psi);
        std::vector<cdouble> y2(dim);
        for (uint64_t s = 0; s < dim; ++s) y2[s] = psi[s] + 0.5 * h * k1[s];
        auto k2 = deriv(t + 0.5 * h, y2);
        for (uint64_t s = 0; s < dim; ++s) y2[s] = psi[s] + 0.5 * h * k2[s];
        auto k3 = deriv(t + 0.5 * h, y2);
        for (uint64_t s = 0; s < dim; ++s) y2[s] = psi[s] + h * k3[s];
        auto k4 = deriv(t + h, y2);
        for (uint64_t s = 0; s < dim; ++s) {
            psi[s] += (h / 6.0) * (k1[s] + 2.0 * k2[s] + 2.0 * k3[s] + k4[s]);
        }
        t += h;
    }
    return psi;
}

}  // namespace qopt::ref
