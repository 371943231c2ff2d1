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

#include "qopt/annealer.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qopt/hamiltonian.hpp"
#include "qopt/rng.hpp"

namespace qopt {

void validate_schedule(const AnnealSchedule &schedule) {
    if (!schedule.A || !schedule.B) {
        throw std::invalid_argument("anneal schedule: A and B must be set");
    }
    if (schedule.anneal_time_us < 0 || !std::isfinite(schedule.anneal_time_us)) {
        throw std::invalid_argument("anneal schedule: annealing time must be non-negative");
    }
    if (schedule.time_scale <= 0 || !std::isfinite(schedule.time_scale)) {
        throw std::invalid_argument("anneal schedule: time_scale must be positive");
    }
    double a0 = schedule.A(0.0);
    double b0 = schedule.B(0.0);
    double a1 = schedule.A(1.0);
    double b1 = schedule.B(1.0);
    if (!(a0 >= 10.0 * b0)) {
        throw std::invalid_argument(
            "anneal schedule: mixer must dominate at s=0 (A(0) >= 10*B(0))");
    }
    if (!(b1 >= 10.0 * a1)) {
        throw std::invalid_argument(
            "anneal schedule: target must dominate at s=1 (B(1) >= 10*A(1))");
    }
}

Statevector evolve_schedule(const GraphInstance &g, const AnnealSchedule &schedule,
                            double dt, int qubit_limit) {
    validate_schedule(schedule);
    if (g.num_nodes > qubit_limit) {
        throw std::invalid_argument("evolve_schedule: instance exceeds the qubit limit");
    }
    Statevector sv = Statevector::uniform(g.num_nodes);
    const double duration = schedule.anneal_time_us * schedule.time_scale;
    if (duration <= 0.0) {
        return sv;
    }
    if (dt <= 0.0) {
        // Splitting with dt near one schedule unit rotates phases by several
        // radians per step and silently wrecks the evolution while staying
        // perfectly unitary, so the default step is capped well below that.
        dt = std::min(duration / 1000.0, 0.25);
    }
    const int64_t steps = (int64_t)std::ceil(duration / dt - 1e-9);
    const double h = duration / (double)steps;

    DiagonalCostTable cuts = diagonal_cost_table(g, qubit_limit);
    std::vector<int16_t> ising(cuts.cut_sizes.size());
    for (size_t s = 0; s < ising.size(); ++s) {
        ising[s] = (int16_t)(g.num_edges() - 2 * (int)cuts.cut_sizes[s]);
    }

    for (int64_t k = 0; k < steps; ++k) {
        const double s_mid = ((double)k + 0.5) * h / duration;
        const double a = schedule.A(s_mid);
        const double b = schedule.B(s_mid);
        // exp(-i (h/2) a H_init) with H_init = -sum X is a +X rotation.
        apply_rx_all(sv, -0.5 * h * a);
        apply_phase_int_diagonal(sv, ising, -h * b);
        apply_rx_all(sv, -0.5 * h * a);
    }
    const double norm = sv.norm();
    if (!(std::abs(norm - 1.0) <= 1e-4)) {
        throw std::runtime_error(
            "evolve_schedule: state norm drifted to " + std::to_string(norm) +
            "; reduce the integration step");
    }
    return sv;
}

SampleSet anneal_and_sample(const GraphInstance &g, const AnnealSchedule &schedule,
                            uint64_t reads, uint64_t seed, double dt, int qubit_limit) {
    Statevector sv = evolve_schedule(g, schedule, dt, qubit_limit);
    return sample_counts(sv, reads, seed);
}

SampleSet classical_proxy_sample(const GraphInstance &g, double anneal_time_us,
                                 uint64_t reads, uint64_t seed,
                                 const ProxyOptions &options) {
    if (anneal_time_us < 0 || !std::isfinite(anneal_time_us)) {
        throw std::invalid_argument("classical_proxy_sample: annealing time must be non-negative");
    }
    if (options.beta_initial <= 0 || options.beta_final < options.beta_initial) {
        throw std::invalid_argument("classical_proxy_sample: need 0 < beta_initial <= beta_final");
    }
    const int n = g.num_nodes;
    std::vector<std::vector<int>> neighbors(n);
    for (auto &[a, b] : g.edges) {
        neighbors[a].push_back(b);
        neighbors[b].push_back(a);
    }
    const uint64_t sweeps = std::max<uint64_t>(
        options.min_sweeps, (uint64_t)std::llround(anneal_time_us * options.sweeps_per_us));
    std::vector<double> beta(sweeps);
    for (uint64_t t = 0; t < sweeps; ++t) {
        double frac = sweeps == 1 ? 1.0 : (double)t / (double)(sweeps - 1);
        beta[t] = options.beta_initial *
                  std::pow(options.beta_final / options.beta_initial, frac);
    }

    SampleSet out;
    out.num_bits = n;
#pragma omp parallel
    {
        SampleSet local;
        local.num_bits = n;
        std::vector<int8_t> spin(n);
#pragma omp for schedule(static)
        for (int64_t read = 0; read < (int64_t)reads; ++read) {
            Rng rng = make_rng(derive_seed(seed, {tag("read"), (uint64_t)read}));
            for (int v = 0; v < n; ++v) {
                spin[v] = (rng() & 1ULL) ? 1 : -1;
            }
            for (uint64_t t = 0; t < sweeps; ++t) {
                for (int attempt = 0; attempt < n; ++attempt) {
                    int v = (int)uniform_below(rng, (uint64_t)n);
                    int field = 0;
                    for (int w : neighbors[v]) {
                        field += spin[w];
                    }
                    // Couplings are all +1: node v contributes
                    // spin[v] * field, so a flip changes the energy by
                    // -2 * spin[v] * field.
                    double delta = -2.0 * (double)spin[v] * (double)field;
                    if (delta <= 0.0 || uniform01(rng) < std::exp(-beta[t] * delta)) {
                        spin[v] = (int8_t)-spin[v];
                    }
                }
            }
            std::string bits(n, '0');
            for (int v = 0; v < n; ++v) {
                if (spin[v] < 0) {
                    bits[n - 1 - v] = '1';
                }
            }
            local.add(bits);
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

}  // namespace qopt
