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

#ifndef QOPT_ANNEALER_HPP
#define QOPT_ANNEALER_HPP

#include <cstdint>
#include <functional>

#include "qopt/graph.hpp"
#include "qopt/sampleset.hpp"
#include "qopt/statevector.hpp"

namespace qopt {

// Interpolating evolution H(s) = A(s) * H_init + B(s) * H_target with
// H_init = -sum_k X_k and H_target = sum_{(i,j) in E} Z_i Z_j, whose ground
// states are the maximum cuts. s runs 0 -> 1 over the anneal; time_scale
// converts microseconds of annealing time into dimensionless evolution
// units (duration = anneal_time_us * time_scale).
struct AnnealSchedule {
    std::function<double(double)> A = [](double s) { return 1.0 - s; };
    std::function<double(double)> B = [](double s) { return s; };
    double anneal_time_us = 1.0;
    double time_scale = 10.0;
};

// Checks that the schedule starts mixer-dominated and ends target-dominated:
// A(0) >= 10 * B(0) and B(1) >= 10 * A(1).
void validate_schedule(const AnnealSchedule &schedule);

// Integrates the time-dependent Schroedinger equation from the uniform
// superposition with second-order Strang splitting (half mixer, full
// diagonal, half mixer per step; schedule evaluated at the step midpoint).
// dt = 0 picks duration / 1000 capped at 0.25 schedule units; the cap keeps
// long anneals accurate (each split factor is unitary, so an oversized step
// corrupts the state without tripping any norm check). Zero-duration anneals
// return the initial state. Throws if the state norm drifts by more than 1e-4.
Statevector evolve_schedule(const GraphInstance &g, const AnnealSchedule &schedule,
                            double dt = 0.0, int qubit_limit = 20);

// evolve_schedule followed by measurement. One full evolution per call;
// reads are drawn from the final state.
SampleSet anneal_and_sample(const GraphInstance &g, const AnnealSchedule &schedule,
                            uint64_t reads, uint64_t seed, double dt = 0.0,
                            int qubit_limit = 20);

// Classical stand-in for instances too wide to evolve: per read, simulated
// annealing on the Ising form with a geometric inverse-temperature ramp.
// The sweep budget scales with the annealing time so longer anneals search
// harder, mirroring the quantum knob.
struct ProxyOptions {
    double sweeps_per_us = 32.0;
    double beta_initial = 0.1;
    double beta_final = 5.0;
    uint64_t min_sweeps = 1;
};

SampleSet classical_proxy_sample(const GraphInstance &g, double anneal_time_us,
                                 uint64_t reads, uint64_t seed,
                                 const ProxyOptions &options = {});

}  // namespace qopt

#endif
