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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "qopt/bits.hpp"
#include "qopt/rng.hpp"
#include "qopt/sampleset.hpp"
#include "qopt/statevector.hpp"

using namespace qopt;

namespace {

// Test-local dense one-qubit gate application, the slow textbook way.
// An intentionally independent route: build the full index arithmetic from
// scratch rather than reusing the pair iteration of the production kernel.
Statevector apply_dense_1q(const Statevector &sv, int qubit, const cdouble m[2][2]) {
    Statevector out = sv;
    for (uint64_t s = 0; s < sv.dimension(); ++s) {
        uint64_t bit = (s >> qubit) & 1ULL;
        uint64_t partner = s ^ (1ULL << qubit);
        // row `bit` of the matrix times the (a0, a1) column
        cdouble a_same = sv.amps[s];
        cdouble a_other = sv.amps[partner];
        if (bit == 0) {
            out.amps[s] = m[0][0] * a_same + m[0][1] * a_other;
        } else {
            out.amps[s] = m[1][0] * a_other + m[1][1] * a_same;
        }
    }
    return out;
}

Statevector random_state(int n, uint64_t seed) {
    Rng rng = make_rng(seed);
    Statevector sv = Statevector::zero_state(n);
    double norm2 = 0.0;
    for (auto &a : sv.amps) {
        a = cdouble(uniform01(rng) - 0.5, uniform01(rng) - 0.5);
        norm2 += std::norm(a);
    }
    for (auto &a : sv.amps) {
        a /= std::sqrt(norm2);
    }
    return sv;
}

double max_diff(const Statevector &a, const Statevector &b) {
    double d = 0.0;
    for (uint64_t s = 0; s < a.dimension(); ++s) {
        d = std::max(d, std::abs(a.amps[s] - b.amps[s]));
    }
    return d;
}

}  // namespace

TEST_CASE("initial states are normalized and correctly shaped") {
    Statevector z = Statevector::zero_state(3);
    REQUIRE(z.dimension() == 8);
    CHECK(z.amps[0] == cdouble(1.0, 0.0));
    CHECK(z.norm() == doctest::Approx(1.0));

    Statevector u = Statevector::uniform(3);
    for (auto &a : u.amps) {
        CHECK(std::abs(a - cdouble(1.0 / std::sqrt(8.0), 0.0)) < 1e-15);
    }
    std::vector<double> p = u.probabilities();
    double sum = 0.0;
    for (double v : p) {
        sum += v;
    }
    CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("hadamard squares to the identity") {
    Statevector sv = random_state(4, 21);
    Statevector orig = sv;
    apply_h(sv, 2);
    apply_h(sv, 2);
    CHECK(max_diff(sv, orig) < 1e-14);
}

TEST_CASE("hadamard on the zero state gives the uniform single-qubit state") {
    Statevector sv = Statevector::zero_state(1);
    apply_h(sv, 0);
    CHECK(std::abs(sv.amps[0] - cdouble(1.0 / std::sqrt(2.0), 0)) < 1e-15);
    CHECK(std::abs(sv.amps[1] - cdouble(1.0 / std::sqrt(2.0), 0)) < 1e-15);
}

TEST_CASE("pauli gates match their dense matrices") {
    const cdouble I(0.0, 1.0);
    const cdouble X[2][2] = {{0, 1}, {1, 0}};
    const cdouble Y[2][2] = {{0, -I}, {I, 0}};
    const cdouble Z[2][2] = {{1, 0}, {0, -1}};
    const cdouble H[2][2] = {{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)},
                             {1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0)}};
    for (int qubit = 0; qubit < 3; ++qubit) {
        Statevector base = random_state(3, 100 + (uint64_t)qubit);

        Statevector a = base;
        apply_x(a, qubit);
        CHECK(max_diff(a, apply_dense_1q(base, qubit, X)) < 1e-14);

        a = base;
        apply_y(a, qubit);
        CHECK(max_diff(a, apply_dense_1q(base, qubit, Y)) < 1e-14);

        a = base;
        apply_z(a, qubit);
        CHECK(max_diff(a, apply_dense_1q(base, qubit, Z)) < 1e-14);

        a = base;
        apply_h(a, qubit);
        CHECK(max_diff(a, apply_dense_1q(base, qubit, H)) < 1e-14);
    }
}

TEST_CASE("x rotation matches its dense matrix and preserves the norm") {
    for (double beta : {0.0, 0.3, 1.0, -2.2, 3.14159}) {
        const cdouble c(std::cos(beta), 0.0);
        const cdouble s(0.0, -std::sin(beta));
        const cdouble RX[2][2] = {{c, s}, {s, c}};
        for (int qubit = 0; qubit < 4; ++qubit) {
            Statevector base = random_state(4, 7);
            Statevector fast = base;
            apply_rx(fast, qubit, beta);
            CHECK(max_diff(fast, apply_dense_1q(base, qubit, RX)) < 1e-13);
            CHECK(fast.norm() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("x rotation on every qubit equals the per-qubit composition") {
    Statevector a = random_state(5, 33);
    Statevector b = a;
    apply_rx_all(a, 0.77);
    for (int q = 0; q < 5; ++q) {
        apply_rx(b, q, 0.77);
    }
    CHECK(max_diff(a, b) < 1e-13);
}

TEST_CASE("integer diagonal phase matches the direct complex exponential") {
    const int n = 5;
    Statevector base = random_state(n, 55);
    std::vector<uint16_t> values(1ULL << n);
    std::vector<int16_t> signed_values(1ULL << n);
    Rng rng = make_rng(66);
    for (size_t s = 0; s < values.size(); ++s) {
        values[s] = (uint16_t)uniform_below(rng, 12);
        signed_values[s] = (int16_t)((int)uniform_below(rng, 25) - 12);
    }
    const double theta = 0.413;

    Statevector fast = base;
    apply_phase_int_diagonal(fast, values, theta);
    Statevector direct = base;
    for (size_t s = 0; s < values.size(); ++s) {
        direct.amps[s] *= std::exp(cdouble(0.0, theta * values[s]));
    }
    CHECK(max_diff(fast, direct) < 1e-14);
    CHECK(fast.norm() == doctest::Approx(1.0).epsilon(1e-12));

    Statevector fast2 = base;
    apply_phase_int_diagonal(fast2, signed_values, theta);
    Statevector direct2 = base;
    for (size_t s = 0; s < signed_values.size(); ++s) {
        direct2.amps[s] *= std::exp(cdouble(0.0, theta * signed_values[s]));
    }
    CHECK(max_diff(fast2, direct2) < 1e-14);
}

TEST_CASE("sampling is deterministic in the seed") {
    Statevector sv = random_state(6, 99);
    SampleSet a = sample_counts(sv, 5000, 1234);
    SampleSet b = sample_counts(sv, 5000, 1234);
    CHECK(a.counts == b.counts);
    SampleSet c = sample_counts(sv, 5000, 1235);
    CHECK(a.counts != c.counts);
}

TEST_CASE("sampling returns the requested number of shots") {
    Statevector sv = random_state(4, 12);
    SampleSet s = sample_counts(sv, 777, 5);
    CHECK(s.num_bits == 4);
    CHECK(s.total() == 777);
    for (auto &[bits, count] : s.counts) {
        CHECK(bits.size() == 4);
        CHECK(count > 0);
    }
}

TEST_CASE("sampling follows the amplitude distribution") {
    // |amps|^2 = (0.64, 0.36) on one qubit
    Statevector sv = Statevector::zero_state(1);
    sv.amps[0] = cdouble(0.8, 0.0);
    sv.amps[1] = cdouble(0.0, 0.6);
    SampleSet s = sample_counts(sv, 100000, 42);
    // sd = sqrt(1e5 * 0.64 * 0.36) ~ 152; allow 6 sigma
    CHECK(std::abs((double)s.counts.at("0") - 64000.0) < 1000.0);
    CHECK(std::abs((double)s.counts.at("1") - 36000.0) < 1000.0);
}

TEST_CASE("sampled keys use the most-significant-first rendering") {
    // basis index 1 on two qubits = node 0 set = string "01"
    Statevector sv = Statevector::zero_state(2);
    sv.amps[0] = 0.0;
    sv.amps[1] = 1.0;
    SampleSet s = sample_counts(sv, 10, 3);
    REQUIRE(s.counts.size() == 1);
    CHECK(s.counts.begin()->first == "01");
    CHECK(s.counts.begin()->second == 10);
}

TEST_CASE("zero-probability states are never sampled") {
    Statevector sv = Statevector::zero_state(3);
    sv.amps[0] = cdouble(1.0 / std::sqrt(2.0), 0.0);
    sv.amps[5] = cdouble(0.0, 1.0 / std::sqrt(2.0));
    SampleSet s = sample_counts(sv, 20000, 9);
    for (auto &[bits, count] : s.counts) {
        bool allowed = bits == "000" || bits == "101";
        CHECK(allowed);
    }
}
