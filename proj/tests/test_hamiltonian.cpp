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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qopt/bits.hpp"
#include "qopt/graph.hpp"
#include "qopt/hamiltonian.hpp"
#include "qopt/reference.hpp"

using namespace qopt;
namespace fs = std::filesystem;

TEST_CASE("cut size from a partition string matches the index route") {
    for (uint64_t seed = 1; seed <= 4; ++seed) {
        GraphInstance g = generate_3_regular(8, seed);
        for (uint64_t s = 0; s < 256; s += 7) {
            std::string partition = index_to_bits(s, 8);
            CHECK(cut_size(g, partition) == cut_size_of_index(g, s));
            CHECK(cut_size(g, partition) == ref::cut_size_adjacency(g, s));
        }
    }
}

TEST_CASE("cut size rejects a partition of the wrong length") {
    GraphInstance g = generate_3_regular(6, 1);
    CHECK_THROWS(cut_size(g, "0101"));
}

TEST_CASE("cost table matches the serial reference and the index route") {
    for (int n : {4, 6, 8, 10}) {
        GraphInstance g = generate_3_regular(n, 11);
        DiagonalCostTable fast = diagonal_cost_table(g);
        DiagonalCostTable slow = ref::cost_table_serial(g);
        REQUIRE(fast.cut_sizes.size() == (1ULL << n));
        REQUIRE(fast.cut_sizes.size() == slow.cut_sizes.size());
        for (uint64_t s = 0; s < fast.cut_sizes.size(); ++s) {
            REQUIRE(fast.cut_sizes[s] == slow.cut_sizes[s]);
            REQUIRE((int)fast.cut_sizes[s] == cut_size_of_index(g, s));
        }
    }
}

TEST_CASE("cost table refuses instances beyond the width limit") {
    GraphInstance g = generate_3_regular(12, 1);
    CHECK_THROWS_AS(diagonal_cost_table(g, 10), std::invalid_argument);
}

TEST_CASE("spin encoding uses unit antiferromagnetic couplings and no fields") {
    GraphInstance g = generate_3_regular(8, 2);
    IsingEncoding enc = ising_encoding(g);
    CHECK(enc.num_nodes == 8);
    REQUIRE(enc.fields.size() == 8);
    for (double h : enc.fields) {
        CHECK(h == 0.0);
    }
    REQUIRE(enc.couplings.size() == g.edges.size());
    for (size_t k = 0; k < enc.couplings.size(); ++k) {
        CHECK(enc.couplings[k].first == g.edges[k]);
        CHECK(enc.couplings[k].second == doctest::Approx(1.0));
    }
}

TEST_CASE("spin energy equals edges minus twice the cut") {
    GraphInstance g = generate_3_regular(6, 9);
    IsingEncoding enc = ising_encoding(g);
    for (uint64_t s = 0; s < 64; ++s) {
        std::string partition = index_to_bits(s, 6);
        // direct spin-product evaluation as an independent route
        double direct = 0.0;
        for (auto &[a, b] : g.edges) {
            double za = partition[6 - 1 - a] == '1' ? -1.0 : 1.0;
            double zb = partition[6 - 1 - b] == '1' ? -1.0 : 1.0;
            direct += za * zb;
        }
        double energy = ising_energy(enc, partition);
        CHECK(energy == doctest::Approx(direct).epsilon(1e-12));
        CHECK(energy ==
              doctest::Approx(g.num_edges() - 2 * cut_size(g, partition)).epsilon(1e-12));
    }
}

TEST_CASE("ground states of the spin encoding are exactly the maximum cuts") {
    GraphInstance g = generate_3_regular(8, 4);
    MaxCutResult best = exact_max_cut(g);
    IsingEncoding enc = ising_encoding(g);
    double min_energy = 1e18;
    for (uint64_t s = 0; s < 256; ++s) {
        min_energy = std::min(min_energy, ising_energy(enc, index_to_bits(s, 8)));
    }
    for (uint64_t s = 0; s < 256; ++s) {
        bool is_ground =
            ising_energy(enc, index_to_bits(s, 8)) == doctest::Approx(min_energy);
        bool is_max_cut = cut_size_of_index(g, s) == best.cut_size;
        CHECK(is_ground == is_max_cut);
    }
}

TEST_CASE("coupling export writes one row per edge") {
    GraphInstance g = generate_3_regular(6, 3);
    IsingEncoding enc = ising_encoding(g);
    fs::path file = fs::temp_directory_path() / "qopt_couplings.csv";
    write_coupling_csv(enc, file);

    std::ifstream in(file);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "i,j,J");
    int rows = 0;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string i, j, val;
        REQUIRE(std::getline(ss, i, ','));
        REQUIRE(std::getline(ss, j, ','));
        REQUIRE(std::getline(ss, val, ','));
        CHECK(std::stod(val) == doctest::Approx(1.0));
        ++rows;
    }
    CHECK(rows == g.num_edges());
}
