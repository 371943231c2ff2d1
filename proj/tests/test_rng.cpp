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

#include <cstdint>
#include <set>
#include <vector>

#include "qopt/rng.hpp"

using namespace qopt;

TEST_CASE("engine is the standard mt19937_64") {
    // The C++ standard pins the 10000th draw of default-seeded mt19937_64.
    Rng rng;
    uint64_t v = 0;
    for (int i = 0; i < 10000; ++i) {
        v = rng();
    }
    CHECK(v == 9981545732273789042ULL);
}

TEST_CASE("derive_seed is deterministic and path sensitive") {
    uint64_t a = derive_seed(42, {tag("inst"), 8});
    uint64_t b = derive_seed(42, {tag("inst"), 8});
    CHECK(a == b);

    std::set<uint64_t> seen;
    seen.insert(a);
    CHECK(seen.insert(derive_seed(42, {tag("inst"), 9})).second);
    CHECK(seen.insert(derive_seed(43, {tag("inst"), 8})).second);
    CHECK(seen.insert(derive_seed(42, {tag("init"), 8})).second);
    CHECK(seen.insert(derive_seed(42, {tag("inst"), 8, 0})).second);
    CHECK(seen.insert(derive_seed(42, {tag("inst")})).second);
    CHECK(seen.insert(derive_seed(42, {})).second);
}

TEST_CASE("tag hashes distinct labels to distinct values") {
    CHECK(tag("smp") == tag("smp"));
    std::set<uint64_t> tags;
    for (const char *label : {"inst", "init", "smp", "m1", "qa", "traj", "read",
                              "refcut", "bg", "gen3reg", "split"}) {
        CHECK(tags.insert(tag(label)).second);
    }
}

TEST_CASE("uniform01 stays in the half-open unit interval") {
    Rng rng = make_rng(derive_seed(7, {tag("u01")}));
    double sum = 0.0;
    for (int i = 0; i < 200000; ++i) {
        double u = uniform01(rng);
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    double mean = sum / 200000.0;
    // sd of the mean is 1/sqrt(12*200000) ~ 0.00065; allow 6 sigma
    CHECK(mean == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("uniform_below is bounded, exhaustive and deterministic") {
    Rng rng = make_rng(derive_seed(7, {tag("ub")}));
    std::set<uint64_t> seen;
    for (int i = 0; i < 1000; ++i) {
        uint64_t v = uniform_below(rng, 7);
        REQUIRE(v < 7);
        seen.insert(v);
    }
    CHECK(seen.size() == 7);

    Rng r1 = make_rng(123);
    Rng r2 = make_rng(123);
    for (int i = 0; i < 100; ++i) {
        CHECK(uniform_below(r1, 1000003) == uniform_below(r2, 1000003));
    }
}

TEST_CASE("uniform_below n=1 always returns zero") {
    Rng rng = make_rng(1);
    for (int i = 0; i < 10; ++i) {
        CHECK(uniform_below(rng, 1) == 0);
    }
}

TEST_CASE("uniform_below is unbiased over a coarse histogram") {
    Rng rng = make_rng(derive_seed(11, {tag("hist")}));
    std::vector<int> counts(5, 0);
    const int draws = 250000;
    for (int i = 0; i < draws; ++i) {
        counts[uniform_below(rng, 5)]++;
    }
    for (int c : counts) {
        // expectation 50000, sd = sqrt(draws*0.2*0.8) = 200; allow 6 sigma
        CHECK(std::abs(c - 50000) < 1300);
    }
}
