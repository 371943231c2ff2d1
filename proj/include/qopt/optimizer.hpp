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

#ifndef QOPT_OPTIMIZER_HPP
#define QOPT_OPTIMIZER_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qopt/qaoa.hpp"

namespace qopt {

using Objective = std::function<double(const std::vector<double> &)>;

struct TraceEntry {
    std::vector<double> x;
    double value = 0.0;
    int eval_index = 0;  // 1-based evaluation counter
};

struct MinimizeResult {
    std::vector<double> best_x;
    double best_value = 0.0;
    std::vector<TraceEntry> trace;
    int evaluations = 0;
    bool converged = false;  // simplex collapsed before the budget ran out
};

// Nelder-Mead simplex search, minimizing inside the box [lo, hi]. Candidate
// points are clamped to the box before evaluation, so the objective is never
// called outside it. Runs until max_evaluations objective calls have been
// spent or the simplex has collapsed. Every evaluation is appended to the
// trace; best_x is the lowest value seen, earliest on ties, so a constant
// objective reports the starting point. Non-finite objective values abort
// with an error naming the offending point.
MinimizeResult nelder_mead(const Objective &f, const std::vector<double> &x0,
                           const std::vector<double> &lo,
                           const std::vector<double> &hi, int max_evaluations,
                           double initial_step = 0.25);

// Angle box used for the ansatz searches: betas in [0, pi], gammas in
// [0, 2*pi], flattened as betas then gammas.
std::vector<double> angle_lower_bounds(int rounds);
std::vector<double> angle_upper_bounds(int rounds);

enum class AngleMode {
    kDefault,  // every angle 1.0
    kRandom,   // uniform over the angle box, deterministic in the seed
    kFixed,    // looked up from a fixed-angle table by round count
};

AngleMode angle_mode_from_string(const std::string &name);
std::string to_string(AngleMode mode);

struct FixedAngleEntry {
    std::vector<double> betas;
    std::vector<double> gammas;
    std::string source;
};

// Table of pre-optimized angles per round count, loaded from JSON:
// {"entries": [{"rounds": 1, "betas": [...], "gammas": [...], "source": "..."}]}
struct FixedAngleTable {
    std::map<int, FixedAngleEntry> by_rounds;

    static FixedAngleTable load(const std::filesystem::path &file);
};

AnsatzParams initial_angles(int rounds, AngleMode mode, uint64_t seed,
                            const FixedAngleTable *table = nullptr);

}  // namespace qopt

#endif
