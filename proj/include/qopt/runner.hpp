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

#ifndef QOPT_RUNNER_HPP
#define QOPT_RUNNER_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace qopt {

// Everything a benchmark run depends on. Defaults < config file < command
// line flags; the resolved config is stored in the run header so a run can
// be reproduced from its own output.
struct BenchmarkConfig {
    std::string solver = "qaoa";  // "qaoa" or "qa"
    // Method 1 scans fixed parameters (no optimizer); method 2 runs the
    // closed optimization loop. For the annealing solver, method 1 uses the
    // single annealing time anneal_max_us, method 2 sweeps the whole range.
    int method = 2;
    std::vector<int> sizes = {4, 6, 8, 10, 12, 14, 16};
    std::vector<uint64_t> shots_list = {1000};
    std::vector<int> rounds_list = {2};
    int max_iterations = 30;
    int restarts = 1;
    std::string objective = "ar";  // ar | cvar | gibbs | best
    std::string angle_mode = "default";
    std::string fixed_angle_file;
    double cvar_alpha = 0.1;
    double gibbs_eta = 0.5;
    double noise_p1 = 0.0;
    double noise_p2 = 0.0;
    double anneal_min_us = 1.0;
    double anneal_max_us = 256.0;
    double anneal_factor = 2.0;
    double anneal_time_scale = 10.0;
    double anneal_dt = 0.0;  // 0 = duration / 1000
    // Builtin profile name or path to a profile JSON. "auto" picks the
    // all-zero profile matching the solver's paradigm.
    std::string profile = "auto";
    uint64_t seed = 1;
    int qubit_limit = 20;      // statevector width cap
    int exhaustion_limit = 24; // exact-optimum width cap
    int jobs = 0;              // >0 pins the OpenMP thread count

    nlohmann::json to_json() const;
    static BenchmarkConfig from_json(const nlohmann::json &j);
    void validate() const;
};

// Runs the configured benchmark, writing records.jsonl / manifest.json /
// wallclock.jsonl into out_dir. Sizes whose setup fails produce an error
// record and are skipped; everything else is deterministic in the config.
void run_benchmark(const BenchmarkConfig &config, const std::filesystem::path &out_dir);

// Writes one instance file per size (instance_n<size>.json), annotated with
// the exact optimum where the size permits exhaustive search.
void generate_instances(const std::vector<int> &sizes, uint64_t seed,
                        const std::filesystem::path &out_dir,
                        int exhaustion_limit = 24);

// Shared parsers for range notations:
//   "4..16:2"  -> 4, 6, ..., 16 (also accepts "8" and "4,6,10")
std::vector<int> parse_size_list(const std::string &text);
//   "1..256x2" -> 1, 2, 4, ..., 256 (also accepts "100")
void parse_anneal_range(const std::string &text, double &min_us, double &max_us,
                        double &factor);

std::vector<double> anneal_time_points(double min_us, double max_us, double factor);

}  // namespace qopt

#endif
