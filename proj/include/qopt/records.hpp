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

#ifndef QOPT_RECORDS_HPP
#define QOPT_RECORDS_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qopt/metrics.hpp"
#include "qopt/qaoa.hpp"

namespace qopt {

// One line of a run's records.jsonl stream. Which fields are meaningful
// depends on `type`:
//   instance  - one per problem size: the graph and its optimum
//   iteration - one per objective evaluation / annealing-time point
//   restart   - summary of one optimizer restart
//   group     - summary of one problem size across restarts
//   error     - a size that had to be skipped, with the reason
// Absent optional numerics use the sentinels noted below.
struct BenchRecord {
    std::string type;
    std::string solver;  // "qaoa" or "qa"
    int method = 2;
    int size = 0;
    int restart = -1;    // -1 = not tied to a restart
    int iteration = -1;  // 1-based evaluation / annealing point index
    int rounds = 0;
    uint64_t shots = 0;
    double anneal_time_us = -1.0;  // <0 = not an annealing record
    std::string engine;            // "statevector", "trajectory" or "proxy"
    std::vector<double> betas;
    std::vector<double> gammas;
    std::string objective;
    double objective_value = 0.0;
    bool has_quality = false;
    QualityRecord quality;
    uint64_t instance_seed = 0;
    int num_edges = 0;
    int optimal_cut = 0;
    bool optimal_exact = true;
    TimingBreakdown timing;
    std::map<int, uint64_t> cut_histogram;
    uint64_t sample_seed = 0;
    double raw_fidelity = -1.0;  // <0 = not measured
    double normalized_fidelity = -1.0;
    bool has_resources = false;
    CircuitResources resources;
    int evaluations = 0;    // restart summaries
    int best_restart = -1;  // group summaries
    std::string message;    // error records

    nlohmann::json to_json() const;
    static BenchRecord from_json(const nlohmann::json &j);
};

// Writes a run directory:
//   records.jsonl  - header line, then one BenchRecord per line. Bit-wise
//                    reproducible except for the header's timestamp.
//   manifest.json  - config, versions, start/finish timestamps.
//   wallclock.jsonl- measured wall-clock durations. Never compared across
//                    runs; everything reproducible stays out of this file.
class RunWriter {
  public:
    RunWriter(const std::filesystem::path &dir, const nlohmann::json &config);

    void write(const BenchRecord &record);
    void write_wallclock(const std::string &label, double seconds);
    void finish();

    const std::filesystem::path &dir() const { return dir_; }

  private:
    std::filesystem::path dir_;
    nlohmann::json config_;
    std::string started_;
    std::ofstream records_;
    std::ofstream wallclock_;
    bool finished_ = false;
};

struct RunData {
    nlohmann::json config;
    std::vector<BenchRecord> records;
};

RunData load_run(const std::filesystem::path &dir);

std::string iso_timestamp_now();

}  // namespace qopt

#endif
