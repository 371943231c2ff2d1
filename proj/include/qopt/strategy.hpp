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

#ifndef QOPT_STRATEGY_HPP
#define QOPT_STRATEGY_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qopt/records.hpp"
#include "qopt/report.hpp"

namespace qopt {

// A parameter strategy is the triple (restarts, iterations, shots); its
// resource cost is the product, the total number of circuit executions a
// budget has to pay for.
struct ParamTriple {
    int restarts = 0;
    int iterations = 0;
    uint64_t shots = 0;

    bool operator==(const ParamTriple &o) const = default;
    bool operator<(const ParamTriple &o) const {
        if (shots != o.shots) {
            return shots < o.shots;
        }
        if (restarts != o.restarts) {
            return restarts < o.restarts;
        }
        return iterations < o.iterations;
    }
};

double resource_cost(const ParamTriple &params);

// One (instance, strategy) -> achieved quality observation, extracted from
// a run's per-size group summaries.
struct StrategyPoint {
    std::string instance_id;
    int size = 0;
    ParamTriple params;
    double quality = 0.0;
};

std::vector<StrategyPoint> collect_strategy_points(const std::vector<RunData> &runs);

// "log:1:1e6:25" -> 25 geometrically spaced budgets from 1 to 1e6.
std::vector<double> parse_resource_grid(const std::string &text);

// Per budget, the best quality any observed strategy achieves on this one
// instance within the budget; nullopt below the cheapest observation.
std::vector<std::optional<double>> virtual_best_curve(
    const std::vector<StrategyPoint> &instance_points, const std::vector<double> &grid);

struct BudgetRecommendation {
    double budget = 0.0;
    bool defined = false;  // some strategy fits the budget on the train set
    ParamTriple params;
    double train_quality = 0.0;
    bool test_defined = false;
    double test_quality = 0.0;
};

struct StrategyAnalysis {
    std::vector<double> grid;
    std::vector<std::string> train_instances;
    std::vector<std::string> test_instances;
    std::vector<BudgetRecommendation> recommendations;
    // Mean virtual best over the test instances; defined only where every
    // test instance has a feasible observation.
    std::vector<std::optional<double>> test_virtual_best;
};

// Splits instances (not points) into train and test deterministically, picks
// the strategy with the best mean train quality per budget (ties broken
// toward fewer shots, then fewer restarts, then fewer iterations), and
// scores it on the held-out instances next to their virtual best.
StrategyAnalysis analyze_strategies(const std::vector<StrategyPoint> &points,
                                    double train_fraction,
                                    const std::vector<double> &grid, uint64_t seed);

void render_strategy(const StrategyAnalysis &analysis, PlotFormat format,
                     const std::filesystem::path &file);

}  // namespace qopt

#endif
