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

#include "qopt/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nlohmann/json.hpp"
#include "qopt/rng.hpp"
#include "qopt/runner.hpp"

namespace qopt {

using nlohmann::json;

double resource_cost(const ParamTriple &params) {
    return static_cast<double>(params.restarts) * static_cast<double>(params.iterations) *
           static_cast<double>(params.shots);
}

std::vector<StrategyPoint> collect_strategy_points(const std::vector<RunData> &runs) {
    std::vector<StrategyPoint> points;
    for (const RunData &run : runs) {
        BenchmarkConfig config = BenchmarkConfig::from_json(run.config);
        if (config.solver != "qaoa") {
            continue;  // strategies are about the variational outer loop
        }
        ParamTriple params;
        params.restarts = config.restarts;
        params.iterations = config.max_iterations;
        params.shots = config.shots_list.empty() ? 0 : config.shots_list.front();

        // instance seeds per size, recorded before the size's results
        std::map<int, uint64_t> seed_of_size;
        for (const BenchRecord &rec : run.records) {
            if (rec.type == "instance") {
                seed_of_size[rec.size] = rec.instance_seed;
            }
        }
        for (const BenchRecord &rec : run.records) {
            if (rec.type != "group" || !rec.has_quality) {
                continue;
            }
            auto it = seed_of_size.find(rec.size);
            if (it == seed_of_size.end()) {
                continue;
            }
            char id[64];
            std::snprintf(id, sizeof id, "n%d-%016llx", rec.size,
                          static_cast<unsigned long long>(it->second));
            StrategyPoint point;
            point.instance_id = id;
            point.size = rec.size;
            point.params = params;
            point.quality = rec.objective_value;
            points.push_back(point);
        }
    }
    return points;
}

std::vector<double> parse_resource_grid(const std::string &text) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string part;
    while (std::getline(stream, part, ':')) {
        parts.push_back(part);
    }
    if (parts.size() != 4 || parts[0] != "log") {
        throw std::invalid_argument("resource grid must look like log:<lo>:<hi>:<count>, got '" +
                                    text + "'");
    }
    double lo = 0.0;
    double hi = 0.0;
    long count = 0;
    try {
        lo = std::stod(parts[1]);
        hi = std::stod(parts[2]);
        count = std::stol(parts[3]);
    } catch (const std::exception &) {
        throw std::invalid_argument("resource grid has a non-numeric field: '" + text + "'");
    }
    if (!(lo > 0.0) || !(hi >= lo)) {
        throw std::invalid_argument("resource grid needs 0 < lo <= hi: '" + text + "'");
    }
    if (count < 1 || count > 100000) {
        throw std::invalid_argument("resource grid count out of range: '" + text + "'");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(count));
    if (count == 1) {
        grid.push_back(lo);
        return grid;
    }
    double log_lo = std::log(lo);
    double log_hi = std::log(hi);
    for (long i = 0; i < count; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(count - 1);
        grid.push_back(std::exp(log_lo + t * (log_hi - log_lo)));
    }
    grid.back() = hi;  // guard against round-off at the top end
    return grid;
}

std::vector<std::optional<double>> virtual_best_curve(
    const std::vector<StrategyPoint> &instance_points, const std::vector<double> &grid) {
    std::vector<std::optional<double>> curve(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        bool any = false;
        double best = 0.0;
        for (const StrategyPoint &point : instance_points) {
            if (resource_cost(point.params) > grid[i]) {
                continue;
            }
            if (!any || point.quality > best) {
                best = point.quality;
                any = true;
            }
        }
        if (any) {
            curve[i] = best;
        }
    }
    return curve;
}

namespace {

// mean quality per strategy over a set of instance ids
std::map<ParamTriple, double> mean_by_strategy(const std::vector<StrategyPoint> &points,
                                               const std::set<std::string> &instances) {
    std::map<ParamTriple, std::pair<double, uint64_t>> sums;
    for (const StrategyPoint &point : points) {
        if (instances.count(point.instance_id) == 0) {
            continue;
        }
        auto &slot = sums[point.params];
        slot.first += point.quality;
        slot.second += 1;
    }
    std::map<ParamTriple, double> means;
    for (const auto &[params, sum] : sums) {
        means[params] = sum.first / static_cast<double>(sum.second);
    }
    return means;
}

}  // namespace

StrategyAnalysis analyze_strategies(const std::vector<StrategyPoint> &points,
                                    double train_fraction,
                                    const std::vector<double> &grid, uint64_t seed) {
    if (grid.empty()) {
        throw std::invalid_argument("analyze_strategies: empty resource grid");
    }
    if (!(train_fraction > 0.0) || !(train_fraction < 1.0)) {
        throw std::invalid_argument("analyze_strategies: train fraction must be in (0, 1)");
    }
    if (points.empty()) {
        throw std::invalid_argument("analyze_strategies: no strategy points");
    }

    std::vector<std::string> ids;
    {
        std::set<std::string> unique;
        for (const StrategyPoint &point : points) {
            unique.insert(point.instance_id);
        }
        ids.assign(unique.begin(), unique.end());
    }

    StrategyAnalysis analysis;
    analysis.grid = grid;

    // deterministic shuffle, then cut; with a single instance train == test
    Rng rng = make_rng(derive_seed(seed, {tag("split")}));
    for (size_t i = ids.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(uniform_below(rng, i));
        std::swap(ids[i - 1], ids[j]);
    }
    std::set<std::string> train_set;
    std::set<std::string> test_set;
    if (ids.size() < 2) {
        train_set.insert(ids.begin(), ids.end());
        test_set = train_set;
    } else {
        size_t n_train = static_cast<size_t>(
            std::lround(train_fraction * static_cast<double>(ids.size())));
        n_train = std::clamp<size_t>(n_train, 1, ids.size() - 1);
        for (size_t i = 0; i < ids.size(); ++i) {
            (i < n_train ? train_set : test_set).insert(ids[i]);
        }
    }
    analysis.train_instances.assign(train_set.begin(), train_set.end());
    analysis.test_instances.assign(test_set.begin(), test_set.end());

    std::map<ParamTriple, double> train_means = mean_by_strategy(points, train_set);
    std::map<ParamTriple, double> test_means = mean_by_strategy(points, test_set);

    for (double budget : grid) {
        BudgetRecommendation rec;
        rec.budget = budget;
        for (const auto &[params, quality] : train_means) {
            if (resource_cost(params) > budget) {
                continue;
            }
            // operator< on ParamTriple orders by shots, restarts, iterations,
            // so on a quality tie the map order already visited the cheaper
            // strategy first; keep it.
            if (!rec.defined || quality > rec.train_quality) {
                rec.defined = true;
                rec.params = params;
                rec.train_quality = quality;
            }
        }
        if (rec.defined) {
            auto it = test_means.find(rec.params);
            if (it != test_means.end()) {
                rec.test_defined = true;
                rec.test_quality = it->second;
            }
        }
        analysis.recommendations.push_back(rec);
    }

    // virtual best averaged over test instances, defined only where complete
    std::vector<double> sums(grid.size(), 0.0);
    std::vector<uint64_t> counts(grid.size(), 0);
    for (const std::string &id : analysis.test_instances) {
        std::vector<StrategyPoint> mine;
        for (const StrategyPoint &point : points) {
            if (point.instance_id == id) {
                mine.push_back(point);
            }
        }
        std::vector<std::optional<double>> curve = virtual_best_curve(mine, grid);
        for (size_t i = 0; i < grid.size(); ++i) {
            if (curve[i]) {
                sums[i] += *curve[i];
                counts[i] += 1;
            }
        }
    }
    analysis.test_virtual_best.resize(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
        if (counts[i] == analysis.test_instances.size() && counts[i] > 0) {
            analysis.test_virtual_best[i] = sums[i] / static_cast<double>(counts[i]);
        }
    }
    return analysis;
}

namespace {

json analysis_to_json(const StrategyAnalysis &analysis) {
    json root;
    root["budgets"] = analysis.grid;
    root["train_instances"] = analysis.train_instances;
    root["test_instances"] = analysis.test_instances;
    json recs = json::array();
    for (const BudgetRecommendation &rec : analysis.recommendations) {
        json item;
        item["budget"] = rec.budget;
        item["defined"] = rec.defined;
        if (rec.defined) {
            item["restarts"] = rec.params.restarts;
            item["iterations"] = rec.params.iterations;
            item["shots"] = rec.params.shots;
            item["train_quality"] = rec.train_quality;
            if (rec.test_defined) {
                item["test_quality"] = rec.test_quality;
            }
        }
        recs.push_back(item);
    }
    root["recommendations"] = recs;
    json vb = json::array();
    for (const auto &value : analysis.test_virtual_best) {
        if (value) {
            vb.push_back(*value);
        } else {
            vb.push_back(nullptr);
        }
    }
    root["test_virtual_best"] = vb;
    return root;
}

void write_strategy_csv(const StrategyAnalysis &analysis, const std::filesystem::path &file) {
    std::ofstream out(file);
    if (!out) {
        throw std::runtime_error("cannot write " + file.string());
    }
    out << "budget,defined,restarts,iterations,shots,train_quality,test_quality,"
           "test_virtual_best\n";
    char buf[64];
    auto num = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.9g", v);
        return std::string(buf);
    };
    for (size_t i = 0; i < analysis.grid.size(); ++i) {
        const BudgetRecommendation &rec = analysis.recommendations[i];
        out << num(rec.budget) << ',' << (rec.defined ? 1 : 0) << ',';
        if (rec.defined) {
            out << rec.params.restarts << ',' << rec.params.iterations << ',' << rec.params.shots
                << ',' << num(rec.train_quality) << ',';
            if (rec.test_defined) {
                out << num(rec.test_quality);
            }
        } else {
            out << ",,,,";
        }
        out << ',';
        if (analysis.test_virtual_best[i]) {
            out << num(*analysis.test_virtual_best[i]);
        }
        out << '\n';
    }
}

void write_strategy_svg(const StrategyAnalysis &analysis, const std::filesystem::path &file) {
    const double width = 640.0;
    const double height = 420.0;
    const double ml = 64.0;
    const double mr = 24.0;
    const double mt = 40.0;
    const double mb = 48.0;
    SvgCanvas svg(width, height);
    svg.text(ml, 24.0, "strategy quality vs resource budget", 14.0, "start", "#202020");

    double lo = analysis.grid.front();
    double hi = analysis.grid.back();
    double log_lo = std::log10(lo);
    double log_hi = std::log10(std::max(hi, lo * 1.0001));
    auto x_of = [&](double budget) {
        double t = (std::log10(budget) - log_lo) / (log_hi - log_lo);
        return ml + t * (width - ml - mr);
    };
    auto y_of = [&](double quality) {
        double t = std::clamp(quality, 0.0, 1.0);
        return height - mb - t * (height - mt - mb);
    };

    svg.line(ml, height - mb, width - mr, height - mb, "#404040", 1.0);
    svg.line(ml, mt, ml, height - mb, "#404040", 1.0);
    for (double q = 0.0; q <= 1.0 + 1e-9; q += 0.25) {
        char label[16];
        std::snprintf(label, sizeof label, "%.2f", q);
        svg.line(ml - 4.0, y_of(q), ml, y_of(q), "#404040", 1.0);
        svg.text(ml - 40.0, y_of(q) + 4.0, label, 10.0, "start", "#404040");
    }
    for (int e = static_cast<int>(std::ceil(log_lo)); e <= static_cast<int>(std::floor(log_hi));
         ++e) {
        double budget = std::pow(10.0, e);
        char label[16];
        std::snprintf(label, sizeof label, "1e%d", e);
        svg.line(x_of(budget), height - mb, x_of(budget), height - mb + 4.0, "#404040", 1.0);
        svg.text(x_of(budget) - 10.0, height - mb + 18.0, label, 10.0, "start", "#404040");
    }
    svg.text(width / 2.0 - 60.0, height - 12.0, "budget (evaluations)", 11.0, "start", "#404040");

    std::vector<std::pair<double, double>> vb_line;
    for (size_t i = 0; i < analysis.grid.size(); ++i) {
        if (analysis.test_virtual_best[i]) {
            vb_line.emplace_back(x_of(analysis.grid[i]), y_of(*analysis.test_virtual_best[i]));
        }
    }
    std::vector<std::pair<double, double>> rec_line;
    for (size_t i = 0; i < analysis.grid.size(); ++i) {
        const BudgetRecommendation &rec = analysis.recommendations[i];
        if (rec.defined && rec.test_defined) {
            rec_line.emplace_back(x_of(rec.budget), y_of(rec.test_quality));
        }
    }
    if (vb_line.empty() && rec_line.empty()) {
        svg.text(width / 2.0 - 30.0, height / 2.0, "no data", 12.0, "start", "#808080");
    } else {
        svg.polyline(vb_line, "#315691", 2.0);
        svg.polyline(rec_line, "#f46d43", 2.0);
        svg.line(width - mr - 150.0, mt + 8.0, width - mr - 120.0, mt + 8.0, "#315691", 2.0);
        svg.text(width - mr - 114.0, mt + 12.0, "virtual best (test)", 10.0, "start", "#404040");
        svg.line(width - mr - 150.0, mt + 24.0, width - mr - 120.0, mt + 24.0, "#f46d43", 2.0);
        svg.text(width - mr - 114.0, mt + 28.0, "recommended (test)", 10.0, "start", "#404040");
    }
    svg.save(file);
}

}  // namespace

void render_strategy(const StrategyAnalysis &analysis, PlotFormat format,
                     const std::filesystem::path &file) {
    switch (format) {
        case PlotFormat::kJson: {
            std::ofstream out(file);
            if (!out) {
                throw std::runtime_error("cannot write " + file.string());
            }
            out << analysis_to_json(analysis).dump(2) << '\n';
            break;
        }
        case PlotFormat::kCsv:
            write_strategy_csv(analysis, file);
            break;
        case PlotFormat::kSvg:
            write_strategy_svg(analysis, file);
            break;
    }
}

}  // namespace qopt
