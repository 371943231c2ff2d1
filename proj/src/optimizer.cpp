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

#include "qopt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "json.hpp"
#include "qopt/rng.hpp"

namespace qopt {

namespace {

struct SimplexPoint {
    std::vector<double> x;
    double value = 0.0;
};

std::vector<double> clamp_to_box(std::vector<double> x, const std::vector<double> &lo,
                                 const std::vector<double> &hi) {
    for (size_t i = 0; i < x.size(); ++i) {
        x[i] = std::clamp(x[i], lo[i], hi[i]);
    }
    return x;
}

double simplex_diameter(const std::vector<SimplexPoint> &pts) {
    double d = 0.0;
    for (size_t i = 1; i < pts.size(); ++i) {
        for (size_t k = 0; k < pts[0].x.size(); ++k) {
            d = std::max(d, std::abs(pts[i].x[k] - pts[0].x[k]));
        }
    }
    return d;
}

}  // namespace

MinimizeResult nelder_mead(const Objective &f, const std::vector<double> &x0,
                           const std::vector<double> &lo,
                           const std::vector<double> &hi, int max_evaluations,
                           double initial_step) {
    const size_t dim = x0.size();
    if (dim == 0) {
        throw std::invalid_argument("nelder_mead: empty starting point");
    }
    if (lo.size() != dim || hi.size() != dim) {
        throw std::invalid_argument("nelder_mead: bounds do not match dimension");
    }
    for (size_t i = 0; i < dim; ++i) {
        if (!(lo[i] < hi[i])) {
            throw std::invalid_argument("nelder_mead: lower bound must be below upper bound");
        }
    }
    if (max_evaluations < 1) {
        throw std::invalid_argument("nelder_mead: evaluation budget must be positive");
    }

    MinimizeResult res;
    auto evaluate = [&](const std::vector<double> &x) {
        double v = f(x);
        if (!std::isfinite(v)) {
            std::string where;
            for (double xi : x) {
                where += (where.empty() ? "" : ",") + std::to_string(xi);
            }
            throw std::runtime_error("nelder_mead: objective returned a non-finite value at (" +
                                     where + ")");
        }
        ++res.evaluations;
        res.trace.push_back({x, v, res.evaluations});
        if (res.trace.size() == 1 || v < res.best_value) {
            res.best_value = v;
            res.best_x = x;
        }
        return v;
    };
    auto budget_left = [&]() { return res.evaluations < max_evaluations; };

    // Initial simplex: the start plus one step along each axis, reflected
    // inward when the step would leave the box.
    std::vector<SimplexPoint> pts;
    pts.push_back({clamp_to_box(x0, lo, hi), 0.0});
    pts[0].value = evaluate(pts[0].x);
    for (size_t i = 0; i < dim && budget_left(); ++i) {
        std::vector<double> x = pts[0].x;
        double step = initial_step * (hi[i] - lo[i]);
        if (x[i] + step > hi[i]) {
            step = -step;
        }
        x[i] += step;
        x = clamp_to_box(std::move(x), lo, hi);
        pts.push_back({x, evaluate(x)});
    }
    if (pts.size() < dim + 1) {
        return res;  // budget exhausted while building the simplex
    }

    constexpr double kReflect = 1.0;
    constexpr double kExpand = 2.0;
    constexpr double kContract = 0.5;
    constexpr double kShrink = 0.5;
    constexpr double kCollapse = 1e-12;

    while (budget_left()) {
        std::stable_sort(pts.begin(), pts.end(),
                         [](const SimplexPoint &a, const SimplexPoint &b) {
                             return a.value < b.value;
                         });
        if (simplex_diameter(pts) < kCollapse) {
            res.converged = true;
            break;
        }
        std::vector<double> centroid(dim, 0.0);
        for (size_t i = 0; i < dim; ++i) {
            for (size_t k = 0; k < dim; ++k) {
                centroid[k] += pts[i].x[k] / (double)dim;
            }
        }
        SimplexPoint &worst = pts[dim];
        auto make = [&](double coeff, const std::vector<double> &towards) {
            std::vector<double> x(dim);
            for (size_t k = 0; k < dim; ++k) {
                x[k] = centroid[k] + coeff * (towards[k] - centroid[k]);
            }
            return clamp_to_box(std::move(x), lo, hi);
        };

        auto xr = make(-kReflect, worst.x);
        double fr = evaluate(xr);
        if (fr < pts[0].value) {
            if (!budget_left()) {
                worst = {xr, fr};
                continue;
            }
            auto xe = make(-kReflect * kExpand, worst.x);
            double fe = evaluate(xe);
            worst = fe < fr ? SimplexPoint{xe, fe} : SimplexPoint{xr, fr};
            continue;
        }
        if (fr < pts[dim - 1].value) {
            worst = {xr, fr};
            continue;
        }
        if (!budget_left()) {
            break;
        }
        bool outside = fr < worst.value;
        auto xc = outside ? make(kContract, xr) : make(kContract, worst.x);
        double fc = evaluate(xc);
        if (fc < std::min(fr, worst.value)) {
            worst = {xc, fc};
            continue;
        }
        // Shrink everything toward the best vertex.
        for (size_t i = 1; i <= dim && budget_left(); ++i) {
            std::vector<double> x(dim);
            for (size_t k = 0; k < dim; ++k) {
                x[k] = pts[0].x[k] + kShrink * (pts[i].x[k] - pts[0].x[k]);
            }
            x = clamp_to_box(std::move(x), lo, hi);
            pts[i] = {x, evaluate(x)};
        }
    }
    return res;
}

std::vector<double> angle_lower_bounds(int rounds) {
    return std::vector<double>(2 * (size_t)rounds, 0.0);
}

std::vector<double> angle_upper_bounds(int rounds) {
    std::vector<double> hi(2 * (size_t)rounds, std::numbers::pi);
    for (int r = 0; r < rounds; ++r) {
        hi[(size_t)rounds + r] = 2.0 * std::numbers::pi;
    }
    return hi;
}

AngleMode angle_mode_from_string(const std::string &name) {
    if (name == "default") {
        return AngleMode::kDefault;
    }
    if (name == "random") {
        return AngleMode::kRandom;
    }
    if (name == "fixed") {
        return AngleMode::kFixed;
    }
    throw std::invalid_argument("unknown angle mode '" + name +
                                "' (expected default, random or fixed)");
}

std::string to_string(AngleMode mode) {
    switch (mode) {
        case AngleMode::kDefault:
            return "default";
        case AngleMode::kRandom:
            return "random";
        default:
            return "fixed";
    }
}

FixedAngleTable FixedAngleTable::load(const std::filesystem::path &file) {
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error("FixedAngleTable: cannot open " + file.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw std::runtime_error("FixedAngleTable: " + file.string() +
                                 " is not valid JSON: " + e.what());
    }
    if (!j.contains("entries") || !j["entries"].is_array()) {
        throw std::runtime_error("FixedAngleTable: " + file.string() +
                                 ": field 'entries': missing or not an array");
    }
    FixedAngleTable t;
    for (auto &e : j["entries"]) {
        auto fail = [&](const std::string &field, const std::string &why) {
            throw std::runtime_error("FixedAngleTable: " + file.string() + ": field '" +
                                     field + "': " + why);
        };
        if (!e.contains("rounds") || !e["rounds"].is_number_integer()) {
            fail("rounds", "missing or not an integer");
        }
        int rounds = e["rounds"].get<int>();
        if (rounds < 1) {
            fail("rounds", "must be at least 1");
        }
        FixedAngleEntry entry;
        for (const char *field : {"betas", "gammas"}) {
            if (!e.contains(field) || !e[field].is_array()) {
                fail(field, "missing or not an array");
            }
            auto &dst = field[0] == 'b' ? entry.betas : entry.gammas;
            for (auto &v : e[field]) {
                if (!v.is_number()) {
                    fail(field, "entries must be numbers");
                }
                dst.push_back(v.get<double>());
            }
            if ((int)dst.size() != rounds) {
                fail(field, "length must equal rounds");
            }
        }
        if (e.contains("source") && e["source"].is_string()) {
            entry.source = e["source"].get<std::string>();
        }
        if (!t.by_rounds.emplace(rounds, std::move(entry)).second) {
            fail("rounds", "duplicate entry for " + std::to_string(rounds));
        }
    }
    return t;
}

AnsatzParams initial_angles(int rounds, AngleMode mode, uint64_t seed,
                            const FixedAngleTable *table) {
    if (rounds < 1) {
        throw std::invalid_argument("initial_angles: rounds must be at least 1");
    }
    AnsatzParams p;
    switch (mode) {
        case AngleMode::kDefault:
            p.betas.assign(rounds, 1.0);
            p.gammas.assign(rounds, 1.0);
            break;
        case AngleMode::kRandom: {
            Rng rng = make_rng(derive_seed(seed, {tag("angles")}));
            for (int r = 0; r < rounds; ++r) {
                p.betas.push_back(uniform01(rng) * std::numbers::pi);
            }
            for (int r = 0; r < rounds; ++r) {
                p.gammas.push_back(uniform01(rng) * 2.0 * std::numbers::pi);
            }
            break;
        }
        case AngleMode::kFixed: {
            if (table == nullptr) {
                throw std::invalid_argument("initial_angles: fixed mode needs an angle table");
            }
            auto it = table->by_rounds.find(rounds);
            if (it == table->by_rounds.end()) {
                throw std::invalid_argument("initial_angles: angle table has no entry for " +
                                            std::to_string(rounds) + " rounds");
            }
            p.betas = it->second.betas;
            p.gammas = it->second.gammas;
            break;
        }
    }
    return p;
}

}  // namespace qopt
