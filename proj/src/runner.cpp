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

#include "qopt/runner.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "qopt/annealer.hpp"
#include "qopt/bits.hpp"
#include "qopt/graph.hpp"
#include "qopt/hamiltonian.hpp"
#include "qopt/metrics.hpp"
#include "qopt/optimizer.hpp"
#include "qopt/qaoa.hpp"
#include "qopt/records.hpp"
#include "qopt/rng.hpp"

namespace qopt {

nlohmann::json BenchmarkConfig::to_json() const {
    nlohmann::json j;
    j["solver"] = solver;
    j["method"] = method;
    j["sizes"] = sizes;
    j["shots"] = shots_list;
    j["rounds"] = rounds_list;
    j["max_iterations"] = max_iterations;
    j["restarts"] = restarts;
    j["objective"] = objective;
    j["angles"] = angle_mode;
    j["fixed_angle_file"] = fixed_angle_file;
    j["cvar_alpha"] = cvar_alpha;
    j["gibbs_eta"] = gibbs_eta;
    j["noise_p1"] = noise_p1;
    j["noise_p2"] = noise_p2;
    j["anneal_min_us"] = anneal_min_us;
    j["anneal_max_us"] = anneal_max_us;
    j["anneal_factor"] = anneal_factor;
    j["anneal_time_scale"] = anneal_time_scale;
    j["anneal_dt"] = anneal_dt;
    j["profile"] = profile;
    j["seed"] = seed;
    j["qubit_limit"] = qubit_limit;
    j["exhaustion_limit"] = exhaustion_limit;
    j["jobs"] = jobs;
    return j;
}

BenchmarkConfig BenchmarkConfig::from_json(const nlohmann::json &j) {
    BenchmarkConfig c;
    for (auto &[key, value] : j.items()) {
        try {
            if (key == "solver") {
                c.solver = value.get<std::string>();
            } else if (key == "method") {
                c.method = value.get<int>();
            } else if (key == "sizes") {
                c.sizes = value.get<std::vector<int>>();
            } else if (key == "shots") {
                c.shots_list = value.get<std::vector<uint64_t>>();
            } else if (key == "rounds") {
                c.rounds_list = value.get<std::vector<int>>();
            } else if (key == "max_iterations") {
                c.max_iterations = value.get<int>();
            } else if (key == "restarts") {
                c.restarts = value.get<int>();
            } else if (key == "objective") {
                c.objective = value.get<std::string>();
            } else if (key == "angles") {
                c.angle_mode = value.get<std::string>();
            } else if (key == "fixed_angle_file") {
                c.fixed_angle_file = value.get<std::string>();
            } else if (key == "cvar_alpha") {
                c.cvar_alpha = value.get<double>();
            } else if (key == "gibbs_eta") {
                c.gibbs_eta = value.get<double>();
            } else if (key == "noise_p1") {
                c.noise_p1 = value.get<double>();
            } else if (key == "noise_p2") {
                c.noise_p2 = value.get<double>();
            } else if (key == "anneal_min_us") {
                c.anneal_min_us = value.get<double>();
            } else if (key == "anneal_max_us") {
                c.anneal_max_us = value.get<double>();
            } else if (key == "anneal_factor") {
                c.anneal_factor = value.get<double>();
            } else if (key == "anneal_time_scale") {
                c.anneal_time_scale = value.get<double>();
            } else if (key == "anneal_dt") {
                c.anneal_dt = value.get<double>();
            } else if (key == "profile") {
                c.profile = value.get<std::string>();
            } else if (key == "seed") {
                c.seed = value.get<uint64_t>();
            } else if (key == "qubit_limit") {
                c.qubit_limit = value.get<int>();
            } else if (key == "exhaustion_limit") {
                c.exhaustion_limit = value.get<int>();
            } else if (key == "jobs") {
                c.jobs = value.get<int>();
            } else {
                throw std::invalid_argument("config: unknown key '" + key + "'");
            }
        } catch (const nlohmann::json::exception &e) {
            throw std::invalid_argument("config: key '" + key + "': " + e.what());
        }
    }
    return c;
}

void BenchmarkConfig::validate() const {
    if (solver != "qaoa" && solver != "qa") {
        throw std::invalid_argument("config: solver must be 'qaoa' or 'qa'");
    }
    if (method != 1 && method != 2) {
        throw std::invalid_argument("config: method must be 1 or 2");
    }
    if (sizes.empty()) {
        throw std::invalid_argument("config: sizes must not be empty");
    }
    for (int n : sizes) {
        if (n < 4 || n % 2 != 0 || n > 320) {
            throw std::invalid_argument(
                "config: sizes must be even, between 4 and 320");
        }
    }
    if (shots_list.empty()) {
        throw std::invalid_argument("config: shots must not be empty");
    }
    for (uint64_t s : shots_list) {
        if (s < 1 || s > 100000000ULL) {
            throw std::invalid_argument("config: shots must be in 1..1e8");
        }
    }
    if (rounds_list.empty()) {
        throw std::invalid_argument("config: rounds must not be empty");
    }
    for (int p : rounds_list) {
        if (p < 1 || p > 64) {
            throw std::invalid_argument("config: rounds must be in 1..64");
        }
    }
    if (method == 2 && (rounds_list.size() != 1 || shots_list.size() != 1)) {
        throw std::invalid_argument(
            "config: method 2 takes a single rounds value and a single shots value");
    }
    if (max_iterations < 1 || max_iterations > 100000) {
        throw std::invalid_argument("config: max_iterations must be in 1..100000");
    }
    if (restarts < 1 || restarts > 1000) {
        throw std::invalid_argument("config: restarts must be in 1..1000");
    }
    if (objective != "ar" && objective != "cvar" && objective != "gibbs" &&
        objective != "best") {
        throw std::invalid_argument(
            "config: objective must be one of ar, cvar, gibbs, best");
    }
    angle_mode_from_string(angle_mode);
    if (angle_mode == "fixed" && fixed_angle_file.empty()) {
        throw std::invalid_argument("config: fixed angle mode needs fixed_angle_file");
    }
    if (!(cvar_alpha > 0.0) || cvar_alpha > 1.0) {
        throw std::invalid_argument("config: cvar_alpha must be in (0, 1]");
    }
    if (!(gibbs_eta > 0.0)) {
        throw std::invalid_argument("config: gibbs_eta must be positive");
    }
    if (noise_p1 < 0 || noise_p1 > 1 || noise_p2 < 0 || noise_p2 > 1) {
        throw std::invalid_argument("config: noise probabilities must be in [0, 1]");
    }
    if (!(anneal_min_us > 0) || anneal_max_us < anneal_min_us) {
        throw std::invalid_argument("config: need 0 < anneal_min_us <= anneal_max_us");
    }
    if (anneal_max_us > anneal_min_us && !(anneal_factor > 1.0)) {
        throw std::invalid_argument("config: anneal_factor must exceed 1");
    }
    if (!(anneal_time_scale > 0)) {
        throw std::invalid_argument("config: anneal_time_scale must be positive");
    }
    if (anneal_dt < 0) {
        throw std::invalid_argument("config: anneal_dt must be non-negative");
    }
    if (qubit_limit < 2 || qubit_limit > 26) {
        throw std::invalid_argument("config: qubit_limit must be in 2..26");
    }
    if (exhaustion_limit < 2 || exhaustion_limit > 30) {
        throw std::invalid_argument("config: exhaustion_limit must be in 2..30");
    }
    if (jobs < 0) {
        throw std::invalid_argument("config: jobs must be non-negative");
    }
}

std::vector<int> parse_size_list(const std::string &text) {
    std::vector<int> sizes;
    auto parse_int = [&](const std::string &s) {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) {
            throw std::invalid_argument("size list: '" + s + "' is not an integer");
        }
        return v;
    };
    try {
        auto range_pos = text.find("..");
        if (range_pos != std::string::npos) {
            auto step_pos = text.find(':', range_pos);
            int start = parse_int(text.substr(0, range_pos));
            int stop = step_pos == std::string::npos
                           ? parse_int(text.substr(range_pos + 2))
                           : parse_int(text.substr(range_pos + 2, step_pos - range_pos - 2));
            int step = step_pos == std::string::npos
                           ? 2
                           : parse_int(text.substr(step_pos + 1));
            if (step < 1 || stop < start) {
                throw std::invalid_argument("size list: bad range '" + text + "'");
            }
            for (int n = start; n <= stop; n += step) {
                sizes.push_back(n);
            }
        } else {
            size_t pos = 0;
            while (pos < text.size()) {
                auto comma = text.find(',', pos);
                auto chunk = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                         : comma - pos);
                sizes.push_back(parse_int(chunk));
                pos = comma == std::string::npos ? text.size() : comma + 1;
            }
        }
    } catch (const std::logic_error &) {
        throw std::invalid_argument("size list: cannot parse '" + text +
                                    "' (expected e.g. 8, 4,6,8 or 4..16:2)");
    }
    if (sizes.empty()) {
        throw std::invalid_argument("size list: empty");
    }
    return sizes;
}

void parse_anneal_range(const std::string &text, double &min_us, double &max_us,
                        double &factor) {
    auto parse_double = [&](const std::string &s) {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) {
            throw std::invalid_argument("anneal range: '" + s + "' is not a number");
        }
        return v;
    };
    try {
        auto range_pos = text.find("..");
        if (range_pos == std::string::npos) {
            min_us = max_us = parse_double(text);
            factor = 2.0;
            return;
        }
        auto factor_pos = text.find('x', range_pos);
        min_us = parse_double(text.substr(0, range_pos));
        max_us = factor_pos == std::string::npos
                     ? parse_double(text.substr(range_pos + 2))
                     : parse_double(text.substr(range_pos + 2, factor_pos - range_pos - 2));
        factor = factor_pos == std::string::npos
                     ? 2.0
                     : parse_double(text.substr(factor_pos + 1));
    } catch (const std::logic_error &) {
        throw std::invalid_argument("anneal range: cannot parse '" + text +
                                    "' (expected e.g. 100 or 1..256x2)");
    }
}

std::vector<double> anneal_time_points(double min_us, double max_us, double factor) {
    if (!(min_us > 0) || max_us < min_us) {
        throw std::invalid_argument("anneal range: need 0 < min <= max");
    }
    std::vector<double> points;
    if (max_us == min_us) {
        points.push_back(min_us);
        return points;
    }
    if (!(factor > 1.0)) {
        throw std::invalid_argument("anneal range: factor must exceed 1");
    }
    for (double a = min_us; a <= max_us * (1.0 + 1e-9); a *= factor) {
        points.push_back(a);
    }
    return points;
}

namespace {

double ratio_for(const std::string &objective, const QualityRecord &q) {
    if (objective == "ar") {
        return q.approximation_ratio;
    }
    if (objective == "cvar") {
        return q.cvar_ratio;
    }
    if (objective == "gibbs") {
        return q.gibbs_ratio;
    }
    return q.best_measurement_ratio;
}

DeviceProfile resolve_profile(const BenchmarkConfig &cfg) {
    std::string name = cfg.profile;
    if (name.empty() || name == "auto") {
        name = cfg.solver == "qa" ? "zero-annealer" : "zero";
    }
    DeviceProfile p;
    bool looks_like_path = name.find('/') != std::string::npos ||
                           (name.size() > 5 && name.substr(name.size() - 5) == ".json");
    if (looks_like_path) {
        p = load_profile(name);
    } else {
        p = builtin_profile(name);
    }
    Paradigm want = cfg.solver == "qa" ? Paradigm::kAnnealing : Paradigm::kGateModel;
    if (p.paradigm != want) {
        throw std::invalid_argument("config: profile '" + p.name +
                                    "' does not match the solver's paradigm");
    }
    return p;
}

// Best-known cut for instances too wide for exhaustive search: the best
// result of a deterministic simulated-annealing probe. Records using it are
// marked optimal_exact = false.
int reference_cut(const GraphInstance &g, uint64_t inst_seed) {
    SampleSet probe = classical_proxy_sample(
        g, 50.0, 64, derive_seed(inst_seed, {tag("refcut")}));
    int best = 1;
    for (auto &[bits, count] : probe.counts) {
        best = std::max(best, cut_size(g, bits));
    }
    return best;
}

std::map<int, uint64_t> histogram_by_cut(
    const SampleSet &samples, const std::function<int(const std::string &)> &cut_of) {
    std::map<int, uint64_t> h;
    for (auto &[bits, count] : samples.counts) {
        h[cut_of(bits)] += count;
    }
    return h;
}

void accumulate(TimingBreakdown &cum, TimingBreakdown &t) {
    cum.cumulative_device_seconds += t.device_seconds;
    cum.cumulative_elapsed_seconds += t.elapsed_seconds;
    cum.cumulative_classical_seconds += t.classical_seconds;
    t.cumulative_device_seconds = cum.cumulative_device_seconds;
    t.cumulative_elapsed_seconds = cum.cumulative_elapsed_seconds;
    t.cumulative_classical_seconds = cum.cumulative_classical_seconds;
}

TimingBreakdown totals_of(const TimingBreakdown &cum) {
    TimingBreakdown t;
    t.device_seconds = cum.cumulative_device_seconds;
    t.elapsed_seconds = cum.cumulative_elapsed_seconds;
    t.classical_seconds = cum.cumulative_classical_seconds;
    t.cumulative_device_seconds = cum.cumulative_device_seconds;
    t.cumulative_elapsed_seconds = cum.cumulative_elapsed_seconds;
    t.cumulative_classical_seconds = cum.cumulative_classical_seconds;
    return t;
}

struct SizeSetup {
    GraphInstance graph;
    int optimal_cut = 0;
    bool optimal_exact = true;
};

// Generates the instance for one size and finds its optimum. Returns false
// (after writing an error record) if the size has to be skipped.
bool prepare_size(RunWriter &w, const BenchmarkConfig &cfg, const std::string &solver,
                  int n, SizeSetup &setup) {
    BenchRecord rec;
    rec.solver = solver;
    rec.method = cfg.method;
    rec.size = n;
    uint64_t inst_seed = derive_seed(cfg.seed, {tag("inst"), (uint64_t)n});
    try {
        setup.graph = generate_3_regular(n, inst_seed);
        if (n <= cfg.exhaustion_limit) {
            setup.optimal_cut = exact_max_cut(setup.graph, cfg.exhaustion_limit).cut_size;
            setup.optimal_exact = true;
        } else {
            setup.optimal_cut = reference_cut(setup.graph, inst_seed);
            setup.optimal_exact = false;
        }
    } catch (const std::exception &e) {
        rec.type = "error";
        rec.message = e.what();
        w.write(rec);
        return false;
    }
    rec.type = "instance";
    rec.instance_seed = inst_seed;
    rec.num_edges = setup.graph.num_edges();
    rec.optimal_cut = setup.optimal_cut;
    rec.optimal_exact = setup.optimal_exact;
    w.write(rec);
    return true;
}

void write_skip(RunWriter &w, const BenchmarkConfig &cfg, const std::string &solver,
                int n, const std::string &why) {
    BenchRecord rec;
    rec.type = "error";
    rec.solver = solver;
    rec.method = cfg.method;
    rec.size = n;
    rec.message = why;
    w.write(rec);
}

void run_qaoa_method2(RunWriter &w, const BenchmarkConfig &cfg,
                      const DeviceProfile &profile) {
    FixedAngleTable fixed_storage;
    const FixedAngleTable *fixed = nullptr;
    AngleMode mode = angle_mode_from_string(cfg.angle_mode);
    if (mode == AngleMode::kFixed) {
        fixed_storage = FixedAngleTable::load(cfg.fixed_angle_file);
        fixed = &fixed_storage;
    }
    const int rounds = cfg.rounds_list.front();
    const uint64_t shots = cfg.shots_list.front();
    const NoiseModel noise{cfg.noise_p1, cfg.noise_p2};

    for (int n : cfg.sizes) {
        SizeSetup setup;
        if (!prepare_size(w, cfg, "qaoa", n, setup)) {
            continue;
        }
        if (n > cfg.qubit_limit) {
            write_skip(w, cfg, "qaoa", n,
                       "instance exceeds the statevector limit of " +
                           std::to_string(cfg.qubit_limit) + " qubits");
            continue;
        }
        DiagonalCostTable costs = diagonal_cost_table(setup.graph, cfg.qubit_limit);
        auto cut_of = [&costs](const std::string &bits) {
            return (int)costs.cut_sizes[bits_to_index(bits)];
        };

        double group_best_value = -1.0;
        int group_best_restart = -1;
        QualityRecord group_best_quality;
        std::vector<double> group_best_betas, group_best_gammas;
        double group_best_measurement = 0.0;
        TimingBreakdown group_cum;

        for (int restart = 0; restart < cfg.restarts; ++restart) {
            AngleMode restart_mode = mode;
            if (mode == AngleMode::kDefault && restart > 0) {
                restart_mode = AngleMode::kRandom;
            }
            AnsatzParams init = initial_angles(
                rounds, restart_mode,
                derive_seed(cfg.seed, {tag("init"), (uint64_t)n, (uint64_t)restart}),
                fixed);

            TimingBreakdown cum;
            int eval_count = 0;
            double best_value = -1.0;
            QualityRecord best_quality;
            std::vector<double> best_betas, best_gammas;

            auto objective = [&](const std::vector<double> &x) {
                AnsatzParams params = AnsatzParams::from_flat(x);
                ++eval_count;
                uint64_t sample_seed = derive_seed(
                    cfg.seed,
                    {tag("smp"), (uint64_t)n, (uint64_t)restart, (uint64_t)eval_count});
                BenchRecord rec;
                rec.type = "iteration";
                rec.solver = "qaoa";
                rec.method = 2;
                rec.size = n;
                rec.restart = restart;
                rec.iteration = eval_count;
                rec.rounds = rounds;
                rec.shots = shots;
                rec.betas = params.betas;
                rec.gammas = params.gammas;
                SampleSet samples;
                if (noise.enabled()) {
                    rec.engine = "trajectory";
                    samples = noisy_sample(setup.graph, params, shots, noise,
                                           sample_seed, cfg.qubit_limit);
                } else {
                    rec.engine = "statevector";
                    samples = sample(evolve_ansatz(costs, params), shots, sample_seed);
                }
                QualityRecord q = quality_record(samples, cut_of, setup.optimal_cut,
                                                 cfg.cvar_alpha, cfg.gibbs_eta);
                TimingBreakdown t = gate_model_timing(profile, shots);
                accumulate(cum, t);
                rec.objective = cfg.objective;
                rec.objective_value = ratio_for(cfg.objective, q);
                rec.has_quality = true;
                rec.quality = q;
                rec.optimal_cut = setup.optimal_cut;
                rec.optimal_exact = setup.optimal_exact;
                rec.timing = t;
                rec.cut_histogram = histogram_by_cut(samples, cut_of);
                rec.sample_seed = sample_seed;
                w.write(rec);
                if (rec.objective_value > best_value) {
                    best_value = rec.objective_value;
                    best_quality = q;
                    best_betas = params.betas;
                    best_gammas = params.gammas;
                }
                group_best_measurement =
                    std::max(group_best_measurement, q.best_measurement_ratio);
                return -rec.objective_value;
            };
            MinimizeResult res =
                nelder_mead(objective, init.flat(), angle_lower_bounds(rounds),
                            angle_upper_bounds(rounds), cfg.max_iterations);

            BenchRecord rrec;
            rrec.type = "restart";
            rrec.solver = "qaoa";
            rrec.method = 2;
            rrec.size = n;
            rrec.restart = restart;
            rrec.rounds = rounds;
            rrec.shots = shots;
            rrec.betas = best_betas;
            rrec.gammas = best_gammas;
            rrec.objective = cfg.objective;
            rrec.objective_value = best_value;
            rrec.has_quality = true;
            rrec.quality = best_quality;
            rrec.optimal_cut = setup.optimal_cut;
            rrec.optimal_exact = setup.optimal_exact;
            rrec.timing = totals_of(cum);
            rrec.evaluations = res.evaluations;
            w.write(rrec);

            group_cum.cumulative_device_seconds += cum.cumulative_device_seconds;
            group_cum.cumulative_elapsed_seconds += cum.cumulative_elapsed_seconds;
            group_cum.cumulative_classical_seconds += cum.cumulative_classical_seconds;
            if (best_value > group_best_value) {
                group_best_value = best_value;
                group_best_restart = restart;
                group_best_quality = best_quality;
                group_best_betas = best_betas;
                group_best_gammas = best_gammas;
            }
        }

        BenchRecord grec;
        grec.type = "group";
        grec.solver = "qaoa";
        grec.method = 2;
        grec.size = n;
        grec.rounds = rounds;
        grec.shots = shots;
        grec.betas = group_best_betas;
        grec.gammas = group_best_gammas;
        grec.objective = cfg.objective;
        grec.objective_value = group_best_value;
        grec.has_quality = true;
        grec.quality = group_best_quality;
        // The group's best-measurement ratio covers every shot of every
        // restart, not just the winning iteration.
        grec.quality.best_measurement_ratio = group_best_measurement;
        grec.optimal_cut = setup.optimal_cut;
        grec.optimal_exact = setup.optimal_exact;
        grec.timing = totals_of(group_cum);
        grec.best_restart = group_best_restart;
        w.write(grec);
    }
}

void run_qaoa_method1(RunWriter &w, const BenchmarkConfig &cfg,
                      const DeviceProfile &profile) {
    FixedAngleTable fixed_storage;
    const FixedAngleTable *fixed = nullptr;
    AngleMode mode = angle_mode_from_string(cfg.angle_mode);
    if (mode == AngleMode::kFixed) {
        fixed_storage = FixedAngleTable::load(cfg.fixed_angle_file);
        fixed = &fixed_storage;
    }
    const NoiseModel noise{cfg.noise_p1, cfg.noise_p2};

    for (int n : cfg.sizes) {
        SizeSetup setup;
        if (!prepare_size(w, cfg, "qaoa", n, setup)) {
            continue;
        }
        if (n > cfg.qubit_limit) {
            write_skip(w, cfg, "qaoa", n,
                       "instance exceeds the statevector limit of " +
                           std::to_string(cfg.qubit_limit) + " qubits");
            continue;
        }
        DiagonalCostTable costs = diagonal_cost_table(setup.graph, cfg.qubit_limit);
        auto cut_of = [&costs](const std::string &bits) {
            return (int)costs.cut_sizes[bits_to_index(bits)];
        };

        double group_best_value = -1.0;
        QualityRecord group_best_quality;
        double group_best_measurement = 0.0;
        TimingBreakdown group_cum;

        for (int rounds : cfg.rounds_list) {
            AnsatzParams params = initial_angles(
                rounds, mode,
                derive_seed(cfg.seed, {tag("init"), (uint64_t)n, (uint64_t)rounds}),
                fixed);
            Statevector sv = evolve_ansatz(costs, params);
            std::vector<double> ideal = sv.probabilities();
            CircuitResources resources = circuit_resources(setup.graph, rounds);

            for (uint64_t shots : cfg.shots_list) {
                for (int rep = 0; rep < cfg.restarts; ++rep) {
                    uint64_t sample_seed =
                        derive_seed(cfg.seed, {tag("m1"), (uint64_t)n, (uint64_t)rounds,
                                               shots, (uint64_t)rep});
                    BenchRecord rec;
                    rec.type = "iteration";
                    rec.solver = "qaoa";
                    rec.method = 1;
                    rec.size = n;
                    rec.restart = rep;
                    rec.iteration = rep + 1;
                    rec.rounds = rounds;
                    rec.shots = shots;
                    rec.betas = params.betas;
                    rec.gammas = params.gammas;
                    SampleSet samples;
                    if (noise.enabled()) {
                        rec.engine = "trajectory";
                        samples = noisy_sample(setup.graph, params, shots, noise,
                                               sample_seed, cfg.qubit_limit);
                    } else {
                        rec.engine = "statevector";
                        samples = sample_counts(sv, shots, sample_seed);
                    }
                    QualityRecord q = quality_record(samples, cut_of, setup.optimal_cut,
                                                     cfg.cvar_alpha, cfg.gibbs_eta);
                    HellingerFidelity fid = hellinger_fidelities(samples, ideal);
                    TimingBreakdown t = gate_model_timing(profile, shots);
                    accumulate(group_cum, t);
                    rec.objective = cfg.objective;
                    rec.objective_value = ratio_for(cfg.objective, q);
                    rec.has_quality = true;
                    rec.quality = q;
                    rec.optimal_cut = setup.optimal_cut;
                    rec.optimal_exact = setup.optimal_exact;
                    rec.timing = t;
                    rec.cut_histogram = histogram_by_cut(samples, cut_of);
                    rec.sample_seed = sample_seed;
                    rec.raw_fidelity = fid.raw;
                    rec.normalized_fidelity = fid.normalized;
                    rec.has_resources = true;
                    rec.resources = resources;
                    w.write(rec);
                    if (rec.objective_value > group_best_value) {
                        group_best_value = rec.objective_value;
                        group_best_quality = q;
                    }
                    group_best_measurement =
                        std::max(group_best_measurement, q.best_measurement_ratio);
                }
            }
        }

        BenchRecord grec;
        grec.type = "group";
        grec.solver = "qaoa";
        grec.method = 1;
        grec.size = n;
        grec.objective = cfg.objective;
        grec.objective_value = group_best_value;
        grec.has_quality = true;
        grec.quality = group_best_quality;
        grec.quality.best_measurement_ratio = group_best_measurement;
        grec.optimal_cut = setup.optimal_cut;
        grec.optimal_exact = setup.optimal_exact;
        grec.timing = totals_of(group_cum);
        w.write(grec);
    }
}

void run_qa(RunWriter &w, const BenchmarkConfig &cfg, const DeviceProfile &profile) {
    std::vector<double> times =
        cfg.method == 1 ? std::vector<double>{cfg.anneal_max_us}
                        : anneal_time_points(cfg.anneal_min_us, cfg.anneal_max_us,
                                             cfg.anneal_factor);
    const uint64_t reads = cfg.shots_list.front();

    for (int n : cfg.sizes) {
        SizeSetup setup;
        if (!prepare_size(w, cfg, "qa", n, setup)) {
            continue;
        }
        const bool use_statevector = n <= cfg.qubit_limit;
        auto cut_of = [&setup](const std::string &bits) {
            return cut_size(setup.graph, bits);
        };

        double group_best_value = -1.0;
        int group_best_restart = -1;
        QualityRecord group_best_quality;
        double group_best_measurement = 0.0;
        TimingBreakdown group_cum;

        for (int restart = 0; restart < cfg.restarts; ++restart) {
            TimingBreakdown cum;
            double final_value = 0.0;
            QualityRecord final_quality;

            for (size_t idx = 0; idx < times.size(); ++idx) {
                const double anneal_us = times[idx];
                uint64_t sample_seed = derive_seed(
                    cfg.seed, {tag("qa"), (uint64_t)n, (uint64_t)restart, (uint64_t)idx});
                BenchRecord rec;
                rec.type = "iteration";
                rec.solver = "qa";
                rec.method = cfg.method;
                rec.size = n;
                rec.restart = restart;
                rec.iteration = (int)idx + 1;
                rec.shots = reads;
                rec.anneal_time_us = anneal_us;
                SampleSet samples;
                if (use_statevector) {
                    rec.engine = "statevector";
                    AnnealSchedule schedule;
                    schedule.anneal_time_us = anneal_us;
                    schedule.time_scale = cfg.anneal_time_scale;
                    samples = anneal_and_sample(setup.graph, schedule, reads,
                                                sample_seed, cfg.anneal_dt,
                                                cfg.qubit_limit);
                } else {
                    rec.engine = "proxy";
                    samples =
                        classical_proxy_sample(setup.graph, anneal_us, reads, sample_seed);
                }
                QualityRecord q = quality_record(samples, cut_of, setup.optimal_cut,
                                                 cfg.cvar_alpha, cfg.gibbs_eta);
                TimingBreakdown t = annealing_timing(profile, reads, anneal_us);
                accumulate(cum, t);
                rec.objective = cfg.objective;
                rec.objective_value = ratio_for(cfg.objective, q);
                rec.has_quality = true;
                rec.quality = q;
                rec.optimal_cut = setup.optimal_cut;
                rec.optimal_exact = setup.optimal_exact;
                rec.timing = t;
                rec.cut_histogram = histogram_by_cut(samples, cut_of);
                rec.sample_seed = sample_seed;
                w.write(rec);
                final_value = rec.objective_value;
                final_quality = q;
                group_best_measurement =
                    std::max(group_best_measurement, q.best_measurement_ratio);
            }

            BenchRecord rrec;
            rrec.type = "restart";
            rrec.solver = "qa";
            rrec.method = cfg.method;
            rrec.size = n;
            rrec.restart = restart;
            rrec.shots = reads;
            rrec.anneal_time_us = times.back();
            rrec.objective = cfg.objective;
            rrec.objective_value = final_value;
            rrec.has_quality = true;
            rrec.quality = final_quality;
            rrec.optimal_cut = setup.optimal_cut;
            rrec.optimal_exact = setup.optimal_exact;
            rrec.timing = totals_of(cum);
            rrec.evaluations = (int)times.size();
            w.write(rrec);

            group_cum.cumulative_device_seconds += cum.cumulative_device_seconds;
            group_cum.cumulative_elapsed_seconds += cum.cumulative_elapsed_seconds;
            group_cum.cumulative_classical_seconds += cum.cumulative_classical_seconds;
            if (final_value > group_best_value) {
                group_best_value = final_value;
                group_best_restart = restart;
                group_best_quality = final_quality;
            }
        }

        BenchRecord grec;
        grec.type = "group";
        grec.solver = "qa";
        grec.method = cfg.method;
        grec.size = n;
        grec.shots = reads;
        grec.anneal_time_us = times.back();
        grec.objective = cfg.objective;
        grec.objective_value = group_best_value;
        grec.has_quality = true;
        grec.quality = group_best_quality;
        grec.quality.best_measurement_ratio = group_best_measurement;
        grec.optimal_cut = setup.optimal_cut;
        grec.optimal_exact = setup.optimal_exact;
        grec.timing = totals_of(group_cum);
        grec.best_restart = group_best_restart;
        w.write(grec);
    }
}

}  // namespace

void run_benchmark(const BenchmarkConfig &config, const std::filesystem::path &out_dir) {
    config.validate();
    if (config.jobs > 0) {
        omp_set_num_threads(config.jobs);
    }
    DeviceProfile profile = resolve_profile(config);
    RunWriter writer(out_dir, config.to_json());
    auto t0 = std::chrono::steady_clock::now();
    if (config.solver == "qaoa" && config.method == 2) {
        run_qaoa_method2(writer, config, profile);
    } else if (config.solver == "qaoa") {
        run_qaoa_method1(writer, config, profile);
    } else {
        run_qa(writer, config, profile);
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    writer.write_wallclock("run", seconds);
    writer.finish();
}

void generate_instances(const std::vector<int> &sizes, uint64_t seed,
                        const std::filesystem::path &out_dir, int exhaustion_limit) {
    std::filesystem::create_directories(out_dir);
    for (int n : sizes) {
        GraphInstance g =
            generate_3_regular(n, derive_seed(seed, {tag("inst"), (uint64_t)n}));
        if (n <= exhaustion_limit) {
            exact_max_cut(g, exhaustion_limit);
        }
        store_instance(g, out_dir / ("instance_n" + std::to_string(n) + ".json"));
    }
}

}  // namespace qopt
