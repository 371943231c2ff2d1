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

#include "qopt/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qopt/metrics.hpp"
#include "qopt/records.hpp"
#include "qopt/report.hpp"
#include "qopt/runner.hpp"
#include "qopt/strategy.hpp"
#include "qopt/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace qopt {

namespace {

std::vector<std::string> split_commas(const std::string &text) {
    std::vector<std::string> items;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) {
            items.push_back(item);
        }
    }
    if (items.empty()) {
        throw std::invalid_argument("empty list: '" + text + "'");
    }
    return items;
}

std::vector<uint64_t> parse_u64_list(const std::string &text) {
    std::vector<uint64_t> values;
    for (const std::string &item : split_commas(text)) {
        size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(item, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("not a number: '" + item + "'");
        }
        if (used != item.size()) {
            throw std::invalid_argument("not a number: '" + item + "'");
        }
        values.push_back(value);
    }
    return values;
}

std::vector<int> parse_int_list(const std::string &text) {
    std::vector<int> values;
    for (uint64_t value : parse_u64_list(text)) {
        if (value > 1000000) {
            throw std::invalid_argument("value out of range: " + std::to_string(value));
        }
        values.push_back(static_cast<int>(value));
    }
    return values;
}

uint64_t parse_seed_text(const std::string &text, const std::string &what) {
    size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &used);
    } catch (const std::exception &) {
        throw std::invalid_argument(what + " is not a number: '" + text + "'");
    }
    if (used != text.size()) {
        throw std::invalid_argument(what + " is not a number: '" + text + "'");
    }
    return value;
}

// QOPT_BENCH_SEED sits between config file and explicit flag so CI sweeps
// can reseed runs without editing configs.
bool env_seed(uint64_t &seed) {
    const char *text = std::getenv("QOPT_BENCH_SEED");
    if (text == nullptr || *text == '\0') {
        return false;
    }
    seed = parse_seed_text(text, "QOPT_BENCH_SEED");
    return true;
}

json load_json_file(const fs::path &file, const std::string &what) {
    std::ifstream in(file);
    if (!in) {
        throw std::invalid_argument(what + ": cannot read " + file.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(what + ": " + file.string() + ": " + e.what());
    }
}

struct RunFlags {
    std::string config_file;
    std::string solver;
    int method = 0;
    std::string sizes;
    std::string shots;
    std::string rounds;
    int max_iterations = 0;
    int restarts = 0;
    std::string objective;
    std::string angle_mode;
    std::string fixed_angle_file;
    double cvar_alpha = 0.0;
    double gibbs_eta = 0.0;
    double noise_p1 = 0.0;
    double noise_p2 = 0.0;
    std::string anneal;
    double anneal_time_scale = 0.0;
    double anneal_dt = 0.0;
    std::string profile;
    uint64_t seed = 0;
    int qubit_limit = 0;
    int exhaustion_limit = 0;
    int jobs = 0;
    std::string out;
};

void add_run_options(CLI::App *cmd, RunFlags &flags) {
    cmd->add_option("--config", flags.config_file,
                    "JSON config file; flags given here override it");
    cmd->add_option("--solver", flags.solver, "qaoa or qa");
    cmd->add_option("--method", flags.method, "1 = fixed-parameter scan, 2 = optimizer loop");
    cmd->add_option("--sizes", flags.sizes, "problem sizes, e.g. 4..16:2 or 6,8,12");
    cmd->add_option("--shots", flags.shots, "shots per estimate, e.g. 1000 or 1000,5000");
    cmd->add_option("--rounds", flags.rounds, "ansatz rounds, e.g. 2 or 1,2,4");
    cmd->add_option("--max-iters", flags.max_iterations, "optimizer evaluation budget");
    cmd->add_option("--restarts", flags.restarts, "independent optimizer starts");
    cmd->add_option("--objective", flags.objective, "ar, cvar, gibbs or best");
    cmd->add_option("--angles", flags.angle_mode, "default, random or fixed");
    cmd->add_option("--fixed-angle-file", flags.fixed_angle_file,
                    "angle table for --angles fixed");
    cmd->add_option("--cvar-alpha", flags.cvar_alpha, "tail fraction for the cvar objective");
    cmd->add_option("--gibbs-eta", flags.gibbs_eta, "temperature knob for the gibbs objective");
    cmd->add_option("--noise-p1", flags.noise_p1, "depolarizing rate after 1-qubit gates");
    cmd->add_option("--noise-p2", flags.noise_p2, "depolarizing rate after 2-qubit gates");
    cmd->add_option("--anneal", flags.anneal, "annealing time range, e.g. 1..256x2");
    cmd->add_option("--anneal-time-scale", flags.anneal_time_scale,
                    "schedule units per microsecond");
    cmd->add_option("--anneal-dt", flags.anneal_dt, "integrator step, 0 = duration/1000");
    cmd->add_option("--profile", flags.profile, "device timing profile name or JSON path");
    cmd->add_option("--seed", flags.seed, "master seed");
    cmd->add_option("--qubit-limit", flags.qubit_limit, "statevector width cap");
    cmd->add_option("--exhaustion-limit", flags.exhaustion_limit, "exact-optimum width cap");
    cmd->add_option("--jobs", flags.jobs, "OpenMP thread count, 0 = library default");
    cmd->add_option("--out", flags.out, "output directory")->required();
}

BenchmarkConfig resolve_run_config(const CLI::App *cmd, const RunFlags &flags) {
    BenchmarkConfig config;
    if (cmd->count("--config") > 0) {
        config = BenchmarkConfig::from_json(load_json_file(flags.config_file, "config file"));
    }
    env_seed(config.seed);
    if (cmd->count("--solver") > 0) config.solver = flags.solver;
    if (cmd->count("--method") > 0) config.method = flags.method;
    if (cmd->count("--sizes") > 0) config.sizes = parse_size_list(flags.sizes);
    if (cmd->count("--shots") > 0) config.shots_list = parse_u64_list(flags.shots);
    if (cmd->count("--rounds") > 0) config.rounds_list = parse_int_list(flags.rounds);
    if (cmd->count("--max-iters") > 0) config.max_iterations = flags.max_iterations;
    if (cmd->count("--restarts") > 0) config.restarts = flags.restarts;
    if (cmd->count("--objective") > 0) config.objective = flags.objective;
    if (cmd->count("--angles") > 0) config.angle_mode = flags.angle_mode;
    if (cmd->count("--fixed-angle-file") > 0) config.fixed_angle_file = flags.fixed_angle_file;
    if (cmd->count("--cvar-alpha") > 0) config.cvar_alpha = flags.cvar_alpha;
    if (cmd->count("--gibbs-eta") > 0) config.gibbs_eta = flags.gibbs_eta;
    if (cmd->count("--noise-p1") > 0) config.noise_p1 = flags.noise_p1;
    if (cmd->count("--noise-p2") > 0) config.noise_p2 = flags.noise_p2;
    if (cmd->count("--anneal") > 0) {
        parse_anneal_range(flags.anneal, config.anneal_min_us, config.anneal_max_us,
                           config.anneal_factor);
    }
    if (cmd->count("--anneal-time-scale") > 0) config.anneal_time_scale = flags.anneal_time_scale;
    if (cmd->count("--anneal-dt") > 0) config.anneal_dt = flags.anneal_dt;
    if (cmd->count("--profile") > 0) config.profile = flags.profile;
    if (cmd->count("--seed") > 0) config.seed = flags.seed;
    if (cmd->count("--qubit-limit") > 0) config.qubit_limit = flags.qubit_limit;
    if (cmd->count("--exhaustion-limit") > 0) config.exhaustion_limit = flags.exhaustion_limit;
    if (cmd->count("--jobs") > 0) config.jobs = flags.jobs;
    config.validate();
    return config;
}

struct ReportFlags {
    std::string run_dir;
    std::string plots = "area,optgap,cutsize,volumetric";
    std::string formats = "svg";
    std::string time_field = "device";
    std::string ratio_field = "ar";
    std::string sizes;
    int quantum_volume = 32;
    double color_lo = 0.0;
    double color_hi = 1.0;
    std::string out;
};

void run_report(const CLI::App *cmd, const ReportFlags &flags) {
    RunData run = load_run(flags.run_dir);
    BenchmarkConfig config = BenchmarkConfig::from_json(run.config);

    // annealing results cluster near 1, so the color window narrows
    ColorScale scale;
    if (config.solver == "qa") {
        scale.lo = 0.9;
        scale.hi = 1.0;
    }
    if (cmd->count("--color-lo") > 0) scale.lo = flags.color_lo;
    if (cmd->count("--color-hi") > 0) scale.hi = flags.color_hi;

    std::vector<int> cutsize_sizes;
    if (cmd->count("--sizes") > 0) {
        cutsize_sizes = parse_size_list(flags.sizes);
    } else {
        std::set<int> seen;
        for (const BenchRecord &rec : run.records) {
            if (rec.type == "group" && rec.has_quality) {
                seen.insert(rec.size);
            }
        }
        cutsize_sizes.assign(seen.begin(), seen.end());
    }

    fs::create_directories(flags.out);
    for (const std::string &plot : split_commas(flags.plots)) {
        for (const std::string &name : split_commas(flags.formats)) {
            PlotFormat format = plot_format_from_string(name);
            std::string ext = to_string(format);
            fs::path out_dir(flags.out);
            if (plot == "area") {
                render_area(area_plot_data(run, flags.time_field, flags.ratio_field), format,
                            out_dir / ("area." + ext), scale);
            } else if (plot == "optgap") {
                render_optgap(optgap_data(run), format, out_dir / ("optgap." + ext));
            } else if (plot == "cutsize") {
                for (int size : cutsize_sizes) {
                    render_cutsize(cutsize_data(run, size), format,
                                   out_dir / ("cutsize_n" + std::to_string(size) + "." + ext));
                }
            } else if (plot == "volumetric") {
                render_volumetric(volumetric_data(run, flags.quantum_volume), format,
                                  out_dir / ("volumetric." + ext));
            } else {
                throw std::invalid_argument("unknown plot '" + plot + "'");
            }
        }
    }
}

}  // namespace

int cli_main(int argc, const char *const *argv) {
    CLI::App app{"desk-scale benchmark harness for quantum optimization heuristics"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string gen_sizes = "4..16:2";
    uint64_t gen_seed = 1;
    int gen_exhaustion = 24;
    std::string gen_out;
    CLI::App *gen = app.add_subcommand("gen-instances", "write problem instances as JSON");
    gen->add_option("--sizes", gen_sizes, "problem sizes, e.g. 4..16:2");
    gen->add_option("--seed", gen_seed, "master seed");
    gen->add_option("--exhaustion-limit", gen_exhaustion, "exact-optimum width cap");
    gen->add_option("--out", gen_out, "output directory")->required();

    RunFlags run_flags;
    CLI::App *run = app.add_subcommand("run", "execute a benchmark and record results");
    add_run_options(run, run_flags);

    ReportFlags report_flags;
    CLI::App *report = app.add_subcommand("report", "render plots from a recorded run");
    report->add_option("--run", report_flags.run_dir, "run directory")->required();
    report->add_option("--plots", report_flags.plots, "area, optgap, cutsize, volumetric");
    report->add_option("--formats", report_flags.formats, "svg, json, csv");
    report->add_option("--time-field", report_flags.time_field,
                       "area x axis: device, elapsed or classical");
    report->add_option("--ratio", report_flags.ratio_field,
                       "area color: ar, cvar, gibbs or best");
    report->add_option("--sizes", report_flags.sizes, "restrict cutsize plots to these sizes");
    report->add_option("--qv", report_flags.quantum_volume, "quantum volume backdrop");
    report->add_option("--color-lo", report_flags.color_lo, "color scale lower bound");
    report->add_option("--color-hi", report_flags.color_hi, "color scale upper bound");
    report->add_option("--out", report_flags.out, "output directory")->required();

    std::vector<std::string> strat_runs;
    double strat_split = 0.8;
    std::string strat_grid = "log:1:1e7:29";
    std::string strat_formats = "json,csv,svg";
    uint64_t strat_seed = 1;
    std::string strat_out;
    CLI::App *strat =
        app.add_subcommand("strategy", "compare parameter strategies across runs");
    strat->add_option("--runs", strat_runs, "run directories")->required()->expected(-1);
    strat->add_option("--split", strat_split, "train fraction of instances");
    strat->add_option("--grid", strat_grid, "budget grid, e.g. log:1:1e7:29");
    strat->add_option("--formats", strat_formats, "svg, json, csv");
    strat->add_option("--seed", strat_seed, "split shuffle seed");
    strat->add_option("--out", strat_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            if (gen->count("--seed") == 0) {
                env_seed(gen_seed);
            }
            fs::create_directories(gen_out);
            generate_instances(parse_size_list(gen_sizes), gen_seed, gen_out, gen_exhaustion);
        } else if (run->parsed()) {
            BenchmarkConfig config = resolve_run_config(run, run_flags);
            fs::create_directories(run_flags.out);
            run_benchmark(config, run_flags.out);
        } else if (report->parsed()) {
            run_report(report, report_flags);
        } else if (strat->parsed()) {
            std::vector<RunData> runs;
            for (const std::string &dir : strat_runs) {
                runs.push_back(load_run(dir));
            }
            std::vector<StrategyPoint> points = collect_strategy_points(runs);
            StrategyAnalysis analysis = analyze_strategies(
                points, strat_split, parse_resource_grid(strat_grid), strat_seed);
            fs::create_directories(strat_out);
            for (const std::string &name : split_commas(strat_formats)) {
                PlotFormat format = plot_format_from_string(name);
                render_strategy(analysis, format,
                                fs::path(strat_out) / ("strategy." + to_string(format)));
            }
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "qopt-bench: " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "qopt-bench: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace qopt
