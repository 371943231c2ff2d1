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

#include "qopt/records.hpp"

#include <ctime>
#include <stdexcept>

#include "qopt/version.hpp"

namespace qopt {

nlohmann::json BenchRecord::to_json() const {
    nlohmann::json j;
    j["type"] = type;
    j["size"] = size;
    if (!solver.empty()) {
        j["solver"] = solver;
        j["method"] = method;
    }
    if (type == "error") {
        j["message"] = message;
        return j;
    }
    if (type == "instance") {
        j["instance_seed"] = instance_seed;
        j["num_edges"] = num_edges;
        j["optimal_cut"] = optimal_cut;
        j["optimal_exact"] = optimal_exact;
        return j;
    }
    if (restart >= 0) {
        j["restart"] = restart;
    }
    if (iteration >= 0) {
        j["iteration"] = iteration;
    }
    if (rounds > 0) {
        j["rounds"] = rounds;
    }
    if (shots > 0) {
        j["shots"] = shots;
    }
    if (anneal_time_us >= 0) {
        j["anneal_time_us"] = anneal_time_us;
    }
    if (!engine.empty()) {
        j["engine"] = engine;
    }
    if (!betas.empty()) {
        j["betas"] = betas;
        j["gammas"] = gammas;
    }
    if (!objective.empty()) {
        j["objective"] = objective;
        j["objective_value"] = objective_value;
    }
    if (has_quality) {
        j["energy_expectation"] = quality.energy_expectation;
        j["approximation_ratio"] = quality.approximation_ratio;
        j["cvar_ratio"] = quality.cvar_ratio;
        j["gibbs_ratio"] = quality.gibbs_ratio;
        j["best_measurement_ratio"] = quality.best_measurement_ratio;
        j["optimality_gap_pct"] = quality.optimality_gap_pct;
        j["cvar_alpha"] = quality.cvar_alpha;
        j["gibbs_eta"] = quality.gibbs_eta;
    }
    if (optimal_cut > 0) {
        j["optimal_cut"] = optimal_cut;
        j["optimal_exact"] = optimal_exact;
    }
    if (type == "iteration" || type == "restart" || type == "group") {
        j["device_seconds"] = timing.device_seconds;
        j["elapsed_seconds"] = timing.elapsed_seconds;
        j["classical_seconds"] = timing.classical_seconds;
        j["cumulative_device_seconds"] = timing.cumulative_device_seconds;
        j["cumulative_elapsed_seconds"] = timing.cumulative_elapsed_seconds;
        j["cumulative_classical_seconds"] = timing.cumulative_classical_seconds;
    }
    if (!cut_histogram.empty()) {
        nlohmann::json h;
        for (auto &[cut, count] : cut_histogram) {
            h[std::to_string(cut)] = count;
        }
        j["cut_histogram"] = h;
    }
    if (type == "iteration") {
        j["sample_seed"] = sample_seed;
    }
    if (raw_fidelity >= 0) {
        j["raw_fidelity"] = raw_fidelity;
        j["normalized_fidelity"] = normalized_fidelity;
    }
    if (has_resources) {
        j["width"] = resources.width;
        j["two_qubit_gates"] = resources.two_qubit_gates;
        j["one_qubit_gates"] = resources.one_qubit_gates;
        j["algorithmic_depth"] = resources.algorithmic_depth;
    }
    if (type == "restart") {
        j["evaluations"] = evaluations;
    }
    if (type == "group" && best_restart >= 0) {
        j["best_restart"] = best_restart;
    }
    return j;
}

BenchRecord BenchRecord::from_json(const nlohmann::json &j) {
    BenchRecord r;
    auto get = [&](const char *key, auto &dst) {
        if (j.contains(key)) {
            dst = j[key].get<std::decay_t<decltype(dst)>>();
        }
    };
    get("type", r.type);
    get("solver", r.solver);
    get("method", r.method);
    get("size", r.size);
    get("restart", r.restart);
    get("iteration", r.iteration);
    get("rounds", r.rounds);
    get("shots", r.shots);
    get("anneal_time_us", r.anneal_time_us);
    get("engine", r.engine);
    get("betas", r.betas);
    get("gammas", r.gammas);
    get("objective", r.objective);
    get("objective_value", r.objective_value);
    if (j.contains("approximation_ratio")) {
        r.has_quality = true;
        get("energy_expectation", r.quality.energy_expectation);
        get("approximation_ratio", r.quality.approximation_ratio);
        get("cvar_ratio", r.quality.cvar_ratio);
        get("gibbs_ratio", r.quality.gibbs_ratio);
        get("best_measurement_ratio", r.quality.best_measurement_ratio);
        get("optimality_gap_pct", r.quality.optimality_gap_pct);
        get("cvar_alpha", r.quality.cvar_alpha);
        get("gibbs_eta", r.quality.gibbs_eta);
    }
    get("instance_seed", r.instance_seed);
    get("num_edges", r.num_edges);
    get("optimal_cut", r.optimal_cut);
    get("optimal_exact", r.optimal_exact);
    get("device_seconds", r.timing.device_seconds);
    get("elapsed_seconds", r.timing.elapsed_seconds);
    get("classical_seconds", r.timing.classical_seconds);
    get("cumulative_device_seconds", r.timing.cumulative_device_seconds);
    get("cumulative_elapsed_seconds", r.timing.cumulative_elapsed_seconds);
    get("cumulative_classical_seconds", r.timing.cumulative_classical_seconds);
    if (j.contains("cut_histogram")) {
        for (auto &[key, value] : j["cut_histogram"].items()) {
            r.cut_histogram[std::stoi(key)] = value.get<uint64_t>();
        }
    }
    get("sample_seed", r.sample_seed);
    get("raw_fidelity", r.raw_fidelity);
    get("normalized_fidelity", r.normalized_fidelity);
    if (j.contains("algorithmic_depth")) {
        r.has_resources = true;
        get("width", r.resources.width);
        get("two_qubit_gates", r.resources.two_qubit_gates);
        get("one_qubit_gates", r.resources.one_qubit_gates);
        get("algorithmic_depth", r.resources.algorithmic_depth);
    }
    get("evaluations", r.evaluations);
    get("best_restart", r.best_restart);
    get("message", r.message);
    return r;
}

std::string iso_timestamp_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm_utc;
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

RunWriter::RunWriter(const std::filesystem::path &dir, const nlohmann::json &config)
    : dir_(dir), config_(config), started_(iso_timestamp_now()) {
    std::filesystem::create_directories(dir_);
    records_.open(dir_ / "records.jsonl");
    if (!records_) {
        throw std::runtime_error("RunWriter: cannot open " +
                                 (dir_ / "records.jsonl").string());
    }
    nlohmann::json header;
    header["type"] = "header";
    header["schema_version"] = kSchemaVersion;
    header["tool_version"] = kToolVersion;
    header["config"] = config_;
    header["started"] = started_;
    records_ << header.dump() << "\n";
}

void RunWriter::write(const BenchRecord &record) {
    records_ << record.to_json().dump() << "\n";
}

void RunWriter::write_wallclock(const std::string &label, double seconds) {
    if (!wallclock_.is_open()) {
        wallclock_.open(dir_ / "wallclock.jsonl");
    }
    nlohmann::json j;
    j["label"] = label;
    j["seconds"] = seconds;
    wallclock_ << j.dump() << "\n";
}

void RunWriter::finish() {
    if (finished_) {
        return;
    }
    finished_ = true;
    records_.flush();
    nlohmann::json manifest;
    manifest["schema_version"] = kSchemaVersion;
    manifest["tool_version"] = kToolVersion;
    manifest["config"] = config_;
    manifest["started"] = started_;
    manifest["finished"] = iso_timestamp_now();
    std::ofstream out(dir_ / "manifest.json");
    out << manifest.dump(2) << "\n";
}

RunData load_run(const std::filesystem::path &dir) {
    std::ifstream in(dir / "records.jsonl");
    if (!in) {
        throw std::runtime_error("load_run: cannot open " +
                                 (dir / "records.jsonl").string());
    }
    RunData data;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception &e) {
            throw std::runtime_error("load_run: " + (dir / "records.jsonl").string() +
                                     " line " + std::to_string(line_no) +
                                     " is not valid JSON: " + e.what());
        }
        if (line_no == 1) {
            if (!j.contains("type") || j["type"] != "header") {
                throw std::runtime_error("load_run: first line must be the header");
            }
            data.config = j.value("config", nlohmann::json::object());
            continue;
        }
        data.records.push_back(BenchRecord::from_json(j));
    }
    return data;
}

}  // namespace qopt
