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

#include "qopt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace qopt {

namespace {

// (cut, count) pairs sorted by cut descending, i.e. energy ascending.
std::vector<std::pair<int, uint64_t>> sorted_cuts(
    const SampleSet &samples, const std::function<int(const std::string &)> &cut_of) {
    std::vector<std::pair<int, uint64_t>> cuts;
    cuts.reserve(samples.counts.size());
    for (auto &[bits, count] : samples.counts) {
        cuts.push_back({cut_of(bits), count});
    }
    std::sort(cuts.begin(), cuts.end(), [](auto &a, auto &b) { return a.first > b.first; });
    return cuts;
}

double ratio_of_mean(long long cut_sum, uint64_t shots, int optimal_cut) {
    return ((double)cut_sum / (double)shots) / (double)optimal_cut;
}

}  // namespace

double optimality_gap_pct(double ratio) {
    // Keep this exact expression: records store the gap and the ratio side
    // by side, and consumers recompute one from the other expecting
    // bit-identical doubles.
    return (1.0 - ratio) * 100.0;
}

QualityRecord quality_record(const SampleSet &samples,
                             const std::function<int(const std::string &)> &cut_of,
                             int optimal_cut, double cvar_alpha, double gibbs_eta) {
    const uint64_t shots = samples.total();
    if (shots == 0) {
        throw std::invalid_argument("quality_record: empty sample set");
    }
    if (optimal_cut <= 0) {
        throw std::invalid_argument("quality_record: optimal cut must be positive");
    }
    if (!(cvar_alpha > 0.0) || cvar_alpha > 1.0) {
        throw std::invalid_argument("quality_record: cvar_alpha must be in (0, 1]");
    }
    if (!(gibbs_eta > 0.0)) {
        throw std::invalid_argument("quality_record: gibbs_eta must be positive");
    }
    auto cuts = sorted_cuts(samples, cut_of);
    long long total_sum = 0;
    for (auto &[cut, count] : cuts) {
        if (cut < 0) {
            throw std::invalid_argument("quality_record: negative cut size");
        }
        total_sum += (long long)cut * (long long)count;
    }

    QualityRecord q;
    q.cvar_alpha = cvar_alpha;
    q.gibbs_eta = gibbs_eta;
    q.energy_expectation = -(double)total_sum / (double)shots;
    q.approximation_ratio = ratio_of_mean(total_sum, shots, optimal_cut);

    // Tail mean over the k best cuts. Computed with the same integer
    // accumulation as the full mean so alpha = 1 reproduces the
    // approximation ratio bit for bit.
    uint64_t k = (uint64_t)std::ceil(cvar_alpha * (double)shots);
    k = std::clamp<uint64_t>(k, 1, shots);
    long long tail_sum = 0;
    uint64_t taken = 0;
    for (auto &[cut, count] : cuts) {
        uint64_t take = std::min<uint64_t>(count, k - taken);
        tail_sum += (long long)cut * (long long)take;
        taken += take;
        if (taken == k) {
            break;
        }
    }
    q.cvar_ratio = ratio_of_mean(tail_sum, k, optimal_cut);

    // ln<exp(-eta H)> via log-sum-exp anchored at the best sampled cut.
    const int best_cut = cuts.front().first;
    double sum_exp = 0.0;
    for (auto &[cut, count] : cuts) {
        sum_exp += (double)count * std::exp(gibbs_eta * (double)(cut - best_cut));
    }
    double gibbs_free = gibbs_eta * (double)best_cut + std::log(sum_exp) -
                        std::log((double)shots);
    q.gibbs_ratio = gibbs_free / (gibbs_eta * (double)optimal_cut);

    q.best_measurement_ratio = (double)best_cut / (double)optimal_cut;

    q.approximation_ratio = std::clamp(q.approximation_ratio, 0.0, 1.0);
    q.cvar_ratio = std::clamp(q.cvar_ratio, 0.0, 1.0);
    q.gibbs_ratio = std::clamp(q.gibbs_ratio, 0.0, 1.0);
    q.best_measurement_ratio = std::clamp(q.best_measurement_ratio, 0.0, 1.0);
    q.optimality_gap_pct = optimality_gap_pct(q.approximation_ratio);
    return q;
}

namespace {

double value_at_rank(const std::vector<std::pair<double, uint64_t>> &sorted,
                     uint64_t rank) {
    uint64_t seen = 0;
    for (auto &[value, count] : sorted) {
        seen += count;
        if (rank < seen) {
            return value;
        }
    }
    return sorted.back().first;
}

// Linear-interpolation percentile over a weighted sorted list.
double weighted_percentile(const std::vector<std::pair<double, uint64_t>> &sorted,
                           uint64_t total, double p) {
    const double target = p * (double)(total - 1);
    const uint64_t below = (uint64_t)target;
    const double frac = target - (double)below;
    const double lower = value_at_rank(sorted, below);
    const double upper = frac == 0.0 ? lower : value_at_rank(sorted, below + 1);
    return lower + frac * (upper - lower);
}

}  // namespace

DistributionStats distribution_from_histogram(const std::map<int, uint64_t> &cut_counts,
                                              int optimal_cut) {
    if (optimal_cut <= 0) {
        throw std::invalid_argument("distribution_stats: optimal cut must be positive");
    }
    uint64_t shots = 0;
    for (auto &[cut, count] : cut_counts) {
        shots += count;
    }
    if (shots == 0) {
        throw std::invalid_argument("distribution_stats: empty sample set");
    }
    DistributionStats d;
    // Iterate cuts descending so gaps come out ascending.
    for (auto it = cut_counts.rbegin(); it != cut_counts.rend(); ++it) {
        double gap = 1.0 - (double)it->first / (double)optimal_cut;
        d.gap_histogram.push_back({gap, it->second});
    }
    d.q1 = weighted_percentile(d.gap_histogram, shots, 0.25);
    d.median = weighted_percentile(d.gap_histogram, shots, 0.5);
    d.q3 = weighted_percentile(d.gap_histogram, shots, 0.75);
    return d;
}

DistributionStats distribution_stats(const SampleSet &samples,
                                     const std::function<int(const std::string &)> &cut_of,
                                     int optimal_cut) {
    std::map<int, uint64_t> by_cut;
    for (auto &[bits, count] : samples.counts) {
        by_cut[cut_of(bits)] += count;
    }
    return distribution_from_histogram(by_cut, optimal_cut);
}

TimingBreakdown gate_model_timing(const DeviceProfile &profile, uint64_t shots) {
    if (profile.paradigm != Paradigm::kGateModel) {
        throw std::invalid_argument("gate_model_timing: profile '" + profile.name +
                                    "' is not a gate-model profile");
    }
    TimingBreakdown t;
    t.device_seconds = profile.t_init + (double)shots * (profile.t_shot + profile.t_delay);
    t.elapsed_seconds =
        profile.t_queue + profile.t_compile + profile.t_load + t.device_seconds;
    t.classical_seconds = profile.t_create + profile.t_optimize;
    t.cumulative_device_seconds = t.device_seconds;
    t.cumulative_elapsed_seconds = t.elapsed_seconds;
    t.cumulative_classical_seconds = t.classical_seconds;
    return t;
}

TimingBreakdown annealing_timing(const DeviceProfile &profile, uint64_t reads,
                                 double anneal_time_us) {
    if (profile.paradigm != Paradigm::kAnnealing) {
        throw std::invalid_argument("annealing_timing: profile '" + profile.name +
                                    "' is not an annealing profile");
    }
    if (anneal_time_us < 0) {
        throw std::invalid_argument("annealing_timing: annealing time must be non-negative");
    }
    TimingBreakdown t;
    t.device_seconds =
        profile.t_programming +
        (double)reads * (anneal_time_us * 1e-6 + profile.t_readout_per_read);
    t.elapsed_seconds =
        profile.t_queue + profile.t_embed + profile.t_resolve + t.device_seconds;
    t.classical_seconds = profile.t_create + profile.t_optimize;
    t.cumulative_device_seconds = t.device_seconds;
    t.cumulative_elapsed_seconds = t.elapsed_seconds;
    t.cumulative_classical_seconds = t.classical_seconds;
    return t;
}

namespace {

std::vector<DeviceProfile> make_builtin_profiles() {
    std::vector<DeviceProfile> profiles;
    // Transmon-class machine: millisecond-scale shots dominated by reset
    // and readout, seconds of per-iteration initialization.
    DeviceProfile sc;
    sc.name = "superconducting";
    sc.paradigm = Paradigm::kGateModel;
    sc.t_init = 3.17;
    sc.t_shot = 4.0e-4;
    sc.t_delay = 3.0e-5;
    profiles.push_back(sc);
    // Trapped-ion machine: much slower per shot, negligible per-iteration
    // initialization.
    DeviceProfile ion;
    ion.name = "ion-trap";
    ion.paradigm = Paradigm::kGateModel;
    ion.t_init = 0.0;
    ion.t_shot = 1.40e-2;
    ion.t_delay = 6.0e-4;
    profiles.push_back(ion);
    // Flux-qubit annealer: per-iteration programming plus per-read anneal
    // and readout.
    DeviceProfile qa;
    qa.name = "annealer";
    qa.paradigm = Paradigm::kAnnealing;
    qa.t_programming = 1.6e-2;
    qa.t_readout_per_read = 2.5e-4;
    profiles.push_back(qa);
    // All-zero gate-model profile for pure simulation runs.
    DeviceProfile zero;
    zero.name = "zero";
    zero.paradigm = Paradigm::kGateModel;
    profiles.push_back(zero);
    // All-zero annealing profile.
    DeviceProfile zero_qa;
    zero_qa.name = "zero-annealer";
    zero_qa.paradigm = Paradigm::kAnnealing;
    profiles.push_back(zero_qa);
    return profiles;
}

const std::vector<DeviceProfile> &builtin_profiles() {
    static const std::vector<DeviceProfile> profiles = make_builtin_profiles();
    return profiles;
}

}  // namespace

const DeviceProfile &builtin_profile(const std::string &name) {
    for (const DeviceProfile &p : builtin_profiles()) {
        if (p.name == name) {
            return p;
        }
    }
    std::string known;
    for (const DeviceProfile &p : builtin_profiles()) {
        known += (known.empty() ? "" : ", ") + p.name;
    }
    throw std::invalid_argument("unknown device profile '" + name + "' (built in: " +
                                known + ")");
}

std::vector<std::string> builtin_profile_names() {
    std::vector<std::string> names;
    for (const DeviceProfile &p : builtin_profiles()) {
        names.push_back(p.name);
    }
    return names;
}

DeviceProfile load_profile(const std::filesystem::path &file) {
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error("load_profile: cannot open " + file.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw std::runtime_error("load_profile: " + file.string() +
                                 " is not valid JSON: " + e.what());
    }
    auto fail = [&](const std::string &field, const std::string &why) {
        throw std::runtime_error("load_profile: " + file.string() + ": field '" + field +
                                 "': " + why);
    };
    DeviceProfile p;
    if (!j.contains("name") || !j["name"].is_string()) {
        fail("name", "missing or not a string");
    }
    p.name = j["name"].get<std::string>();
    if (!j.contains("paradigm") || !j["paradigm"].is_string()) {
        fail("paradigm", "missing or not a string");
    }
    std::string paradigm = j["paradigm"].get<std::string>();
    if (paradigm == "gate_model") {
        p.paradigm = Paradigm::kGateModel;
    } else if (paradigm == "annealing") {
        p.paradigm = Paradigm::kAnnealing;
    } else {
        fail("paradigm", "must be 'gate_model' or 'annealing'");
    }
    const std::vector<std::pair<const char *, double *>> fields = {
        {"t_init", &p.t_init},
        {"t_shot", &p.t_shot},
        {"t_delay", &p.t_delay},
        {"t_queue", &p.t_queue},
        {"t_compile", &p.t_compile},
        {"t_load", &p.t_load},
        {"t_programming", &p.t_programming},
        {"t_readout_per_read", &p.t_readout_per_read},
        {"t_embed", &p.t_embed},
        {"t_resolve", &p.t_resolve},
        {"t_create", &p.t_create},
        {"t_optimize", &p.t_optimize},
    };
    for (auto &[field, dst] : fields) {
        if (!j.contains(field)) {
            continue;
        }
        if (!j[field].is_number()) {
            fail(field, "not a number");
        }
        *dst = j[field].get<double>();
        if (*dst < 0 || !std::isfinite(*dst)) {
            fail(field, "must be finite and non-negative");
        }
    }
    return p;
}

double spearman_rho(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("spearman_rho: need two equal-length series");
    }
    auto ranks = [](const std::vector<double> &v) {
        std::vector<size_t> order(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return v[a] < v[b]; });
        std::vector<double> r(v.size());
        size_t i = 0;
        while (i < order.size()) {
            size_t j = i;
            while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) {
                ++j;
            }
            double avg = 0.5 * (double)(i + j) + 1.0;  // average 1-based rank
            for (size_t k = i; k <= j; ++k) {
                r[order[k]] = avg;
            }
            i = j + 1;
        }
        return r;
    };
    auto rx = ranks(x);
    auto ry = ranks(y);
    double mean = 0.5 * (double)(x.size() + 1);
    double num = 0.0;
    double dx = 0.0;
    double dy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        num += (rx[i] - mean) * (ry[i] - mean);
        dx += (rx[i] - mean) * (rx[i] - mean);
        dy += (ry[i] - mean) * (ry[i] - mean);
    }
    if (dx == 0.0 || dy == 0.0) {
        return 0.0;
    }
    return num / std::sqrt(dx * dy);
}

}  // namespace qopt
