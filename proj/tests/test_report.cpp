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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qopt/metrics.hpp"
#include "qopt/report.hpp"

using namespace qopt;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string &name) {
    fs::path dir = fs::temp_directory_path() / "qopt_report_test" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path &file) {
    std::ifstream in(file);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

BenchRecord iteration_rec(int size, int restart, int iter, double ar, double dev) {
    BenchRecord r;
    r.type = "iteration";
    r.solver = "qaoa";
    r.method = 2;
    r.size = size;
    r.restart = restart;
    r.iteration = iter;
    r.has_quality = true;
    r.quality.approximation_ratio = ar;
    r.quality.cvar_ratio = ar;
    r.quality.gibbs_ratio = ar;
    r.quality.best_measurement_ratio = ar;
    r.timing.device_seconds = dev;
    r.timing.elapsed_seconds = 2.0 * dev;
    r.timing.classical_seconds = 0.5 * dev;
    r.optimal_cut = 4;
    return r;
}

}  // namespace

TEST_CASE("plot format names round-trip and junk is rejected") {
    for (const std::string &name : {"json", "csv", "svg"}) {
        CHECK(to_string(plot_format_from_string(name)) == name);
    }
    CHECK_THROWS_AS(plot_format_from_string("png"), std::invalid_argument);
}

TEST_CASE("the color ramp hits its pinned stops and clamps outside the window") {
    ColorScale scale{0.0, 1.0};
    CHECK(scale.color(0.0) == "#313695");
    CHECK(scale.color(0.25) == "#74add1");
    CHECK(scale.color(0.5) == "#ffffbf");
    CHECK(scale.color(0.75) == "#f46d43");
    CHECK(scale.color(1.0) == "#a50026");
    CHECK(scale.color(-3.0) == scale.color(0.0));
    CHECK(scale.color(9.0) == scale.color(1.0));

    ColorScale narrow{0.9, 1.0};
    CHECK(narrow.color(0.95) == "#ffffbf");
    CHECK(narrow.color(0.5) == "#313695");

    ColorScale degenerate{1.0, 1.0};
    CHECK(degenerate.color(0.3) == "#313695");
}

TEST_CASE("area rows accumulate per-size time cursors in stream order") {
    RunData run;
    // interleave two sizes to prove the cursors are independent
    run.records.push_back(iteration_rec(6, 0, 1, 0.50, 1.0));
    run.records.push_back(iteration_rec(4, 0, 1, 0.70, 2.0));
    run.records.push_back(iteration_rec(6, 0, 2, 0.60, 3.0));
    run.records.push_back(iteration_rec(4, 0, 2, 0.80, 4.0));
    BenchRecord skip;  // records without quality carry no rectangle
    skip.type = "iteration";
    skip.solver = "qaoa";
    skip.size = 6;
    run.records.push_back(skip);

    AreaPlotData data = area_plot_data(run, "device", "ar");
    CHECK(data.solver == "qaoa");
    CHECK(data.layout == "stacked");
    CHECK(data.time_field == "device");
    CHECK(data.ratio_field == "ar");
    REQUIRE(data.rows.size() == 2);
    CHECK(data.rows[0].size == 4);
    CHECK(data.rows[1].size == 6);

    REQUIRE(data.rows[0].rects.size() == 2);
    CHECK(data.rows[0].rects[0].x_start == 0.0);
    CHECK(data.rows[0].rects[0].width == 2.0);
    CHECK(data.rows[0].rects[0].value == 0.70);
    CHECK(data.rows[0].rects[1].x_start == 2.0);
    CHECK(data.rows[0].rects[1].width == 4.0);

    REQUIRE(data.rows[1].rects.size() == 2);
    CHECK(data.rows[1].rects[0].x_start == 0.0);
    CHECK(data.rows[1].rects[0].width == 1.0);
    CHECK(data.rows[1].rects[1].x_start == 1.0);
    CHECK(data.rows[1].rects[1].width == 3.0);

    AreaPlotData elapsed = area_plot_data(run, "elapsed", "ar");
    CHECK(elapsed.rows[1].rects[1].width == 6.0);
    AreaPlotData classical = area_plot_data(run, "classical", "ar");
    CHECK(classical.rows[0].rects[0].width == 1.0);
}

TEST_CASE("annealing sweeps overlay every rectangle at time zero") {
    RunData run;
    for (int k = 0; k < 3; ++k) {
        BenchRecord r = iteration_rec(4, 0, k + 1, 0.9 + 0.01 * k, 1 << k);
        r.solver = "qa";
        r.method = 2;
        r.anneal_time_us = 1 << k;
        run.records.push_back(r);
    }
    BenchRecord other = iteration_rec(6, 0, 1, 0.95, 8.0);
    other.solver = "qa";
    run.records.push_back(other);

    AreaPlotData data = area_plot_data(run, "device", "ar");
    CHECK(data.solver == "qa");
    CHECK(data.layout == "overlaid");
    REQUIRE(data.rows.size() == 2);
    REQUIRE(data.rows[0].rects.size() == 3);
    for (size_t k = 0; k < 3; ++k) {
        CHECK(data.rows[0].rects[k].x_start == 0.0);
        CHECK(data.rows[0].rects[k].width == (double)(1 << k));
    }
    CHECK(data.rows[1].rects.size() == 1);
    CHECK(data.rows[1].rects[0].x_start == 0.0);
    CHECK(data.rows[1].rects[0].width == 8.0);

    fs::path dir = fresh_dir("area_overlaid");
    ColorScale scale{0.9, 1.0};
    render_area(data, PlotFormat::kJson, dir / "area.json", scale);
    CHECK(nlohmann::json::parse(slurp(dir / "area.json"))["layout"] == "overlaid");
    render_area(data, PlotFormat::kSvg, dir / "a.svg", scale);
    render_area(data, PlotFormat::kSvg, dir / "b.svg", scale);
    std::string svg = slurp(dir / "a.svg");
    CHECK(svg == slurp(dir / "b.svg"));
    CHECK(svg.find("device seconds per point") != std::string::npos);
}

TEST_CASE("area building rejects bad fields, mixed solvers and negative time") {
    RunData run;
    run.records.push_back(iteration_rec(4, 0, 1, 0.5, 1.0));
    CHECK_THROWS_AS(area_plot_data(run, "wallclock", "ar"), std::invalid_argument);
    CHECK_THROWS_AS(area_plot_data(run, "device", "mean"), std::invalid_argument);

    RunData mixed = run;
    BenchRecord other = iteration_rec(4, 0, 1, 0.5, 1.0);
    other.solver = "qa";
    mixed.records.push_back(other);
    CHECK_THROWS_AS(area_plot_data(mixed, "device", "ar"), std::invalid_argument);

    RunData negative;
    negative.records.push_back(iteration_rec(4, 0, 1, 0.5, -1.0));
    CHECK_THROWS_AS(area_plot_data(negative, "device", "ar"), std::invalid_argument);
}

TEST_CASE("ratios outside the unit interval are clamped into it") {
    RunData run;
    run.records.push_back(iteration_rec(4, 0, 1, 1.25, 1.0));
    AreaPlotData data = area_plot_data(run, "device", "ar");
    CHECK(data.rows[0].rects[0].value == 1.0);
}

TEST_CASE("gap rows come from group summaries and the winning restart's last iteration") {
    RunData run;
    // size 6: restart 0 wins; its last iteration carries histogram A
    BenchRecord early = iteration_rec(6, 0, 1, 0.3, 1.0);
    early.cut_histogram = {{0, 100}};
    run.records.push_back(early);
    BenchRecord a = iteration_rec(6, 0, 2, 0.9, 1.0);
    a.cut_histogram = {{4, 3}, {3, 1}};
    run.records.push_back(a);
    // restart 1 samples later in the stream but did not win
    BenchRecord b = iteration_rec(6, 1, 1, 0.5, 1.0);
    b.cut_histogram = {{2, 4}};
    run.records.push_back(b);

    BenchRecord group;
    group.type = "group";
    group.solver = "qaoa";
    group.size = 6;
    group.has_quality = true;
    group.quality.approximation_ratio = 0.9;
    group.quality.cvar_ratio = 0.95;
    group.quality.gibbs_ratio = 0.8;
    group.quality.best_measurement_ratio = 1.0;
    group.best_restart = 0;
    run.records.push_back(group);

    // a second, smaller size out of order to exercise the sort
    BenchRecord g4 = group;
    g4.size = 4;
    g4.best_restart = -1;
    run.records.push_back(g4);

    OptgapData data = optgap_data(run);
    REQUIRE(data.rows.size() == 2);
    CHECK(data.rows[0].size == 4);
    CHECK(data.rows[1].size == 6);

    const OptgapRow &row = data.rows[1];
    CHECK(row.gap_ar == (1.0 - 0.9) * 100.0);
    CHECK(row.gap_cvar == (1.0 - 0.95) * 100.0);
    CHECK(row.gap_gibbs == (1.0 - 0.8) * 100.0);
    CHECK(row.gap_best == 0.0);

    // histogram A has per-shot gaps [0, 0, 0, 0.25]; histogram B would put
    // the median at 0.5, so these pin both the restart filter and the
    // last-iteration rule
    CHECK(row.q1 == doctest::Approx(0.0));
    CHECK(row.median == doctest::Approx(0.0));
    CHECK(row.q3 == doctest::Approx(0.0625));
    CHECK(row.gap_bins[0] == 3);
    CHECK(row.gap_bins[12] == 1);
    uint64_t total = 0;
    for (uint64_t c : row.gap_bins) {
        total += c;
    }
    CHECK(total == 4);
}

TEST_CASE("cut-size data carries exact background fractions for narrow instances") {
    RunData run;
    BenchRecord inst;
    inst.type = "instance";
    inst.solver = "qaoa";
    inst.size = 4;
    inst.instance_seed = 12345;
    inst.optimal_cut = 4;
    run.records.push_back(inst);

    BenchRecord iter = iteration_rec(4, 0, 1, 0.9, 1.0);
    iter.cut_histogram = {{4, 60}, {0, 40}};
    run.records.push_back(iter);

    BenchRecord group;
    group.type = "group";
    group.solver = "qaoa";
    group.size = 4;
    group.has_quality = true;
    group.quality.approximation_ratio = 0.9;
    group.quality.cvar_ratio = 1.0;
    group.quality.gibbs_ratio = 0.7;
    group.quality.best_measurement_ratio = 1.0;
    group.best_restart = 0;
    run.records.push_back(group);

    CutsizeData data = cutsize_data(run, 4);
    CHECK(data.size == 4);
    CHECK(data.optimal_cut == 4);
    CHECK(data.background_exact);

    // every 3-regular graph on 4 nodes is the complete graph: 2 of the 16
    // assignments cut nothing, 8 cut three edges, 6 cut four
    REQUIRE(data.background.size() == 3);
    CHECK(data.background[0] == std::pair<int, double>{0, 2.0 / 16.0});
    CHECK(data.background[1] == std::pair<int, double>{3, 8.0 / 16.0});
    CHECK(data.background[2] == std::pair<int, double>{4, 6.0 / 16.0});

    REQUIRE(data.empirical.size() == 2);
    CHECK(data.empirical[0] == std::pair<int, double>{0, 0.4});
    CHECK(data.empirical[1] == std::pair<int, double>{4, 0.6});

    CHECK(data.marker_ar == 0.9 * 4);
    CHECK(data.marker_cvar == 4.0);
    CHECK(data.marker_gibbs == doctest::Approx(0.7 * 4));
    CHECK(data.marker_best == 4.0);

    CHECK_THROWS_AS(cutsize_data(run, 8), std::invalid_argument);
}

TEST_CASE("wide instances get a sampled background that is still deterministic") {
    RunData run;
    BenchRecord inst;
    inst.type = "instance";
    inst.solver = "qa";
    inst.size = 22;
    inst.instance_seed = 777;
    inst.optimal_cut = 25;
    run.records.push_back(inst);

    CutsizeData data = cutsize_data(run, 22);
    CHECK_FALSE(data.background_exact);
    CHECK(data.empirical.empty());
    double sum = 0.0;
    for (auto &[cut, f] : data.background) {
        CHECK(f > 0.0);
        sum += f;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

    CutsizeData again = cutsize_data(run, 22);
    CHECK(again.background == data.background);
}

TEST_CASE("volumetric cells average fidelity per width and depth pair") {
    RunData run;
    auto fid_rec = [](int width, int depth, double nf) {
        BenchRecord r;
        r.type = "iteration";
        r.solver = "qaoa";
        r.size = width;
        r.has_resources = true;
        r.resources.width = width;
        r.resources.algorithmic_depth = depth;
        r.resources.two_qubit_gates = 6;
        r.resources.one_qubit_gates = 8;
        r.normalized_fidelity = nf;
        r.raw_fidelity = nf;
        return r;
    };
    run.records.push_back(fid_rec(4, 5, 0.8));
    run.records.push_back(fid_rec(4, 5, 0.6));
    run.records.push_back(fid_rec(6, 3, 0.5));
    BenchRecord no_res = fid_rec(8, 9, 0.4);
    no_res.has_resources = false;
    run.records.push_back(no_res);
    BenchRecord no_fid = fid_rec(8, 9, -1.0);
    run.records.push_back(no_fid);

    VolumetricData data = volumetric_data(run, 64);
    CHECK(data.quantum_volume == 64);
    REQUIRE(data.points.size() == 2);
    CHECK(data.points[0].width == 4);
    CHECK(data.points[0].depth == 5);
    CHECK(data.points[0].count == 2);
    CHECK(data.points[0].mean_normalized_fidelity == doctest::Approx(0.7));
    CHECK(data.points[1].width == 6);
    CHECK(data.points[1].count == 1);

    CHECK_THROWS_AS(volumetric_data(run, 1), std::invalid_argument);
}

TEST_CASE("every renderer writes all three formats deterministically") {
    fs::path dir = fresh_dir("render");

    RunData run;
    run.records.push_back(iteration_rec(4, 0, 1, 0.7, 2.0));
    BenchRecord &it = run.records.back();
    it.cut_histogram = {{4, 70}, {2, 30}};
    it.has_resources = true;
    it.resources.width = 4;
    it.resources.algorithmic_depth = 5;
    it.normalized_fidelity = 0.8;
    BenchRecord inst;
    inst.type = "instance";
    inst.solver = "qaoa";
    inst.size = 4;
    inst.instance_seed = 5;
    inst.optimal_cut = 4;
    run.records.push_back(inst);
    BenchRecord group;
    group.type = "group";
    group.solver = "qaoa";
    group.size = 4;
    group.has_quality = true;
    group.quality.approximation_ratio = 0.7;
    group.quality.cvar_ratio = 0.9;
    group.quality.gibbs_ratio = 0.6;
    group.quality.best_measurement_ratio = 1.0;
    group.best_restart = 0;
    run.records.push_back(group);

    AreaPlotData area = area_plot_data(run, "device", "ar");
    OptgapData optgap = optgap_data(run);
    CutsizeData cutsize = cutsize_data(run, 4);
    VolumetricData volumetric = volumetric_data(run, 32);
    ColorScale scale{0.0, 1.0};

    SUBCASE("json carries the full structure") {
        render_area(area, PlotFormat::kJson, dir / "area.json", scale);
        nlohmann::json j = nlohmann::json::parse(slurp(dir / "area.json"));
        CHECK(j["plot"] == "area");
        CHECK(j["layout"] == "stacked");
        CHECK(j["rows"][0]["size"] == 4);
        CHECK(j["rows"][0]["rects"][0]["width"] == 2.0);
        CHECK(j["rows"][0]["rects"][0]["value"] == 0.7);

        render_optgap(optgap, PlotFormat::kJson, dir / "optgap.json");
        j = nlohmann::json::parse(slurp(dir / "optgap.json"));
        CHECK(j["plot"] == "optgap");
        CHECK(j["rows"][0]["gap_ar"].get<double>() ==
              doctest::Approx((1.0 - 0.7) * 100.0));
        CHECK(j["rows"][0]["gap_bins"].size() == 50);

        render_cutsize(cutsize, PlotFormat::kJson, dir / "cutsize.json");
        j = nlohmann::json::parse(slurp(dir / "cutsize.json"));
        CHECK(j["plot"] == "cutsize");
        CHECK(j["optimal_cut"] == 4);
        CHECK(j["background_exact"] == true);
        CHECK(j["marker_best"] == 4.0);

        render_volumetric(volumetric, PlotFormat::kJson, dir / "volumetric.json");
        j = nlohmann::json::parse(slurp(dir / "volumetric.json"));
        CHECK(j["plot"] == "volumetric");
        CHECK(j["quantum_volume"] == 32);
        CHECK(j["points"][0]["mean_normalized_fidelity"] == 0.8);
    }

    SUBCASE("csv tables start with their pinned headers") {
        render_area(area, PlotFormat::kCsv, dir / "area.csv", scale);
        std::string csv = slurp(dir / "area.csv");
        CHECK(csv.rfind("size,rect_index,x_start,width,value\n", 0) == 0);
        CHECK(csv.find("4,0,0,2,0.7\n") != std::string::npos);

        render_optgap(optgap, PlotFormat::kCsv, dir / "optgap.csv");
        csv = slurp(dir / "optgap.csv");
        CHECK(csv.rfind("size,gap_ar,gap_cvar,gap_gibbs,gap_best,q1,median,q3,bin0,", 0) ==
              0);

        render_cutsize(cutsize, PlotFormat::kCsv, dir / "cutsize.csv");
        csv = slurp(dir / "cutsize.csv");
        CHECK(csv.rfind("cut,empirical_fraction,background_fraction\n", 0) == 0);
        // one row per cut value seen in either distribution: 0, 2, 3, 4
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);

        render_volumetric(volumetric, PlotFormat::kCsv, dir / "volumetric.csv");
        csv = slurp(dir / "volumetric.csv");
        CHECK(csv.rfind("width,depth,mean_normalized_fidelity,count\n", 0) == 0);
        CHECK(csv.find("4,5,0.8,1\n") != std::string::npos);
    }

    SUBCASE("svg output is well formed and byte-stable") {
        auto check_svg = [&](const fs::path &file) {
            std::string svg = slurp(file);
            CHECK(svg.rfind("<svg xmlns=", 0) == 0);
            CHECK(svg.find("</svg>") != std::string::npos);
            return svg;
        };
        render_area(area, PlotFormat::kSvg, dir / "area.svg", scale);
        render_area(area, PlotFormat::kSvg, dir / "area2.svg", scale);
        CHECK(check_svg(dir / "area.svg") == check_svg(dir / "area2.svg"));

        render_optgap(optgap, PlotFormat::kSvg, dir / "optgap.svg");
        render_optgap(optgap, PlotFormat::kSvg, dir / "optgap2.svg");
        CHECK(check_svg(dir / "optgap.svg") == check_svg(dir / "optgap2.svg"));

        render_cutsize(cutsize, PlotFormat::kSvg, dir / "cutsize.svg");
        check_svg(dir / "cutsize.svg");
        render_volumetric(volumetric, PlotFormat::kSvg, dir / "volumetric.svg");
        check_svg(dir / "volumetric.svg");

        // the lone area rectangle gets the ramp color of its 0.7 ratio
        std::string svg = slurp(dir / "area.svg");
        ColorScale s{0.0, 1.0};
        CHECK(svg.find(s.color(0.7)) != std::string::npos);
    }

    SUBCASE("empty data still renders a placeholder plot") {
        RunData empty;
        AreaPlotData no_rows = area_plot_data(empty, "device", "ar");
        render_area(no_rows, PlotFormat::kSvg, dir / "empty.svg", scale);
        std::string svg = slurp(dir / "empty.svg");
        CHECK(svg.find("no data") != std::string::npos);
    }
}

TEST_CASE("all-zero time axes fall back to the iteration index") {
    RunData run;
    run.records.push_back(iteration_rec(4, 0, 1, 0.4, 0.0));
    run.records.push_back(iteration_rec(4, 0, 2, 0.9, 0.0));
    AreaPlotData data = area_plot_data(run, "device", "ar");
    fs::path dir = fresh_dir("index_axis");
    render_area(data, PlotFormat::kSvg, dir / "area.svg", ColorScale{0.0, 1.0});
    std::string svg = slurp(dir / "area.svg");
    CHECK(svg.find("iteration (time axis is all zero)") != std::string::npos);
}
