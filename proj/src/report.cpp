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

#include "qopt/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qopt/bits.hpp"
#include "qopt/graph.hpp"
#include "qopt/hamiltonian.hpp"
#include "qopt/rng.hpp"
#include "qopt/version.hpp"

namespace qopt {

PlotFormat plot_format_from_string(const std::string &name) {
    if (name == "json") {
        return PlotFormat::kJson;
    }
    if (name == "csv") {
        return PlotFormat::kCsv;
    }
    if (name == "svg") {
        return PlotFormat::kSvg;
    }
    throw std::invalid_argument("unknown plot format '" + name +
                                "' (expected json, csv or svg)");
}

std::string to_string(PlotFormat format) {
    switch (format) {
        case PlotFormat::kJson:
            return "json";
        case PlotFormat::kCsv:
            return "csv";
        default:
            return "svg";
    }
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

struct Rgb {
    double r, g, b;
};

std::string to_hex(const Rgb &c) {
    auto channel = [](double v) {
        int x = (int)std::lround(std::clamp(v, 0.0, 1.0) * 255.0);
        char buf[4];
        std::snprintf(buf, sizeof buf, "%02x", x);
        return std::string(buf);
    };
    return "#" + channel(c.r) + channel(c.g) + channel(c.b);
}

}  // namespace

std::string ColorScale::color(double value) const {
    // Blue -> light yellow -> red, low quality to high.
    static const Rgb stops[5] = {
        {0.192, 0.212, 0.584},
        {0.455, 0.678, 0.820},
        {1.000, 1.000, 0.749},
        {0.957, 0.427, 0.263},
        {0.647, 0.000, 0.149},
    };
    double t = hi > lo ? std::clamp((value - lo) / (hi - lo), 0.0, 1.0) : 0.0;
    double pos = t * 4.0;
    int k = std::min(3, (int)pos);
    double f = pos - (double)k;
    Rgb c{stops[k].r + f * (stops[k + 1].r - stops[k].r),
          stops[k].g + f * (stops[k + 1].g - stops[k].g),
          stops[k].b + f * (stops[k + 1].b - stops[k].b)};
    return to_hex(c);
}

namespace {

double time_of(const BenchRecord &rec, const std::string &field) {
    if (field == "device") {
        return rec.timing.device_seconds;
    }
    if (field == "elapsed") {
        return rec.timing.elapsed_seconds;
    }
    if (field == "classical") {
        return rec.timing.classical_seconds;
    }
    throw std::invalid_argument("unknown time field '" + field +
                                "' (expected device, elapsed or classical)");
}

double ratio_of(const QualityRecord &q, const std::string &field) {
    if (field == "ar") {
        return q.approximation_ratio;
    }
    if (field == "cvar") {
        return q.cvar_ratio;
    }
    if (field == "gibbs") {
        return q.gibbs_ratio;
    }
    if (field == "best") {
        return q.best_measurement_ratio;
    }
    throw std::invalid_argument("unknown ratio field '" + field +
                                "' (expected ar, cvar, gibbs or best)");
}

// The records of one run must all come from one solver; mixing a gate-model
// run and an annealing run in one plot would splice incomparable time axes.
std::string single_solver(const RunData &run) {
    std::string solver;
    for (const BenchRecord &rec : run.records) {
        if (rec.solver.empty()) {
            continue;
        }
        if (solver.empty()) {
            solver = rec.solver;
        } else if (solver != rec.solver) {
            throw std::invalid_argument(
                "records mix solvers '" + solver + "' and '" + rec.solver +
                "'; plot one run at a time");
        }
    }
    return solver;
}

}  // namespace

AreaPlotData area_plot_data(const RunData &run, const std::string &time_field,
                            const std::string &ratio_field) {
    AreaPlotData data;
    data.solver = single_solver(run);
    data.layout = data.solver == "qa" ? "overlaid" : "stacked";
    data.time_field = time_field;
    data.ratio_field = ratio_field;
    const bool stacked = data.layout == "stacked";
    std::map<int, AreaRow> rows;
    std::map<int, double> cursor;
    for (const BenchRecord &rec : run.records) {
        if (rec.type != "iteration" || !rec.has_quality) {
            continue;
        }
        double dt = time_of(rec, time_field);
        if (dt < 0) {
            throw std::invalid_argument("area plot: negative time in records");
        }
        double ratio = std::clamp(ratio_of(rec.quality, ratio_field), 0.0, 1.0);
        AreaRow &row = rows[rec.size];
        row.size = rec.size;
        double &x = cursor[rec.size];
        row.rects.push_back({x, dt, ratio});
        if (stacked) {
            x += dt;
        }
    }
    for (auto &[size, row] : rows) {
        data.rows.push_back(std::move(row));
    }
    return data;
}

namespace {

// The record whose sample histogram stands for a size's end state: the last
// iteration of the group's best restart (or of the whole size when no
// restart won, e.g. fixed-parameter scans).
const BenchRecord *closing_iteration(const RunData &run, int size, int best_restart) {
    const BenchRecord *closing = nullptr;
    for (const BenchRecord &rec : run.records) {
        if (rec.type != "iteration" || rec.size != size) {
            continue;
        }
        if (best_restart >= 0 && rec.restart != best_restart) {
            continue;
        }
        closing = &rec;
    }
    return closing;
}

}  // namespace

OptgapData optgap_data(const RunData &run) {
    OptgapData data;
    data.solver = single_solver(run);
    for (const BenchRecord &rec : run.records) {
        if (rec.type != "group" || !rec.has_quality) {
            continue;
        }
        OptgapRow row;
        row.size = rec.size;
        row.gap_ar = optimality_gap_pct(rec.quality.approximation_ratio);
        row.gap_cvar = optimality_gap_pct(rec.quality.cvar_ratio);
        row.gap_gibbs = optimality_gap_pct(rec.quality.gibbs_ratio);
        row.gap_best = optimality_gap_pct(rec.quality.best_measurement_ratio);
        const BenchRecord *closing = closing_iteration(run, rec.size, rec.best_restart);
        if (closing != nullptr && !closing->cut_histogram.empty() &&
            closing->optimal_cut > 0) {
            DistributionStats stats =
                distribution_from_histogram(closing->cut_histogram, closing->optimal_cut);
            row.q1 = stats.q1;
            row.median = stats.median;
            row.q3 = stats.q3;
            for (auto &[gap, count] : stats.gap_histogram) {
                int bin = std::clamp((int)(gap * 50.0), 0, 49);
                row.gap_bins[bin] += count;
            }
        }
        data.rows.push_back(row);
    }
    std::sort(data.rows.begin(), data.rows.end(),
              [](const OptgapRow &a, const OptgapRow &b) { return a.size < b.size; });
    return data;
}

CutsizeData cutsize_data(const RunData &run, int size) {
    CutsizeData data;
    data.size = size;
    const BenchRecord *instance = nullptr;
    const BenchRecord *group = nullptr;
    for (const BenchRecord &rec : run.records) {
        if (rec.size != size) {
            continue;
        }
        if (rec.type == "instance") {
            instance = &rec;
        } else if (rec.type == "group") {
            group = &rec;
        }
    }
    if (instance == nullptr) {
        throw std::invalid_argument("cut-size plot: no instance record for size " +
                                    std::to_string(size));
    }
    data.optimal_cut = instance->optimal_cut;
    const BenchRecord *closing =
        closing_iteration(run, size, group != nullptr ? group->best_restart : -1);
    if (closing != nullptr) {
        uint64_t shots = 0;
        for (auto &[cut, count] : closing->cut_histogram) {
            shots += count;
        }
        for (auto &[cut, count] : closing->cut_histogram) {
            data.empirical.push_back({cut, (double)count / (double)shots});
        }
    }
    // Background law: what fraction of all assignments achieves each cut.
    GraphInstance g = generate_3_regular(size, instance->instance_seed);
    if (size <= 20) {
        DiagonalCostTable costs = diagonal_cost_table(g, 20);
        std::map<int, uint64_t> counts;
        for (uint16_t c : costs.cut_sizes) {
            ++counts[c];
        }
        for (auto &[cut, count] : counts) {
            data.background.push_back({cut, (double)count / (double)costs.dimension()});
        }
        data.background_exact = true;
    } else {
        constexpr uint64_t kProbes = 65536;
        Rng rng = make_rng(derive_seed(instance->instance_seed, {tag("bg")}));
        std::map<int, uint64_t> counts;
        std::string bits((size_t)size, '0');
        for (uint64_t k = 0; k < kProbes; ++k) {
            for (int v = 0; v < size; ++v) {
                bits[v] = (rng() & 1ULL) ? '1' : '0';
            }
            ++counts[cut_size(g, bits)];
        }
        for (auto &[cut, count] : counts) {
            data.background.push_back({cut, (double)count / (double)kProbes});
        }
        data.background_exact = false;
    }
    if (group != nullptr && group->has_quality) {
        data.marker_ar = group->quality.approximation_ratio * data.optimal_cut;
        data.marker_cvar = group->quality.cvar_ratio * data.optimal_cut;
        data.marker_gibbs = group->quality.gibbs_ratio * data.optimal_cut;
        data.marker_best = group->quality.best_measurement_ratio * data.optimal_cut;
    }
    return data;
}

VolumetricData volumetric_data(const RunData &run, int quantum_volume) {
    if (quantum_volume < 2) {
        throw std::invalid_argument("volumetric plot: quantum volume must be at least 2");
    }
    VolumetricData data;
    data.quantum_volume = quantum_volume;
    std::map<std::pair<int, int>, std::pair<double, int>> cells;
    for (const BenchRecord &rec : run.records) {
        if (rec.type != "iteration" || !rec.has_resources || rec.normalized_fidelity < 0) {
            continue;
        }
        auto &cell = cells[{rec.resources.width, rec.resources.algorithmic_depth}];
        cell.first += rec.normalized_fidelity;
        cell.second += 1;
    }
    for (auto &[key, cell] : cells) {
        VolumetricPoint p;
        p.width = key.first;
        p.depth = key.second;
        p.count = cell.second;
        p.mean_normalized_fidelity = cell.first / (double)cell.second;
        data.points.push_back(p);
    }
    return data;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

SvgCanvas::SvgCanvas(double width, double height) : width_(width), height_(height) {
    body_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width_)
          << "\" height=\"" << fmt(height_) << "\" viewBox=\"0 0 " << fmt(width_)
          << " " << fmt(height_) << "\">\n";
    body_ << "<rect x=\"0\" y=\"0\" width=\"" << fmt(width_) << "\" height=\""
          << fmt(height_) << "\" fill=\"#ffffff\"/>\n";
}

void SvgCanvas::rect(double x, double y, double w, double h, const std::string &fill,
                     const std::string &extra) {
    body_ << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(w)
          << "\" height=\"" << fmt(h) << "\" fill=\"" << fill << "\"";
    if (!extra.empty()) {
        body_ << " " << extra;
    }
    body_ << "/>\n";
}

void SvgCanvas::line(double x1, double y1, double x2, double y2, const std::string &stroke,
                     double stroke_width, const std::string &extra) {
    body_ << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
          << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
          << fmt(stroke_width) << "\"";
    if (!extra.empty()) {
        body_ << " " << extra;
    }
    body_ << "/>\n";
}

void SvgCanvas::text(double x, double y, const std::string &s, double px,
                     const std::string &anchor, const std::string &fill) {
    body_ << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y)
          << "\" font-family=\"sans-serif\" font-size=\"" << fmt(px)
          << "\" text-anchor=\"" << anchor << "\" fill=\"" << fill << "\">" << s
          << "</text>\n";
}

void SvgCanvas::polyline(const std::vector<std::pair<double, double>> &pts,
                         const std::string &stroke, double stroke_width) {
    if (pts.empty()) {
        return;
    }
    body_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
          << fmt(stroke_width) << "\" points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
        body_ << (i ? " " : "") << fmt(pts[i].first) << "," << fmt(pts[i].second);
    }
    body_ << "\"/>\n";
}

void SvgCanvas::save(const std::filesystem::path &file) {
    std::ofstream out(file);
    if (!out) {
        throw std::runtime_error("cannot open " + file.string());
    }
    out << body_.str() << "</svg>\n";
}

namespace {

void write_text_file(const std::filesystem::path &file, const std::string &content) {
    std::ofstream out(file);
    if (!out) {
        throw std::runtime_error("cannot open " + file.string());
    }
    out << content;
}

void draw_color_legend(SvgCanvas &svg, const ColorScale &scale, double x, double y,
                       double h) {
    constexpr int kSteps = 40;
    for (int k = 0; k < kSteps; ++k) {
        double v = scale.lo + (scale.hi - scale.lo) * ((double)k + 0.5) / kSteps;
        double yy = y + h - (double)(k + 1) * h / kSteps;
        svg.rect(x, yy, 14, h / kSteps + 0.5, scale.color(v));
    }
    svg.text(x + 18, y + h, fmt(scale.lo), 10);
    svg.text(x + 18, y + 8, fmt(scale.hi), 10);
}

}  // namespace

void render_area(const AreaPlotData &data, PlotFormat format,
                 const std::filesystem::path &file, const ColorScale &scale) {
    if (format == PlotFormat::kJson) {
        nlohmann::json j;
        j["schema_version"] = kSchemaVersion;
        j["plot"] = "area";
        j["solver"] = data.solver;
        j["layout"] = data.layout;
        j["time_field"] = data.time_field;
        j["ratio_field"] = data.ratio_field;
        j["color_lo"] = scale.lo;
        j["color_hi"] = scale.hi;
        auto rows = nlohmann::json::array();
        for (const AreaRow &row : data.rows) {
            nlohmann::json r;
            r["size"] = row.size;
            auto rects = nlohmann::json::array();
            for (const AreaRect &rect : row.rects) {
                rects.push_back({{"x_start", rect.x_start},
                                 {"width", rect.width},
                                 {"value", rect.value}});
            }
            r["rects"] = rects;
            rows.push_back(r);
        }
        j["rows"] = rows;
        write_text_file(file, j.dump(2) + "\n");
        return;
    }
    if (format == PlotFormat::kCsv) {
        std::string csv = "size,rect_index,x_start,width,value\n";
        for (const AreaRow &row : data.rows) {
            for (size_t k = 0; k < row.rects.size(); ++k) {
                csv += std::to_string(row.size) + "," + std::to_string(k) + "," +
                       fmt9(row.rects[k].x_start) + "," + fmt9(row.rects[k].width) +
                       "," + fmt9(row.rects[k].value) + "\n";
            }
        }
        write_text_file(file, csv);
        return;
    }

    const double kLeft = 70, kRight = 90, kTop = 46, kBottom = 50;
    const double kRowH = 26, kRowGap = 8;
    const double plot_w = 720;
    const double plot_h =
        std::max<double>(1, (double)data.rows.size()) * (kRowH + kRowGap) - kRowGap;
    SvgCanvas svg(kLeft + plot_w + kRight, kTop + plot_h + kBottom);

    double max_x = 0.0;
    size_t max_rects = 0;
    for (const AreaRow &row : data.rows) {
        for (const AreaRect &rect : row.rects) {
            max_x = std::max(max_x, rect.x_start + rect.width);
        }
        max_rects = std::max(max_rects, row.rects.size());
    }
    // All-zero time axes (all-zero device profile) fall back to iteration
    // index so the quality progression is still visible.
    const bool index_axis = max_x <= 0.0;
    const double x_span = index_axis ? std::max<size_t>(max_rects, 1) : max_x;
    const bool overlaid = data.layout == "overlaid";

    svg.text(kLeft, 24,
             std::string(overlaid ? "quality by time per point ("
                                  : "quality over cumulative time (") +
                 data.ratio_field + ", " + data.solver + ")",
             14);
    double y = kTop;
    for (const AreaRow &row : data.rows) {
        svg.text(kLeft - 8, y + kRowH / 2 + 4, "n=" + std::to_string(row.size), 11,
                 "end");
        std::vector<size_t> order(row.rects.size());
        std::iota(order.begin(), order.end(), size_t{0});
        if (overlaid && !index_axis) {
            // paint wide rectangles first so the narrow ones stay visible
            std::stable_sort(order.begin(), order.end(), [&row](size_t a, size_t b) {
                return row.rects[a].width > row.rects[b].width;
            });
        }
        for (size_t k : order) {
            const AreaRect &rect = row.rects[k];
            double x0 = index_axis ? (double)k : rect.x_start;
            double w = index_axis ? 1.0 : rect.width;
            svg.rect(kLeft + x0 / x_span * plot_w, y,
                     std::max(w / x_span * plot_w, 0.1), kRowH,
                     scale.color(rect.value));
        }
        y += kRowH + kRowGap;
    }
    svg.line(kLeft, kTop + plot_h + 4, kLeft + plot_w, kTop + plot_h + 4, "#444444");
    for (int t = 0; t <= 4; ++t) {
        double xv = x_span * t / 4.0;
        double xp = kLeft + plot_w * t / 4.0;
        svg.line(xp, kTop + plot_h + 4, xp, kTop + plot_h + 9, "#444444");
        svg.text(xp, kTop + plot_h + 22, fmt(xv), 10, "middle");
    }
    svg.text(kLeft + plot_w / 2, kTop + plot_h + 40,
             index_axis ? "iteration (time axis is all zero)"
             : overlaid ? data.time_field + " seconds per point"
                        : "cumulative " + data.time_field + " seconds",
             11, "middle");
    draw_color_legend(svg, scale, kLeft + plot_w + 30, kTop, plot_h);
    if (data.rows.empty()) {
        svg.text(kLeft + plot_w / 2, kTop + 30, "no data", 13, "middle", "#888888");
    }
    svg.save(file);
}

void render_optgap(const OptgapData &data, PlotFormat format,
                   const std::filesystem::path &file) {
    if (format == PlotFormat::kJson) {
        nlohmann::json j;
        j["schema_version"] = kSchemaVersion;
        j["plot"] = "optgap";
        j["solver"] = data.solver;
        auto rows = nlohmann::json::array();
        for (const OptgapRow &row : data.rows) {
            nlohmann::json r;
            r["size"] = row.size;
            r["gap_ar"] = row.gap_ar;
            r["gap_cvar"] = row.gap_cvar;
            r["gap_gibbs"] = row.gap_gibbs;
            r["gap_best"] = row.gap_best;
            r["q1"] = row.q1;
            r["median"] = row.median;
            r["q3"] = row.q3;
            r["gap_bins"] = row.gap_bins;
            rows.push_back(r);
        }
        j["rows"] = rows;
        write_text_file(file, j.dump(2) + "\n");
        return;
    }
    if (format == PlotFormat::kCsv) {
        std::string csv = "size,gap_ar,gap_cvar,gap_gibbs,gap_best,q1,median,q3";
        for (int b = 0; b < 50; ++b) {
            csv += ",bin" + std::to_string(b);
        }
        csv += "\n";
        for (const OptgapRow &row : data.rows) {
            csv += std::to_string(row.size) + "," + fmt9(row.gap_ar) + "," +
                   fmt9(row.gap_cvar) + "," + fmt9(row.gap_gibbs) + "," +
                   fmt9(row.gap_best) + "," + fmt9(row.q1) + "," + fmt9(row.median) +
                   "," + fmt9(row.q3);
            for (uint64_t b : row.gap_bins) {
                csv += "," + std::to_string(b);
            }
            csv += "\n";
        }
        write_text_file(file, csv);
        return;
    }

    const double kLeft = 60, kRight = 30, kTop = 46, kBottom = 60;
    const double group_w = 120, plot_h = 240;
    const double plot_w = std::max<double>(1, (double)data.rows.size()) * group_w;
    SvgCanvas svg(kLeft + plot_w + kRight, kTop + plot_h + kBottom);
    svg.text(kLeft, 24, "final optimality gaps (" + data.solver + ")", 14);

    double max_gap = 1.0;
    for (const OptgapRow &row : data.rows) {
        max_gap = std::max({max_gap, row.gap_ar, row.gap_cvar, row.gap_gibbs,
                            row.gap_best, row.q3 * 100.0});
    }
    auto y_of = [&](double gap_pct) {
        return kTop + plot_h - std::clamp(gap_pct, 0.0, max_gap) / max_gap * plot_h;
    };
    const char *colors[4] = {"#31688e", "#9a5ea1", "#e1753f", "#4daf4a"};
    const char *labels[4] = {"mean", "tail", "gibbs", "best"};
    for (size_t i = 0; i < data.rows.size(); ++i) {
        const OptgapRow &row = data.rows[i];
        double x0 = kLeft + (double)i * group_w + 10;
        double gaps[4] = {row.gap_ar, row.gap_cvar, row.gap_gibbs, row.gap_best};
        for (int k = 0; k < 4; ++k) {
            double x = x0 + k * 18;
            svg.rect(x, y_of(gaps[k]), 14, kTop + plot_h - y_of(gaps[k]), colors[k]);
        }
        // Per-shot gap quartile box on the same percent scale.
        double bx = x0 + 4 * 18 + 10;
        svg.rect(bx, y_of(row.q3 * 100.0), 12,
                 std::max(y_of(row.q1 * 100.0) - y_of(row.q3 * 100.0), 0.5),
                 "#cccccc", "stroke=\"#666666\" stroke-width=\"1\"");
        svg.line(bx, y_of(row.median * 100.0), bx + 12, y_of(row.median * 100.0),
                 "#333333", 1.5);
        svg.text(x0 + group_w / 2 - 10, kTop + plot_h + 18,
                 "n=" + std::to_string(row.size), 11, "middle");
    }
    svg.line(kLeft - 4, kTop, kLeft - 4, kTop + plot_h, "#444444");
    for (int t = 0; t <= 4; ++t) {
        double gap = max_gap * t / 4.0;
        svg.line(kLeft - 8, y_of(gap), kLeft - 4, y_of(gap), "#444444");
        svg.text(kLeft - 10, y_of(gap) + 4, fmt(gap), 10, "end");
    }
    svg.text(16, kTop + plot_h / 2, "gap %", 11, "middle");
    for (int k = 0; k < 4; ++k) {
        double x = kLeft + 10 + k * 80;
        svg.rect(x, kTop + plot_h + 30, 10, 10, colors[k]);
        svg.text(x + 14, kTop + plot_h + 39, labels[k], 10);
    }
    if (data.rows.empty()) {
        svg.text(kLeft + plot_w / 2, kTop + plot_h / 2, "no data", 13, "middle",
                 "#888888");
    }
    svg.save(file);
}

void render_cutsize(const CutsizeData &data, PlotFormat format,
                    const std::filesystem::path &file) {
    if (format == PlotFormat::kJson) {
        nlohmann::json j;
        j["schema_version"] = kSchemaVersion;
        j["plot"] = "cutsize";
        j["size"] = data.size;
        j["optimal_cut"] = data.optimal_cut;
        j["background_exact"] = data.background_exact;
        auto emp = nlohmann::json::array();
        for (auto &[cut, f] : data.empirical) {
            emp.push_back({{"cut", cut}, {"fraction", f}});
        }
        j["empirical"] = emp;
        auto bg = nlohmann::json::array();
        for (auto &[cut, f] : data.background) {
            bg.push_back({{"cut", cut}, {"fraction", f}});
        }
        j["background"] = bg;
        j["marker_ar"] = data.marker_ar;
        j["marker_cvar"] = data.marker_cvar;
        j["marker_gibbs"] = data.marker_gibbs;
        j["marker_best"] = data.marker_best;
        write_text_file(file, j.dump(2) + "\n");
        return;
    }
    if (format == PlotFormat::kCsv) {
        std::map<int, std::pair<double, double>> merged;
        for (auto &[cut, f] : data.empirical) {
            merged[cut].first = f;
        }
        for (auto &[cut, f] : data.background) {
            merged[cut].second = f;
        }
        std::string csv = "cut,empirical_fraction,background_fraction\n";
        for (auto &[cut, fr] : merged) {
            csv += std::to_string(cut) + "," + fmt9(fr.first) + "," + fmt9(fr.second) +
                   "\n";
        }
        write_text_file(file, csv);
        return;
    }

    const double kLeft = 60, kRight = 30, kTop = 46, kBottom = 70;
    const double plot_w = 640, plot_h = 280;
    SvgCanvas svg(kLeft + plot_w + kRight, kTop + plot_h + kBottom);
    svg.text(kLeft, 24,
             "cut-size distribution, n=" + std::to_string(data.size) +
                 (data.background_exact ? "" : " (sampled background)"),
             14);
    int cut_lo = 0;
    int cut_hi = std::max(1, data.optimal_cut);
    double max_f = 0.0;
    for (auto &[cut, f] : data.background) {
        cut_hi = std::max(cut_hi, cut);
        max_f = std::max(max_f, f);
    }
    for (auto &[cut, f] : data.empirical) {
        cut_hi = std::max(cut_hi, cut);
        max_f = std::max(max_f, f);
    }
    if (max_f <= 0) {
        max_f = 1.0;
    }
    const double slot = plot_w / (double)(cut_hi - cut_lo + 1);
    auto x_of = [&](double cut) { return kLeft + (cut - cut_lo) * slot; };
    auto y_of = [&](double f) { return kTop + plot_h - f / max_f * plot_h; };
    for (auto &[cut, f] : data.background) {
        svg.rect(x_of(cut) + 1, y_of(f), slot - 2, kTop + plot_h - y_of(f), "#c9c9c9");
    }
    for (auto &[cut, f] : data.empirical) {
        svg.rect(x_of(cut) + slot * 0.25, y_of(f), slot * 0.5, kTop + plot_h - y_of(f),
                 "#31688e");
    }
    struct Marker {
        double value;
        const char *label;
        const char *color;
    } markers[4] = {{data.marker_ar, "mean", "#e41a1c"},
                    {data.marker_cvar, "tail", "#ff7f00"},
                    {data.marker_gibbs, "gibbs", "#984ea3"},
                    {data.marker_best, "best", "#4daf4a"}};
    for (int k = 0; k < 4; ++k) {
        double x = x_of(markers[k].value) + slot / 2;
        svg.line(x, kTop, x, kTop + plot_h, markers[k].color, 1.2,
                 "stroke-dasharray=\"4 3\"");
        svg.text(x + 2, kTop + 12 + k * 12, markers[k].label, 9, "start",
                 markers[k].color);
    }
    svg.line(kLeft, kTop + plot_h, kLeft + plot_w, kTop + plot_h, "#444444");
    int tick_step = std::max(1, (cut_hi - cut_lo) / 10);
    for (int cut = cut_lo; cut <= cut_hi; cut += tick_step) {
        svg.text(x_of(cut) + slot / 2, kTop + plot_h + 16, std::to_string(cut), 10,
                 "middle");
    }
    svg.text(kLeft + plot_w / 2, kTop + plot_h + 34, "cut size", 11, "middle");
    svg.rect(kLeft + 10, kTop + plot_h + 44, 10, 10, "#c9c9c9");
    svg.text(kLeft + 24, kTop + plot_h + 53, "all assignments", 10);
    svg.rect(kLeft + 140, kTop + plot_h + 44, 10, 10, "#31688e");
    svg.text(kLeft + 154, kTop + plot_h + 53, "sampled", 10);
    svg.save(file);
}

void render_volumetric(const VolumetricData &data, PlotFormat format,
                       const std::filesystem::path &file) {
    if (format == PlotFormat::kJson) {
        nlohmann::json j;
        j["schema_version"] = kSchemaVersion;
        j["plot"] = "volumetric";
        j["quantum_volume"] = data.quantum_volume;
        auto points = nlohmann::json::array();
        for (const VolumetricPoint &p : data.points) {
            points.push_back({{"width", p.width},
                              {"depth", p.depth},
                              {"mean_normalized_fidelity", p.mean_normalized_fidelity},
                              {"count", p.count}});
        }
        j["points"] = points;
        write_text_file(file, j.dump(2) + "\n");
        return;
    }
    if (format == PlotFormat::kCsv) {
        std::string csv = "width,depth,mean_normalized_fidelity,count\n";
        for (const VolumetricPoint &p : data.points) {
            csv += std::to_string(p.width) + "," + std::to_string(p.depth) + "," +
                   fmt9(p.mean_normalized_fidelity) + "," + std::to_string(p.count) +
                   "\n";
        }
        write_text_file(file, csv);
        return;
    }

    const double kLeft = 70, kRight = 100, kTop = 46, kBottom = 60;
    const double plot_w = 440, plot_h = 360;
    SvgCanvas svg(kLeft + plot_w + kRight, kTop + plot_h + kBottom);
    svg.text(kLeft, 24, "normalized fidelity by width and depth", 14);
    int max_w = 4, max_d = 4;
    for (const VolumetricPoint &p : data.points) {
        max_w = std::max(max_w, p.width);
        max_d = std::max(max_d, p.depth);
    }
    const double qv_side = std::log2((double)data.quantum_volume);
    max_w = std::max(max_w, (int)std::ceil(qv_side));
    max_d = std::max(max_d, (int)std::ceil(qv_side));
    auto x_of = [&](double w) { return kLeft + w / (max_w + 1.0) * plot_w; };
    auto y_of = [&](double d) { return kTop + plot_h - d / (max_d + 1.0) * plot_h; };
    // Footprint certified by the quantum volume: width = depth = log2 QV.
    svg.rect(x_of(0), y_of(qv_side), x_of(qv_side) - x_of(0),
             y_of(0) - y_of(qv_side), "#eef3e2",
             "stroke=\"#99aa77\" stroke-width=\"1\"");
    svg.text(x_of(qv_side / 2), y_of(qv_side) - 4,
             "QV " + std::to_string(data.quantum_volume), 10, "middle", "#667755");
    const ColorScale scale{0.0, 1.0};
    const double cell = 16;
    for (const VolumetricPoint &p : data.points) {
        svg.rect(x_of((double)p.width) - cell / 2, y_of((double)p.depth) - cell / 2,
                 cell, cell, scale.color(p.mean_normalized_fidelity),
                 "stroke=\"#555555\" stroke-width=\"0.6\"");
    }
    svg.line(kLeft, kTop + plot_h, kLeft + plot_w, kTop + plot_h, "#444444");
    svg.line(kLeft, kTop, kLeft, kTop + plot_h, "#444444");
    for (int w = 0; w <= max_w; w += std::max(1, max_w / 8)) {
        svg.text(x_of(w), kTop + plot_h + 16, std::to_string(w), 10, "middle");
    }
    for (int d = 0; d <= max_d; d += std::max(1, max_d / 8)) {
        svg.text(kLeft - 8, y_of(d) + 4, std::to_string(d), 10, "end");
    }
    svg.text(kLeft + plot_w / 2, kTop + plot_h + 34, "circuit width", 11, "middle");
    svg.text(18, kTop + plot_h / 2, "depth", 11, "middle");
    draw_color_legend(svg, scale, kLeft + plot_w + 40, kTop, plot_h);
    if (data.points.empty()) {
        svg.text(kLeft + plot_w / 2, kTop + plot_h / 2, "no data", 13, "middle",
                 "#888888");
    }
    svg.save(file);
}

}  // namespace qopt
