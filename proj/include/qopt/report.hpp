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

#ifndef QOPT_REPORT_HPP
#define QOPT_REPORT_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qopt/records.hpp"

namespace qopt {

enum class PlotFormat {
    kJson,
    kCsv,
    kSvg,
};

PlotFormat plot_format_from_string(const std::string &name);
std::string to_string(PlotFormat format);

// Linear five-stop color ramp over [lo, hi]; values outside are clamped.
// The annealing plots use a narrow [0.9, 1.0] window because everything
// interesting happens in the last few percent.
struct ColorScale {
    double lo = 0.0;
    double hi = 1.0;

    std::string color(double value) const;  // "#rrggbb"
};

// --- Quality-versus-time area data -------------------------------------
// One row per problem size; each iteration becomes a rectangle whose width
// is its time cost, colored by the chosen quality ratio. Gate-model runs
// are laid out "stacked" (rectangles abut along the cumulative time axis);
// annealing runs are "overlaid" (every rectangle starts at zero, since each
// sweep point is one independent anneal, not a step of one trajectory).
struct AreaRect {
    double x_start = 0.0;
    double width = 0.0;
    double value = 0.0;
};

struct AreaRow {
    int size = 0;
    std::vector<AreaRect> rects;
};

struct AreaPlotData {
    std::string solver;
    std::string layout;       // "stacked" or "overlaid"
    std::string time_field;   // "device", "elapsed" or "classical"
    std::string ratio_field;  // "ar", "cvar", "gibbs" or "best"
    std::vector<AreaRow> rows;
};

AreaPlotData area_plot_data(const RunData &run, const std::string &time_field,
                            const std::string &ratio_field);

// --- Final optimality gaps ----------------------------------------------
// Per size: the four final gap percentages from the group summary, plus the
// per-shot normalized gap distribution of the closing iteration of the best
// restart (quartiles and a 50-bin histogram over [0, 1]).
struct OptgapRow {
    int size = 0;
    double gap_ar = 0.0;
    double gap_cvar = 0.0;
    double gap_gibbs = 0.0;
    double gap_best = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    std::array<uint64_t, 50> gap_bins{};
};

struct OptgapData {
    std::string solver;
    std::vector<OptgapRow> rows;
};

OptgapData optgap_data(const RunData &run);

// --- Cut-size distribution for one size ----------------------------------
// Sampled cut-size frequencies of the closing iteration against the exact
// fraction of all assignments at each cut value (or a sampled estimate when
// the instance is too wide to enumerate), with the four quality ratios
// marked in cut units.
struct CutsizeData {
    int size = 0;
    int optimal_cut = 0;
    std::vector<std::pair<int, double>> empirical;   // cut -> fraction of shots
    std::vector<std::pair<int, double>> background;  // cut -> fraction of states
    bool background_exact = true;
    double marker_ar = 0.0;
    double marker_cvar = 0.0;
    double marker_gibbs = 0.0;
    double marker_best = 0.0;
};

CutsizeData cutsize_data(const RunData &run, int size);

// --- Width-by-depth fidelity map ------------------------------------------
// Mean normalized fidelity per (circuit width, algorithmic depth) cell from
// fixed-parameter records, with the square footprint a device of the given
// quantum volume certifies (side log2 QV).
struct VolumetricPoint {
    int width = 0;
    int depth = 0;
    double mean_normalized_fidelity = 0.0;
    int count = 0;
};

struct VolumetricData {
    int quantum_volume = 32;
    std::vector<VolumetricPoint> points;
};

VolumetricData volumetric_data(const RunData &run, int quantum_volume = 32);

// Minimal SVG writer backing all the plot renderers.
class SvgCanvas {
  public:
    SvgCanvas(double width, double height);

    void rect(double x, double y, double w, double h, const std::string &fill,
              const std::string &extra = "");
    void line(double x1, double y1, double x2, double y2, const std::string &stroke,
              double stroke_width = 1.0, const std::string &extra = "");
    void text(double x, double y, const std::string &s, double px = 12.0,
              const std::string &anchor = "start", const std::string &fill = "#222222");
    void polyline(const std::vector<std::pair<double, double>> &pts,
                  const std::string &stroke, double stroke_width = 1.5);
    void save(const std::filesystem::path &file);

  private:
    double width_;
    double height_;
    std::ostringstream body_;
};

// Renderers. JSON carries the full data structure, CSV the flat table, SVG
// a self-contained plot. All three are deterministic byte-for-byte in the
// input data.
void render_area(const AreaPlotData &data, PlotFormat format,
                 const std::filesystem::path &file, const ColorScale &scale);
void render_optgap(const OptgapData &data, PlotFormat format,
                   const std::filesystem::path &file);
void render_cutsize(const CutsizeData &data, PlotFormat format,
                    const std::filesystem::path &file);
void render_volumetric(const VolumetricData &data, PlotFormat format,
                       const std::filesystem::path &file);

}  // namespace qopt

#endif
