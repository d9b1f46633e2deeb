#pragma once

// Preset reproduction grids: each preset renders one panel's worth of curves
// (photon distributions, g², Mandel Q, or the squeezing parameter) over a
// fixed x axis, one CSV column per curve, with every constant hard-coded.

#include <cstddef>
#include <string>
#include <vector>

#include "postsel/config.hpp"
#include "postsel/csv.hpp"

namespace postsel {

enum class CurveRole {
  Final,        // observable of the conditional state after the measurement
  Initial,      // observable of the initial pointer itself
  WeakModulus,  // |weak value| = tan(θ/2); x must be theta
};

struct FigureCurve {
  std::string label;  // column header
  CurveRole role = CurveRole::Final;
  OutputKind kind = OutputKind::MeanN;  // G2, MandelQ, SPhi, or Pn
  PointerSpec pointer;
  MeasurementConfig cfg;
  double phi_quad = 0.0;
};

struct FigurePreset {
  std::string id;       // fig1a … fig9d
  std::string summary;  // one line for --list
  std::string x_param;  // "n" for distribution panels, else an axis param
  double x_start = 0.0;
  double x_stop = 0.0;
  std::size_t x_count = 0;
  std::vector<FigureCurve> curves;
};

// All 30 presets in id order.
const std::vector<FigurePreset>& figure_presets();

// Throws UnknownPreset for ids outside the table.
const FigurePreset& preset(const std::string& id);

// Rows over the x grid (or n = 0..20 for distribution panels), one column
// per curve plus a trailing warning column. Per-point failures leave empty
// cells and a note; output bytes are independent of the thread count.
CsvTable render_figure(const FigurePreset& p, std::size_t start_dim = 128,
                       unsigned threads = 1);

}  // namespace postsel
