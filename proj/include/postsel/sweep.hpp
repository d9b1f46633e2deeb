#pragma once

// Point evaluation and 1D/2D sweeps over the postselected measurement,
// rendered as deterministic CSV. Grid points are pure computations; the
// engine may fan them out over threads but always merges rows in grid order,
// so output bytes do not depend on the thread count.

#include <cstddef>

#include "postsel/config.hpp"
#include "postsel/csv.hpp"

namespace postsel {

// Applies `param = value` to the spec copy a grid point works on. Throws
// ConfigParseError for names outside the axis-parameter set.
void apply_param(SweepSpec& spec, const std::string& param, double value);

// Single parameter point: one row with the spec's output columns plus a
// trailing `warning` column. Point configs must not carry axes (ConfigError).
// When `outputs` was not set, callers should have left the default; the
// point-specific full set (success, mean_n, g2, mandel_q, s_phi, pn@0..20)
// is chosen by default_point_outputs().
CsvTable run_point(const SweepSpec& spec, std::size_t start_dim = 128);

// Rows ordered axis1-major (axis2 fastest). Per-point compute failures leave
// the point's output cells empty and put a note in the warning column; the
// sweep continues. Requires axis1 (ConfigError otherwise).
CsvTable run_sweep(const SweepSpec& spec, std::size_t start_dim = 128,
                   unsigned threads = 1);

// success, mean_n, g2, mandel_q, s_phi, pn@0..pn@20.
std::vector<OutputItem> default_point_outputs();

}  // namespace postsel
