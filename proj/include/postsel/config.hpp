#pragma once

// Flat key=value configuration for the CLI: pointer and measurement
// parameters, optional sweep axes, and the output-column list.
//
// Recognized keys:
//   pointer = coherent | squeezed | cat        (default coherent)
//   r, vartheta, eta, delta, omega             pointer parameters
//   s, theta, phi_sys                          measurement parameters
//   phi_quad                                   quadrature angle for s_phi
//   axis1.param/.start/.stop/.count            first sweep axis
//   axis2.param/.start/.stop/.count            optional second axis
//   outputs = comma list of mean_n | g2 | mandel_q | success | s_phi |
//             s_phi@ANGLE | pn@N | pn@A..B     (default mean_n,g2,mandel_q,success)
//
// Lines are `key = value`; blank lines and lines starting with '#' are
// skipped. Later assignments win; `--set k=v` overrides are applied last.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "postsel/postselect.hpp"
#include "postsel/states.hpp"

namespace postsel {

enum class OutputKind { MeanN, G2, MandelQ, Success, SPhi, Pn };

struct OutputItem {
  OutputKind kind = OutputKind::MeanN;
  bool at_phi_quad = false;  // SPhi: use the point's (possibly swept) phi_quad
  double angle = 0.0;        // SPhi with an explicit angle
  std::size_t n = 0;         // Pn index
  std::string label;         // column header, fixed at parse time
};

struct AxisSpec {
  std::string param;  // one of s, theta, phi_sys, r, vartheta, eta, delta,
                      // omega, phi_quad
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 0;  // ≥ 2
};

struct SweepSpec {
  PointerSpec pointer;
  MeasurementConfig cfg;
  double phi_quad = 0.0;
  std::optional<AxisSpec> axis1;
  std::optional<AxisSpec> axis2;
  std::vector<OutputItem> outputs;
};

using KeyValueMap = std::map<std::string, std::string>;

// Parses config text; throws ConfigParseError naming the offending line.
KeyValueMap parse_config_text(const std::string& text);

// Reads and parses a file; throws ConfigError when unreadable.
KeyValueMap parse_config_file(const std::string& path);

// Applies `k=v` override strings on top of a parsed map.
void apply_overrides(KeyValueMap& map, const std::vector<std::string>& sets);

// Parses one outputs token (e.g. "g2", "s_phi@0.5", "pn@0..20"); pn ranges
// expand to one item per index. Throws ConfigParseError on unknown tokens.
std::vector<OutputItem> parse_output_token(const std::string& token);

// Assembles the full spec. Unknown keys, non-numeric values, bad axis param
// names, or partial axis blocks throw ConfigParseError naming the field;
// count < 2 and axis2-without-axis1 throw ConfigError. Pointer/measurement
// domain checks are left to validate_spec / validate_config.
SweepSpec build_sweep_spec(const KeyValueMap& map);

}  // namespace postsel
