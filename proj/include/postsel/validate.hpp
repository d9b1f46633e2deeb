#pragma once

// Cross-validation: every closed form evaluated over a parameter grid and
// compared against the truncated-basis numeric pipeline, plus the catalog of
// defects found in the originally printed expressions.

#include <cstddef>
#include <optional>
#include <vector>

#include "postsel/fock.hpp"
#include "postsel/postselect.hpp"
#include "postsel/states.hpp"

namespace postsel {

enum class Quantity {
  CohNorm,
  CohMeanN,
  CohA2A2,
  CohXphi,
  CohA2,
  SqNorm,
  SqAmp,
  SqMeanN,
  SqXphi,
  SqX2,
  SqInitG2,
  SqInitQ,
  SqInitSphi,
  CatNorm,
  CatMeanN,
  CatA2A2,
  CatAmean,
  CatA2,
  CatInitQ,
  CatInitG2,
  CatInitSphi,
};
const char* to_string(Quantity q);

// Match: the corrected closed form agrees with the numeric pipeline and no
//   catalogued printed variant disagrees at this grid point.
// TypoSuspected: the corrected form agrees but the printed variant deviates
//   here (or cannot be evaluated at all) — evidence of the catalogued defect.
// Fail: the corrected form itself disagrees with the pipeline.
enum class MatchStatus { Match, TypoSuspected, Fail };
const char* to_string(MatchStatus s);

// One closed form at one grid point. literal_err is the printed variant's
// own deviation |printed − oracle| when the catalog holds an evaluable
// variant for this quantity; absent otherwise.
struct ClosedFormReport {
  Quantity quantity{};
  PointerSpec pointer;
  MeasurementConfig cfg;
  double phi_quad = 0.0;
  ComplexAmp analytic_value{0.0, 0.0};  // corrected closed form
  ComplexAmp oracle_value{0.0, 0.0};    // numeric pipeline
  double abs_err = 0.0;
  std::optional<double> literal_err;
  MatchStatus status = MatchStatus::Match;
};

// Agreement means |analytic − oracle| < tol.closed_form_rel·max(1, |oracle|).
// `catalogued` marks quantities with a printed-variant entry; for those,
// literal_err == nullopt means the variant cannot be evaluated and counts as
// deviating.
MatchStatus classify(double abs_err, double oracle_magnitude, bool catalogued,
                     std::optional<double> literal_err);

// Printed-variant catalog: what the source derivation printed, what the
// two-branch algebra actually gives, and how they differ. Strings are
// ASCII-math; A stands for the weak value, ov for the branch-overlap decay.
struct TypoEntry {
  Quantity quantity{};
  bool evaluable = true;
  const char* printed_form = "";
  const char* corrected_form = "";
  const char* defect = "";
};
const std::vector<TypoEntry>& typo_catalog();
const TypoEntry* find_typo_entry(Quantity q);

struct ValidationPoint {
  PointerSpec pointer;
  MeasurementConfig cfg;
  double phi_quad = 0.0;
};

struct ValidationGrid {
  std::vector<ValidationPoint> points;
};

// 3 couplings × 3 preselection angles × 3 pointer-parameter values per
// family; the release gate ("small").
ValidationGrid default_grid();
// Denser: 5 couplings × 4 angles × 2 azimuths × 4 pointer values per family.
ValidationGrid full_grid();

// Per-family report sets at one grid point (pointer params + measurement).
std::vector<ClosedFormReport> coherent_closed_forms(
    ComplexAmp alpha, const MeasurementConfig& cfg, double phi_quad,
    std::size_t start_dim = 128);
std::vector<ClosedFormReport> squeezed_closed_forms(
    double eta, double delta, const MeasurementConfig& cfg, double phi_quad,
    std::size_t start_dim = 128);
std::vector<ClosedFormReport> cat_closed_forms(double r, double delta,
                                               double omega,
                                               const MeasurementConfig& cfg,
                                               double phi_quad,
                                               std::size_t start_dim = 128);

struct ValidationSummary {
  std::size_t match = 0;
  std::size_t typo_suspected = 0;
  std::size_t fail = 0;
};

struct ValidationResult {
  std::vector<ClosedFormReport> reports;
  ValidationSummary summary;
};

// Runs every closed form over the grid in deterministic order. fault, when
// set, perturbs that quantity's analytic value by 1e−3 — a fixture for
// negative-path tests of the Fail machinery.
ValidationResult validate_all(const ValidationGrid& grid,
                              std::optional<Quantity> fault = std::nullopt,
                              std::size_t start_dim = 128);

}  // namespace postsel
