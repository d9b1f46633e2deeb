// Release gate: every shipping requirement of the measurement pipeline as an
// executable check, one PASS/FAIL line each. Exits nonzero when any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "postsel/closed_forms.hpp"
#include "postsel/csv.hpp"
#include "postsel/figures.hpp"
#include "postsel/observables.hpp"
#include "postsel/postselect.hpp"
#include "postsel/states.hpp"
#include "postsel/validate.hpp"

using namespace postsel;

namespace {

constexpr double kPi = std::numbers::pi;

struct CriterionResult {
  bool ok = true;
  std::string note;  // first failure detail, empty when ok
};

void fail(CriterionResult& res, const std::string& note) {
  if (res.ok) {
    res.ok = false;
    res.note = note;
  }
}

bool within_rel(double got, double want, double rtol) {
  return std::abs(got - want) <= rtol * std::max(1.0, std::abs(want));
}

// ── 1: initial-state closed forms ───────────────────────────────────────

CriterionResult check_initial_closed_forms() {
  CriterionResult res;
  const double rtol = 1e-8;
  const double probes[] = {0.0, 0.7, kPi / 2};
  for (double eta : {0.2, 0.5, 1.0}) {
    const double delta = kPi / 3;
    const FockVector v = squeezed_vacuum(eta, delta, 192);
    if (!within_rel(closed::squeezed_init_g2(eta), g2(v), rtol)) {
      fail(res, "squeezed g2 at eta=" + std::to_string(eta));
    }
    if (!within_rel(closed::squeezed_init_q(eta), mandel_q(v), rtol)) {
      fail(res, "squeezed Q at eta=" + std::to_string(eta));
    }
    for (double phi : probes) {
      if (!within_rel(closed::squeezed_init_sphi(eta, delta, phi),
                      squeezing_parameter(v, phi), rtol)) {
        fail(res, "squeezed S_phi at eta=" + std::to_string(eta));
      }
    }
  }
  for (double r : {0.3, 0.5, 1.0}) {
    for (double omega : {0.0, kPi / 2, kPi}) {
      const FockVector v = cat(r, 0.0, omega, 192);
      if (!within_rel(closed::cat_init_g2(r, omega), g2(v), rtol)) {
        fail(res, "cat g2 at r=" + std::to_string(r) +
                      " omega=" + std::to_string(omega));
      }
      if (!within_rel(closed::cat_init_q(r, omega), mandel_q(v), rtol)) {
        fail(res, "cat Q at r=" + std::to_string(r) +
                      " omega=" + std::to_string(omega));
      }
      for (double phi : probes) {
        if (!within_rel(closed::cat_init_sphi({r, 0.0}, omega, phi),
                        squeezing_parameter(v, phi), rtol)) {
          fail(res, "cat S_phi at r=" + std::to_string(r) +
                        " omega=" + std::to_string(omega));
        }
      }
    }
  }
  return res;
}

// ── 2: zero-coupling degeneracy ─────────────────────────────────────────

CriterionResult check_zero_coupling() {
  CriterionResult res;
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> uth(0.0, 3.0);
  std::uniform_real_distribution<double> uph(0.0, 2 * kPi);
  const FockVector pointers[] = {
      coherent(1.0, kPi / 3, 128),
      squeezed_vacuum(0.5, kPi / 3, 128),
      cat(0.5, kPi / 3, kPi / 2, 128),
  };
  for (const FockVector& ptr : pointers) {
    for (int k = 0; k < 20; ++k) {
      const double theta = uth(rng), phi = uph(rng);
      auto [fin, weight] =
          apply_postselected_measurement({0.0, theta, phi}, ptr);
      const double fid = std::norm(inner(fin, ptr));
      if (fid < 1.0 - 1e-12) {
        fail(res, "fidelity " + std::to_string(fid) +
                      " at theta=" + std::to_string(theta));
      }
      const double c = std::cos(theta / 2.0);
      if (std::abs(weight - c * c) > 1e-12) {
        fail(res, "success off cos^2(theta/2) at theta=" +
                      std::to_string(theta));
      }
    }
  }
  return res;
}

// ── 3: closed forms vs numeric pipeline over the release grid ───────────

CriterionResult check_release_grid() {
  CriterionResult res;
  const ValidationResult val = validate_all(default_grid());
  if (val.summary.fail != 0) {
    fail(res, std::to_string(val.summary.fail) + " failing reports");
  }
  for (const ClosedFormReport& r : val.reports) {
    if (r.status == MatchStatus::Fail) {
      fail(res, std::string("Fail at ") + to_string(r.quantity));
    }
    if (r.abs_err >= 1e-8 * std::max(1.0, std::abs(r.oracle_value))) {
      fail(res, std::string("corrected form off at ") + to_string(r.quantity));
    }
  }
  return res;
}

// ── 4: coherent conditional state vs two-branch closed form ─────────────

CriterionResult check_two_branch_state() {
  CriterionResult res;
  const std::size_t dim = 192;
  const double phi_sys = kPi / 4;
  const ComplexAmp alpha = std::polar(1.0, kPi / 3);
  for (double s : {0.2, 1.0, 2.0}) {
    for (double theta : {kPi / 9, kPi / 3, 7 * kPi / 9}) {
      const FockVector ptr = coherent(1.0, kPi / 3, dim);
      auto [fin, weight] =
          apply_postselected_measurement({s, theta, phi_sys}, ptr);
      (void)weight;
      const double c = std::cos(theta / 2.0);
      const ComplexAmp spin = std::polar(std::sin(theta / 2.0), phi_sys);
      const ComplexAmp a_up = alpha + s / 2.0;
      const ComplexAmp a_down = alpha - s / 2.0;
      const ComplexAmp ph_up = std::polar(1.0, -(s / 2.0) * alpha.imag());
      const ComplexAmp ph_down = std::polar(1.0, +(s / 2.0) * alpha.imag());
      const FockVector up = coherent(std::abs(a_up), std::arg(a_up), dim);
      const FockVector down = coherent(std::abs(a_down), std::arg(a_down), dim);
      std::vector<ComplexAmp> amps(dim);
      for (std::size_t n = 0; n < dim; ++n) {
        amps[n] = 0.5 * (c + spin) * ph_up * up.amps[n] +
                  0.5 * (c - spin) * ph_down * down.amps[n];
      }
      auto [unit, nrm] = normalize(make_state(std::move(amps)));
      (void)nrm;
      const double fid = std::norm(inner(fin, unit));
      if (fid < 1.0 - 1e-9) {
        fail(res, "fidelity " + std::to_string(fid) + " at s=" +
                      std::to_string(s) + " theta=" + std::to_string(theta));
      }
    }
  }
  return res;
}

// ── 5: regime sign checks on the rendered figures ────────────────────────

double parse_cell(const std::string& cell) { return std::stod(cell); }

// Scan table cells in data columns whose header passes `col_ok`, skipping
// empty cells and the x/warning columns.
void scan(const CsvTable& t, const std::function<bool(const std::string&)>& col_ok,
          const std::function<bool(std::size_t)>& row_ok,
          const std::function<void(double)>& visit) {
  for (std::size_t c = 1; c + 1 < t.header.size(); ++c) {
    if (!col_ok(t.header[c])) continue;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (!row_ok(i)) continue;
      const std::string& cell = t.rows[i][c];
      if (!cell.empty()) visit(parse_cell(cell));
    }
  }
}

const auto kAllCols = [](const std::string&) { return true; };
const auto kAllRows = [](std::size_t) { return true; };

CriterionResult check_figure_regimes() {
  CriterionResult res;
  const auto table = [](const char* id) { return render_figure(preset(id)); };

  {  // (a) weak coupling reaches sub-Poissonian g2; strong coupling exceeds 1.
    bool sub = false, super = false;
    for (const char* id : {"fig2a", "fig2b"}) {
      const CsvTable t = table(id);
      scan(t, [](const std::string& h) { return h == "g2(s=0.2)"; }, kAllRows,
           [&](double v) { sub = sub || (v > 0.0 && v < 1.0); });
      scan(t, [](const std::string& h) { return h == "g2(s=2)"; }, kAllRows,
           [&](double v) { super = super || v > 1.0; });
    }
    if (!sub) fail(res, "no 0 < g2 < 1 cell at s=0.2");
    if (!super) fail(res, "no g2 > 1 cell at s=2");
  }
  {  // (b) in-phase quadrature never squeezed at small angle; the conjugate is.
    bool floor_ok = true;
    scan(table("fig3c"), kAllCols, kAllRows,
         [&](double v) { floor_ok = floor_ok && v >= -1e-9; });
    if (!floor_ok) fail(res, "negative cell in the no-squeezing panel");
    for (const char* id : {"fig3a", "fig3b", "fig3d"}) {
      bool squeezed = false;
      scan(table(id), kAllCols, kAllRows,
           [&](double v) { squeezed = squeezed || v < -1e-3; });
      if (!squeezed) fail(res, std::string("no squeezing found in ") + id);
    }
  }
  {  // (c) moderately squeezed pointer turns sub-Poissonian at s >= 0.5.
    const auto strong = [](const std::string& h) {
      return h == "g2(s=0.5)" || h == "g2(s=1)" || h == "g2(s=2)" ||
             h == "q(s=0.5)" || h == "q(s=1)" || h == "q(s=2)";
    };
    bool g2_sub = false, q_sub = false;
    const CsvTable b = table("fig5b");
    const CsvTable d = table("fig5d");
    const auto eta_below_one = [&](const CsvTable& t) {
      return [&t](std::size_t i) { return parse_cell(t.rows[i][0]) < 1.0; };
    };
    scan(b, strong, eta_below_one(b),
         [&](double v) { g2_sub = g2_sub || v < 1.0; });
    scan(d, strong, eta_below_one(d), [&](double v) { q_sub = q_sub || v < 0.0; });
    if (!g2_sub) fail(res, "no g2 < 1 in the eta < 1 region");
    if (!q_sub) fail(res, "no Q < 0 in the eta < 1 region");
  }
  {  // (d) the conjugate squeezed quadrature gains nothing from the coupling.
    bool floor_ok = true;
    scan(table("fig6d"), kAllCols, kAllRows,
         [&](double v) { floor_ok = floor_ok && v >= -1e-9; });
    if (!floor_ok) fail(res, "negative cell in the conjugate-quadrature panel");
  }
  {  // (e) the odd cat never squeezes.
    bool floor_ok = true;
    scan(table("fig9d"), kAllCols, kAllRows,
         [&](double v) { floor_ok = floor_ok && v >= -1e-9; });
    const CsvTable c = table("fig9c");
    scan(c, kAllCols,
         [&](std::size_t i) {
           return std::abs(parse_cell(c.rows[i][0]) - kPi) < 1e-9;
         },
         [&](double v) { floor_ok = floor_ok && v >= -1e-9; });
    if (!floor_ok) fail(res, "negative cell in an odd-cat panel");
  }
  return res;
}

// ── 6: randomized invariant suite ────────────────────────────────────────

CriterionResult check_invariant_suite() {
  CriterionResult res;
  std::mt19937 rng(987654321);
  std::uniform_real_distribution<double> us(0.0, 2.5);
  std::uniform_real_distribution<double> uth(0.0, 2.8);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  std::uniform_real_distribution<double> ur(0.0, 1.5);
  std::uniform_real_distribution<double> ue(0.05, 1.2);
  std::uniform_real_distribution<double> ucat(0.2, 1.2);

  const auto check_state = [&](const FockVector& v, double phi,
                               const char* tag) {
    double sum = 0.0;
    for (double p : photon_distribution(v)) sum += p;
    if (std::abs(sum - 1.0) > 1e-10) {
      fail(res, std::string(tag) + ": photon distribution sum");
    }
    const double q = mandel_q(v);
    if (q < -1.0 - 1e-9) fail(res, std::string(tag) + ": Q below -1");
    const double s0 = squeezing_parameter(v, phi);
    const double s1 = squeezing_parameter(v, phi + kPi / 2);
    if (s0 < -0.5 - 1e-9 || s1 < -0.5 - 1e-9) {
      fail(res, std::string(tag) + ": S_phi below -1/2");
    }
    if ((s0 + 0.5) * (s1 + 0.5) < 0.25 - 1e-9) {
      fail(res, std::string(tag) + ": uncertainty product below 1/4");
    }
    if (std::abs(squeezing_parameter(v, phi + kPi) - s0) > 1e-10) {
      fail(res, std::string(tag) + ": S_phi not pi-periodic");
    }
    const double n = mean_occupation(v);
    if (n > 1e-9 && std::abs(q - n * (g2(v) - 1.0)) > 1e-9) {
      fail(res, std::string(tag) + ": Q vs g2 identity");
    }
  };

  for (int k = 0; k < 1000; ++k) {
    PointerSpec spec;
    switch (k % 3) {
      case 0:
        spec.kind = PointerKind::Coherent;
        spec.r = ur(rng);
        spec.vartheta = angle(rng);
        break;
      case 1:
        spec.kind = PointerKind::SqueezedVacuum;
        spec.eta = ue(rng);
        spec.delta = angle(rng);
        break;
      default:
        spec.kind = PointerKind::Cat;
        spec.r = ucat(rng);
        spec.delta = angle(rng);
        spec.omega = angle(rng);
        break;
    }
    const MeasurementConfig cfg{us(rng), uth(rng), angle(rng)};
    const double phi = angle(rng);
    const FockVector ptr = build_pointer(spec, cfg.s, 128);
    if (k % 4 == 0) check_state(ptr, phi, "initial");
    auto [fin, weight] = apply_postselected_measurement(cfg, ptr);
    if (weight <= 0.0 || weight > 1.0 + 1e-12) {
      fail(res, "success probability out of (0, 1]");
    }
    check_state(fin, phi, "conditional");
    if (!res.ok) break;
  }
  return res;
}

// ── 7: figure determinism across runs and thread counts ─────────────────

CriterionResult check_determinism() {
  CriterionResult res;
  for (const FigurePreset& p : figure_presets()) {
    const std::string first = to_string(render_figure(p, 128, 1));
    const std::string second = to_string(render_figure(p, 128, 1));
    const std::string threaded = to_string(render_figure(p, 128, 4));
    if (first != second) {
      fail(res, p.id + " differs between two runs");
    }
    if (first != threaded) {
      fail(res, p.id + " differs across thread counts");
    }
  }
  return res;
}

struct Criterion {
  int index;
  const char* description;
  CriterionResult (*run)();
  double budget_seconds;  // 0 = no individual budget
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "initial-state closed forms match numerics (g2, Q, S_phi)",
       check_initial_closed_forms, 5.0},
      {2, "zero coupling returns the pointer with success cos^2(theta/2)",
       check_zero_coupling, 0.0},
      {3, "release-grid closed-form validation has zero failures",
       check_release_grid, 60.0},
      {4, "coherent conditional state matches the two-branch closed form",
       check_two_branch_state, 0.0},
      {5, "rendered figure regimes show the expected statistics signs",
       check_figure_regimes, 20.0},
      {6, "1000 randomized cases satisfy all six state invariants",
       check_invariant_suite, 0.0},
      {7, "figure presets render byte-identically across runs and threads",
       check_determinism, 0.0},
  };

  int failures = 0;
  double total = 0.0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult res;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res.ok = false;
      res.note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    total += secs;
    if (c.budget_seconds > 0.0 && secs >= c.budget_seconds) {
      res.ok = false;
      res.note = "over the " + std::to_string(c.budget_seconds) + "s budget";
    }
    std::printf("%s  %d  %s  (%.2fs)%s%s\n", res.ok ? "PASS" : "FAIL", c.index,
                c.description, secs, res.note.empty() ? "" : " -- ",
                res.note.c_str());
    if (!res.ok) ++failures;
  }
  std::printf("total runtime %.2fs; %d of 7 criteria failed\n", total,
              failures);
  return failures == 0 ? 0 : 1;
}
