#include "postsel/figures.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "postsel/errors.hpp"
#include "postsel/observables.hpp"
#include "postsel/postselect.hpp"
#include "postsel/states.hpp"
#include "postsel/sweep.hpp"

namespace postsel {

namespace {

constexpr double kPi = std::numbers::pi;

struct Family {
  std::vector<double> values;
  std::vector<std::string> labels;
};

const Family& theta_family() {
  static const Family f{{kPi / 9, kPi / 3, 5 * kPi / 9, 7 * kPi / 9},
                        {"theta=pi/9", "theta=pi/3", "theta=5pi/9",
                         "theta=7pi/9"}};
  return f;
}

const Family& s_family_obs() {
  static const Family f{{0.2, 0.5, 1.0, 2.0},
                        {"s=0.2", "s=0.5", "s=1", "s=2"}};
  return f;
}

const Family& s_family_pn() {
  static const Family f{{0.5, 1.0, 2.0, 3.0}, {"s=0.5", "s=1", "s=2", "s=3"}};
  return f;
}

const Family& r_family() {
  static const Family f{{0.5, 1.0, 1.5}, {"r=0.5", "r=1", "r=1.5"}};
  return f;
}

PointerSpec coh(double r, double vartheta) {
  PointerSpec p;
  p.kind = PointerKind::Coherent;
  p.r = r;
  p.vartheta = vartheta;
  return p;
}

PointerSpec sqz(double eta, double delta) {
  PointerSpec p;
  p.kind = PointerKind::SqueezedVacuum;
  p.eta = eta;
  p.delta = delta;
  return p;
}

PointerSpec cat_ptr(double r, double delta, double omega) {
  PointerSpec p;
  p.kind = PointerKind::Cat;
  p.r = r;
  p.delta = delta;
  p.omega = omega;
  return p;
}

std::string obs_name(OutputKind k) {
  switch (k) {
    case OutputKind::G2: return "g2";
    case OutputKind::MandelQ: return "q";
    case OutputKind::SPhi: return "s_phi";
    case OutputKind::Pn: return "pn";
    default: return "value";
  }
}

void set_param(FigureCurve& c, const std::string& param, double value) {
  SweepSpec tmp;
  tmp.pointer = c.pointer;
  tmp.cfg = c.cfg;
  tmp.phi_quad = c.phi_quad;
  apply_param(tmp, param, value);
  c.pointer = tmp.pointer;
  c.cfg = tmp.cfg;
  c.phi_quad = tmp.phi_quad;
}

// One Final curve per family value, `param` swept across the family.
void add_family(std::vector<FigureCurve>& out, OutputKind kind,
                const PointerSpec& ptr, const MeasurementConfig& cfg,
                double phi_quad, const std::string& param, const Family& fam) {
  for (std::size_t i = 0; i < fam.values.size(); ++i) {
    FigureCurve c;
    c.label = obs_name(kind) + "(" + fam.labels[i] + ")";
    c.role = CurveRole::Final;
    c.kind = kind;
    c.pointer = ptr;
    c.cfg = cfg;
    c.phi_quad = phi_quad;
    set_param(c, param, fam.values[i]);
    out.push_back(std::move(c));
  }
}

void add_initial(std::vector<FigureCurve>& out, OutputKind kind,
                 const PointerSpec& ptr, double phi_quad) {
  FigureCurve c;
  c.label = obs_name(kind) + "(initial)";
  c.role = CurveRole::Initial;
  c.kind = kind;
  c.pointer = ptr;
  c.phi_quad = phi_quad;
  out.push_back(std::move(c));
}

void add_weak_modulus(std::vector<FigureCurve>& out) {
  FigureCurve c;
  c.label = "abs_weak_value";
  c.role = CurveRole::WeakModulus;
  out.push_back(std::move(c));
}

FigurePreset grid_preset(std::string id, std::string summary,
                         std::string x_param, double x_start, double x_stop,
                         std::size_t x_count) {
  FigurePreset p;
  p.id = std::move(id);
  p.summary = std::move(summary);
  p.x_param = std::move(x_param);
  p.x_start = x_start;
  p.x_stop = x_stop;
  p.x_count = x_count;
  return p;
}

FigurePreset dist_preset(std::string id, std::string summary) {
  FigurePreset p;
  p.id = std::move(id);
  p.summary = std::move(summary);
  p.x_param = "n";
  p.x_count = 21;
  return p;
}

std::vector<FigurePreset> make_presets() {
  std::vector<FigurePreset> v;

  // ── coherent pointer, α = e^{iπ/3} unless swept ───────────────────────
  {
    const PointerSpec p1 = coh(1.0, kPi / 3);
    MeasurementConfig base{2.0, 0.0, kPi / 4};
    FigurePreset a = dist_preset(
        "fig1a",
        "photon distribution of the measured coherent pointer (r=1, "
        "vartheta=pi/3, phi_sys=pi/4, s=2) across preselection angles, plus "
        "the initial distribution");
    add_initial(a.curves, OutputKind::Pn, p1, 0.0);
    add_family(a.curves, OutputKind::Pn, p1, base, 0.0, "theta",
               theta_family());
    v.push_back(std::move(a));

    MeasurementConfig base_b{0.0, 7 * kPi / 9, kPi / 4};
    FigurePreset b = dist_preset(
        "fig1b",
        "photon distribution of the measured coherent pointer (r=1, "
        "vartheta=pi/3, phi_sys=pi/4, theta=7pi/9) for several couplings");
    add_family(b.curves, OutputKind::Pn, p1, base_b, 0.0, "s", s_family_pn());
    v.push_back(std::move(b));
  }
  {
    const PointerSpec pr = coh(0.0, kPi / 3);  // r swept
    const double phi_sys = 4 * kPi / 5;
    FigurePreset a = grid_preset(
        "fig2a",
        "g2 of the measured coherent pointer vs r (vartheta=pi/3, "
        "phi_sys=4pi/5, theta=pi/3) for several couplings, plus the "
        "initial-state curve",
        "r", 0.0, 2.0, 41);
    add_initial(a.curves, OutputKind::G2, pr, 0.0);
    add_family(a.curves, OutputKind::G2, pr, {0.0, kPi / 3, phi_sys}, 0.0,
               "s", s_family_obs());
    v.push_back(std::move(a));

    FigurePreset b = grid_preset(
        "fig2b",
        "g2 of the measured coherent pointer vs r (vartheta=pi/3, "
        "phi_sys=4pi/5, theta=7pi/9) for several couplings, plus the "
        "initial-state curve",
        "r", 0.0, 2.0, 41);
    add_initial(b.curves, OutputKind::G2, pr, 0.0);
    add_family(b.curves, OutputKind::G2, pr, {0.0, 7 * kPi / 9, phi_sys}, 0.0,
               "s", s_family_obs());
    v.push_back(std::move(b));

    FigurePreset c = grid_preset(
        "fig2c",
        "Mandel Q of the measured coherent pointer vs preselection angle "
        "(vartheta=pi/3, phi_sys=4pi/5, s=0.2) for several r, with the weak "
        "value modulus alongside",
        "theta", 0.0, 8 * kPi / 9, 41);
    add_weak_modulus(c.curves);
    add_family(c.curves, OutputKind::MandelQ, coh(0.0, kPi / 3),
               {0.2, 0.0, phi_sys}, 0.0, "r", r_family());
    v.push_back(std::move(c));

    FigurePreset d = grid_preset(
        "fig2d",
        "Mandel Q of the measured coherent pointer vs preselection angle "
        "(vartheta=pi/3, phi_sys=4pi/5, s=2) for several r, with the weak "
        "value modulus alongside",
        "theta", 0.0, 8 * kPi / 9, 41);
    add_weak_modulus(d.curves);
    add_family(d.curves, OutputKind::MandelQ, coh(0.0, kPi / 3),
               {2.0, 0.0, phi_sys}, 0.0, "r", r_family());
    v.push_back(std::move(d));
  }
  {
    const double phi_sys = 4 * kPi / 5;
    FigurePreset a = grid_preset(
        "fig3a",
        "squeezing parameter at phi_quad=pi/2 of the measured coherent "
        "pointer vs coupling (vartheta=pi/3, phi_sys=4pi/5, theta=pi/9) for "
        "several r",
        "s", 0.0, 3.0, 61);
    add_family(a.curves, OutputKind::SPhi, coh(0.0, kPi / 3),
               {0.0, kPi / 9, phi_sys}, kPi / 2, "r", r_family());
    v.push_back(std::move(a));

    FigurePreset b = grid_preset(
        "fig3b",
        "squeezing parameter at phi_quad=pi/2 of the measured coherent "
        "pointer vs coupling (vartheta=pi/3, phi_sys=4pi/5, theta=7pi/9) for "
        "several r",
        "s", 0.0, 3.0, 61);
    add_family(b.curves, OutputKind::SPhi, coh(0.0, kPi / 3),
               {0.0, 7 * kPi / 9, phi_sys}, kPi / 2, "r", r_family());
    v.push_back(std::move(b));

    FigurePreset c = grid_preset(
        "fig3c",
        "squeezing parameter at phi_quad=0 of the measured coherent pointer "
        "vs coupling (vartheta=pi/3, phi_sys=4pi/5, theta=pi/9) for several "
        "r",
        "s", 0.0, 3.0, 61);
    add_family(c.curves, OutputKind::SPhi, coh(0.0, kPi / 3),
               {0.0, kPi / 9, phi_sys}, 0.0, "r", r_family());
    v.push_back(std::move(c));

    FigurePreset d = grid_preset(
        "fig3d",
        "squeezing parameter at phi_quad=pi/2 of the measured coherent "
        "pointer vs r (vartheta=pi/3, phi_sys=4pi/5, s=2) across "
        "preselection angles",
        "r", 0.0, 2.0, 41);
    add_family(d.curves, OutputKind::SPhi, coh(0.0, kPi / 3),
               {2.0, 0.0, phi_sys}, kPi / 2, "theta", theta_family());
    v.push_back(std::move(d));
  }

  // ── squeezed-vacuum pointer ───────────────────────────────────────────
  {
    const PointerSpec p4 = sqz(0.5, kPi / 3);
    FigurePreset a = dist_preset(
        "fig4a",
        "photon distribution of the measured squeezed pointer (eta=0.5, "
        "delta=pi/3, phi_sys=pi/3, s=1) across preselection angles, plus the "
        "initial distribution");
    add_initial(a.curves, OutputKind::Pn, p4, 0.0);
    add_family(a.curves, OutputKind::Pn, p4, {1.0, 0.0, kPi / 3}, 0.0,
               "theta", theta_family());
    v.push_back(std::move(a));

    FigurePreset b = dist_preset(
        "fig4b",
        "photon distribution of the measured squeezed pointer (eta=0.5, "
        "delta=pi/3, phi_sys=pi/3, theta=7pi/9) for several couplings");
    add_family(b.curves, OutputKind::Pn, p4, {0.0, 7 * kPi / 9, kPi / 3}, 0.0,
               "s", s_family_pn());
    v.push_back(std::move(b));
  }
  {
    FigurePreset a = grid_preset(
        "fig5a",
        "g2 of the measured squeezed pointer vs coupling (eta=0.2, "
        "delta=pi/3, phi_sys=pi/3) across preselection angles",
        "s", 0.0, 3.0, 61);
    add_family(a.curves, OutputKind::G2, sqz(0.2, kPi / 3),
               {0.0, 0.0, kPi / 3}, 0.0, "theta", theta_family());
    v.push_back(std::move(a));

    FigurePreset b = grid_preset(
        "fig5b",
        "g2 of the measured squeezed pointer vs squeeze strength "
        "(delta=pi/3, phi_sys=pi/3, theta=7pi/9) for several couplings",
        "eta", 0.0, 1.5, 61);
    add_family(b.curves, OutputKind::G2, sqz(0.0, kPi / 3),
               {0.0, 7 * kPi / 9, kPi / 3}, 0.0, "s", s_family_obs());
    v.push_back(std::move(b));

    FigurePreset c = grid_preset(
        "fig5c",
        "Mandel Q of the measured squeezed pointer vs coupling (eta=0.2, "
        "delta=pi/3, phi_sys=pi/3) across preselection angles",
        "s", 0.0, 3.0, 61);
    add_family(c.curves, OutputKind::MandelQ, sqz(0.2, kPi / 3),
               {0.0, 0.0, kPi / 3}, 0.0, "theta", theta_family());
    v.push_back(std::move(c));

    FigurePreset d = grid_preset(
        "fig5d",
        "Mandel Q of the measured squeezed pointer vs squeeze strength "
        "(delta=pi/3, phi_sys=pi/3, theta=7pi/9) for several couplings",
        "eta", 0.0, 1.5, 61);
    add_family(d.curves, OutputKind::MandelQ, sqz(0.0, kPi / 3),
               {0.0, 7 * kPi / 9, kPi / 3}, 0.0, "s", s_family_obs());
    v.push_back(std::move(d));
  }
  {
    FigurePreset a = grid_preset(
        "fig6a",
        "squeezing parameter at phi_quad=0 of the measured squeezed pointer "
        "vs squeeze strength (delta=0, phi_sys=pi/3, theta=pi/9) for several "
        "couplings",
        "eta", 0.0, 1.5, 61);
    add_family(a.curves, OutputKind::SPhi, sqz(0.0, 0.0),
               {0.0, kPi / 9, kPi / 3}, 0.0, "s", s_family_obs());
    v.push_back(std::move(a));

    FigurePreset b = grid_preset(
        "fig6b",
        "squeezing parameter of the measured squeezed pointer vs quadrature "
        "angle (eta=0.5, delta=pi/3, phi_sys=pi/3, theta=pi/9) for several "
        "couplings",
        "phi_quad", 0.0, kPi, 65);
    add_family(b.curves, OutputKind::SPhi, sqz(0.5, kPi / 3),
               {0.0, kPi / 9, kPi / 3}, 0.0, "s", s_family_obs());
    v.push_back(std::move(b));

    FigurePreset c = grid_preset(
        "fig6c",
        "squeezing parameter at phi_quad=0 of the measured squeezed pointer "
        "vs coupling (eta=0.5, delta=0, phi_sys=pi/3) across preselection "
        "angles",
        "s", 0.0, 3.0, 61);
    add_family(c.curves, OutputKind::SPhi, sqz(0.5, 0.0),
               {0.0, 0.0, kPi / 3}, 0.0, "theta", theta_family());
    v.push_back(std::move(c));

    FigurePreset d = grid_preset(
        "fig6d",
        "squeezing parameter at phi_quad=pi/2 of the measured squeezed "
        "pointer vs coupling (eta=0.5, delta=0, phi_sys=pi/3) across "
        "preselection angles",
        "s", 0.0, 3.0, 61);
    add_family(d.curves, OutputKind::SPhi, sqz(0.5, 0.0),
               {0.0, 0.0, kPi / 3}, kPi / 2, "theta", theta_family());
    v.push_back(std::move(d));
  }

  // ── cat pointer ───────────────────────────────────────────────────────
  {
    const PointerSpec p7 = cat_ptr(0.5, kPi / 3, 0.0);
    FigurePreset a = dist_preset(
        "fig7a",
        "photon distribution of the measured even cat pointer (r=0.5, "
        "delta=pi/3, omega=0, phi_sys=pi/3, s=1) across preselection angles, "
        "plus the initial distribution");
    add_initial(a.curves, OutputKind::Pn, p7, 0.0);
    add_family(a.curves, OutputKind::Pn, p7, {1.0, 0.0, kPi / 3}, 0.0,
               "theta", theta_family());
    v.push_back(std::move(a));

    FigurePreset b = dist_preset(
        "fig7b",
        "photon distribution of the measured even cat pointer (r=0.5, "
        "delta=pi/3, omega=0, phi_sys=pi/3, theta=7pi/9) for several "
        "couplings");
    add_family(b.curves, OutputKind::Pn, p7, {0.0, 7 * kPi / 9, kPi / 3}, 0.0,
               "s", s_family_pn());
    v.push_back(std::move(b));
  }
  {
    FigurePreset a = grid_preset(
        "fig8a",
        "g2 of the measured cat pointer vs superposition phase (r=0.3, "
        "delta=0, phi_sys=0, theta=pi/9) for several couplings",
        "omega", 0.0, 2 * kPi, 65);
    add_family(a.curves, OutputKind::G2, cat_ptr(0.3, 0.0, 0.0),
               {0.0, kPi / 9, 0.0}, 0.0, "s", s_family_obs());
    v.push_back(std::move(a));

    FigurePreset b = grid_preset(
        "fig8b",
        "g2 of the measured odd cat pointer vs amplitude (delta=0, omega=pi, "
        "phi_sys=0, s=0.5) across preselection angles",
        "r", 0.0, 2.0, 41);
    add_family(b.curves, OutputKind::G2, cat_ptr(0.0, 0.0, kPi),
               {0.5, 0.0, 0.0}, 0.0, "theta", theta_family());
    v.push_back(std::move(b));

    FigurePreset c = grid_preset(
        "fig8c",
        "Mandel Q of the measured cat pointer vs superposition phase (r=0.3, "
        "delta=0, phi_sys=0, theta=pi/9) for several couplings",
        "omega", 0.0, 2 * kPi, 65);
    add_family(c.curves, OutputKind::MandelQ, cat_ptr(0.3, 0.0, 0.0),
               {0.0, kPi / 9, 0.0}, 0.0, "s", s_family_obs());
    v.push_back(std::move(c));

    FigurePreset d = grid_preset(
        "fig8d",
        "Mandel Q of the measured odd cat pointer vs amplitude (delta=0, "
        "omega=pi, phi_sys=0, s=0.5) across preselection angles",
        "r", 0.0, 2.0, 41);
    add_family(d.curves, OutputKind::MandelQ, cat_ptr(0.0, 0.0, kPi),
               {0.5, 0.0, 0.0}, 0.0, "theta", theta_family());
    v.push_back(std::move(d));
  }
  {
    FigurePreset a = grid_preset(
        "fig9a",
        "squeezing parameter of the measured even cat pointer vs quadrature "
        "angle (r=0.3, delta=0, omega=0, phi_sys=0, theta=pi/9) for several "
        "couplings, plus the initial-state curve",
        "phi_quad", 0.0, kPi, 65);
    add_initial(a.curves, OutputKind::SPhi, cat_ptr(0.3, 0.0, 0.0), 0.0);
    add_family(a.curves, OutputKind::SPhi, cat_ptr(0.3, 0.0, 0.0),
               {0.0, kPi / 9, 0.0}, 0.0, "s", s_family_obs());
    v.push_back(std::move(a));

    FigurePreset b = grid_preset(
        "fig9b",
        "squeezing parameter of the measured even cat pointer vs quadrature "
        "angle (r=0.3, delta=0, omega=0, phi_sys=0, s=0.5) across "
        "preselection angles",
        "phi_quad", 0.0, kPi, 65);
    add_family(b.curves, OutputKind::SPhi, cat_ptr(0.3, 0.0, 0.0),
               {0.5, 0.0, 0.0}, 0.0, "theta", theta_family());
    v.push_back(std::move(b));

    FigurePreset c = grid_preset(
        "fig9c",
        "squeezing parameter at phi_quad=pi/2 of the measured cat pointer vs "
        "superposition phase (r=0.3, delta=0, phi_sys=0, s=0.5) across "
        "preselection angles",
        "omega", 0.0, 2 * kPi, 65);
    add_family(c.curves, OutputKind::SPhi, cat_ptr(0.3, 0.0, 0.0),
               {0.5, 0.0, 0.0}, kPi / 2, "theta", theta_family());
    v.push_back(std::move(c));

    FigurePreset d = grid_preset(
        "fig9d",
        "squeezing parameter of the measured odd cat pointer vs quadrature "
        "angle (r=0.3, delta=0, omega=pi, phi_sys=0, theta=pi/9) for several "
        "couplings",
        "phi_quad", 0.0, kPi, 65);
    add_family(d.curves, OutputKind::SPhi, cat_ptr(0.3, 0.0, kPi),
               {0.0, kPi / 9, 0.0}, 0.0, "s", s_family_obs());
    v.push_back(std::move(d));
  }
  return v;
}

std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
  }
  return s;
}

void join_warning(std::string& warn, const std::string& note) {
  if (note.empty()) return;
  if (!warn.empty()) warn += "; ";
  warn += note;
}

// Cell + warning for one curve at one x value (non-distribution panels).
std::pair<std::string, std::string> eval_curve_at(const FigureCurve& c,
                                                  const std::string& x_param,
                                                  double x,
                                                  std::size_t start_dim) {
  try {
    if (c.role == CurveRole::WeakModulus) {
      return {format_number(std::tan(x / 2.0)), ""};
    }
    FigureCurve local = c;
    set_param(local, x_param, x);
    validate_spec(local.pointer);
    const bool final_state = c.role == CurveRole::Final;
    if (final_state) validate_config(local.cfg);
    FockVector state = build_pointer(
        local.pointer, final_state ? local.cfg.s : 0.0, start_dim);
    if (final_state) {
      auto [fin, success] = apply_postselected_measurement(local.cfg, state);
      (void)success;
      state = std::move(fin);
    }
    double val = 0.0;
    switch (c.kind) {
      case OutputKind::G2: val = g2(state); break;
      case OutputKind::MandelQ: val = mandel_q(state); break;
      case OutputKind::SPhi:
        val = squeezing_parameter(state, local.phi_quad);
        break;
      default:
        throw Error("curve kind not valid for a grid panel");
    }
    return {format_number(val), ""};
  } catch (const Error& e) {
    return {"", c.label + ": " + e.what()};
  }
}

CsvTable render_distribution(const FigurePreset& p, std::size_t start_dim) {
  std::vector<std::vector<double>> dists(p.curves.size());
  std::vector<std::string> fails(p.curves.size());
  for (std::size_t i = 0; i < p.curves.size(); ++i) {
    const FigureCurve& c = p.curves[i];
    try {
      const bool final_state = c.role == CurveRole::Final;
      FockVector state =
          build_pointer(c.pointer, final_state ? c.cfg.s : 0.0, start_dim);
      if (final_state) {
        auto [fin, success] = apply_postselected_measurement(c.cfg, state);
        (void)success;
        state = std::move(fin);
      }
      dists[i] = photon_distribution(state);
    } catch (const Error& e) {
      fails[i] = c.label + ": " + e.what();
    }
  }
  std::string warn;
  for (const std::string& f : fails) join_warning(warn, f);
  warn = sanitize(warn);

  CsvTable t;
  t.header.push_back(p.x_param);
  for (const FigureCurve& c : p.curves) t.header.push_back(c.label);
  t.header.push_back("warning");
  for (std::size_t n = 0; n < p.x_count; ++n) {
    std::vector<std::string> row;
    row.push_back(format_number(static_cast<double>(n)));
    for (std::size_t i = 0; i < p.curves.size(); ++i) {
      if (!fails[i].empty()) {
        row.push_back("");
      } else {
        row.push_back(
            format_number(n < dists[i].size() ? dists[i][n] : 0.0));
      }
    }
    row.push_back(warn);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = make_presets();
  return presets;
}

const FigurePreset& preset(const std::string& id) {
  for (const FigurePreset& p : figure_presets()) {
    if (p.id == id) return p;
  }
  throw UnknownPreset("unknown figure preset: '" + id +
                      "' (try `figure --list`)");
}

CsvTable render_figure(const FigurePreset& p, std::size_t start_dim,
                       unsigned threads) {
  if (p.x_param == "n") return render_distribution(p, start_dim);

  std::vector<std::vector<std::string>> rows(p.x_count);
  const auto eval_row = [&](std::size_t i) {
    const double x = p.x_start + (p.x_stop - p.x_start) *
                                     static_cast<double>(i) /
                                     static_cast<double>(p.x_count - 1);
    std::vector<std::string> row;
    row.push_back(format_number(x));
    std::string warn;
    for (const FigureCurve& c : p.curves) {
      auto [cell, note] = eval_curve_at(c, p.x_param, x, start_dim);
      row.push_back(std::move(cell));
      join_warning(warn, note);
    }
    row.push_back(sanitize(warn));
    rows[i] = std::move(row);
  };

  const unsigned nthreads = std::clamp<unsigned>(threads, 1u, 64u);
  if (nthreads <= 1 || p.x_count <= 1) {
    for (std::size_t i = 0; i < p.x_count; ++i) eval_row(i);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < p.x_count; i += nthreads) eval_row(i);
        } catch (...) {
          errs[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errs) {
      if (e) std::rethrow_exception(e);
    }
  }

  CsvTable t;
  t.header.push_back(p.x_param);
  for (const FigureCurve& c : p.curves) t.header.push_back(c.label);
  t.header.push_back("warning");
  t.rows = std::move(rows);
  return t;
}

}  // namespace postsel
