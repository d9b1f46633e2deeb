#include "postsel/closed_forms.hpp"

#include <cmath>
#include <numbers>

#include "postsel/errors.hpp"
#include "postsel/tolerances.hpp"

namespace postsel::closed {

namespace {

using std::abs;
using std::conj;
using std::cos;
using std::cosh;
using std::exp;
using std::imag;
using std::norm;
using std::real;
using std::sin;
using std::sinh;

const ComplexAmp kI{0.0, 1.0};

ComplexAmp polar1(double angle) { return std::polar(1.0, angle); }

// Branch-coefficient magnitudes and the interference weight shared by all
// two-branch expressions: |1±aw|² and w = (1−aw)(1+āw) = (1−|aw|²) − 2i·Im aw.
struct BranchWeights {
  double dp, dm, aw2;
  ComplexAmp w;
  explicit BranchWeights(ComplexAmp aw)
      : dp(norm(1.0 + aw)),
        dm(norm(1.0 - aw)),
        aw2(norm(aw)),
        w((1.0 - aw) * (1.0 + conj(aw))) {}
};

}  // namespace

// ── coherent pointer ─────────────────────────────────────────────────────

namespace {

// Shared pieces of the two-coherent-branch algebra: branches α ± s/2, branch
// overlap magnitude e^{−s²/2} with interference phase e^{2is·Im α}.
struct CoherentParts {
  BranchWeights bw;
  ComplexAmp ap, am, ex;
  double inv_weight2;  // λ² = 1/(λ⁻²)

  CoherentParts(ComplexAmp alpha, ComplexAmp aw, double s)
      : bw(aw),
        ap(alpha + s / 2.0),
        am(alpha - s / 2.0),
        ex(exp(-s * s / 2.0) * polar1(2.0 * s * imag(alpha))),
        inv_weight2(1.0 / (1.0 + bw.aw2 + real(bw.w * ex))) {}
};

}  // namespace

double coherent_weight(ComplexAmp alpha, ComplexAmp aw, double s) {
  const CoherentParts p(alpha, aw, s);
  return 0.5 / p.inv_weight2;  // λ⁻²/2
}

CoherentMoments coherent_moments(ComplexAmp alpha, ComplexAmp aw, double s) {
  const CoherentParts p(alpha, aw, s);
  const double lam2 = p.inv_weight2;
  const ComplexAmp wex = p.bw.w * p.ex;
  CoherentMoments m;
  m.mean_n = lam2 / 2.0 *
             (p.bw.dp * norm(p.ap) + p.bw.dm * norm(p.am) +
              2.0 * real(wex * conj(p.ap) * p.am));
  m.pair = lam2 / 2.0 *
           (p.bw.dp * norm(p.ap) * norm(p.ap) +
            p.bw.dm * norm(p.am) * norm(p.am) +
            2.0 * real(wex * conj(p.ap) * conj(p.ap) * p.am * p.am));
  m.ladder = lam2 / 2.0 *
             (p.bw.dp * p.ap + p.bw.dm * p.am + wex * p.am + conj(wex) * p.ap);
  m.pair_amp = lam2 / 2.0 *
               (p.bw.dp * p.ap * p.ap + p.bw.dm * p.am * p.am +
                wex * p.am * p.am + conj(wex) * p.ap * p.ap);
  return m;
}

// ── squeezed-vacuum pointer ──────────────────────────────────────────────

namespace {

// ov is the squared magnitude of the branch overlap ⟨D(s/2)ξ|D(−s/2)ξ⟩ =
// e^{−(s²/2)|cosh η + e^{iδ} sinh η|²}; z = cosh 2η + e^{iδ} sinh 2η.
struct SqueezedParts {
  BranchWeights bw;
  ComplexAmp eid, z;
  double ov, sh2, weight;

  SqueezedParts(double eta, double delta, ComplexAmp aw, double s)
      : bw(aw),
        eid(polar1(delta)),
        z(cosh(2.0 * eta) + polar1(delta) * sinh(2.0 * eta)),
        ov(exp(-s * s / 2.0 * norm(cosh(eta) + polar1(delta) * sinh(eta)))),
        sh2(sinh(eta) * sinh(eta)),
        weight(((1.0 + bw.aw2) + (1.0 - bw.aw2) * ov) / 2.0) {}
};

}  // namespace

double squeezed_weight(double eta, double delta, ComplexAmp aw, double s) {
  return SqueezedParts(eta, delta, aw, s).weight;
}

SqueezedMoments squeezed_moments(double eta, double delta, ComplexAmp aw,
                                 double s) {
  const SqueezedParts p(eta, delta, aw, s);
  const double k2 = 1.0 / p.weight;
  const double s2 = s * s;
  SqueezedMoments m;
  const double ncross =
      p.ov * (p.sh2 - s2 / 4.0 * (cosh(4.0 * eta) +
                                  cos(delta) * sinh(4.0 * eta)));
  m.mean_n = k2 / 4.0 *
             (2.0 * (1.0 + p.bw.aw2) * (s2 / 4.0 + p.sh2) +
              2.0 * (1.0 - p.bw.aw2) * ncross);
  m.ladder = k2 * s / 2.0 *
             (real(aw) + kI * imag(aw) * p.ov * p.z);
  const ComplexAmp d2 = s2 / 4.0 - p.eid * sinh(2.0 * eta) / 2.0;
  const ComplexAmp cr2 =
      p.ov * (s2 / 4.0 * p.z * p.z - p.eid * sinh(2.0 * eta) / 2.0);
  m.pair_amp = k2 / 2.0 * ((1.0 + p.bw.aw2) * d2 + (1.0 - p.bw.aw2) * cr2);
  return m;
}

// ── cat pointer ──────────────────────────────────────────────────────────

namespace {

// Branches D(±s/2)K(|α⟩+e^{iω}|−α⟩) expand into four coherent pieces; the
// labels mirror that expansion. Displacement phases e^{±is·Im α/…} cancel in
// the diagonal brackets and survive in the cross ones as cos/sin(2s·Im α).
struct CatParts {
  BranchWeights bw;
  double K2, es, e2a, gp, gm, cs, sn, b, weight;
  ComplexAmp eo, ap, am;

  CatParts(ComplexAmp alpha, double omega, ComplexAmp aw, double s)
      : bw(aw),
        K2(1.0 / (2.0 + 2.0 * exp(-2.0 * norm(alpha)) * cos(omega))),
        es(exp(-s * s / 2.0)),
        e2a(exp(-2.0 * norm(alpha))),
        gp(exp(-2.0 * norm(alpha + s / 2.0))),
        gm(exp(-2.0 * norm(alpha - s / 2.0))),
        cs(cos(2.0 * s * imag(alpha))),
        sn(sin(2.0 * s * imag(alpha))),
        b(s / 2.0),
        eo(polar1(omega)),
        ap(alpha + s / 2.0),
        am(alpha - s / 2.0) {
    weight = (1.0 + bw.aw2) / 2.0 +
             K2 * (1.0 - bw.aw2) * cs * es +
             K2 / 2.0 * real(bw.w * (eo * gp + conj(eo) * gm));
  }
};

}  // namespace

double cat_weight(ComplexAmp alpha, double omega, ComplexAmp aw, double s) {
  return CatParts(alpha, omega, aw, s).weight;
}

CatMoments cat_moments(ComplexAmp alpha, double omega, ComplexAmp aw,
                       double s) {
  const CatParts p(alpha, omega, aw, s);
  const double k2 = 1.0 / p.weight;
  const double sd = s;
  const ComplexAmp mab = -alpha + p.b;        // −α + s/2
  const ComplexAmp cap = conj(alpha) + p.b;   // ᾱ + s/2
  const ComplexAmp cam = conj(alpha) - p.b;   // ᾱ − s/2
  const ComplexAmp e2isy = polar1(2.0 * sd * imag(alpha));
  CatMoments m;

  const double diag_p = norm(p.ap) + norm(mab) +
                        2.0 * real(p.eo * conj(p.ap) * mab) * p.e2a;
  const double diag_m = norm(p.am) + norm(p.ap) -
                        2.0 * real(p.eo * conj(p.am) * p.ap) * p.e2a;
  const ComplexAmp cross_n =
      p.eo * norm(p.ap) * p.gp + conj(p.eo) * norm(p.am) * p.gm -
      2.0 * p.es * real(e2isy * conj(p.ap) * p.am);
  m.mean_n = k2 * p.K2 / 4.0 *
             (p.bw.dp * diag_p + p.bw.dm * diag_m -
              2.0 * real(cross_n * p.bw.w));

  const double diag2_p =
      norm(p.ap) * norm(p.ap) + norm(mab) * norm(mab) +
      2.0 * real(p.eo * cap * cap * mab * mab) * p.e2a;
  const double diag2_m =
      norm(p.am) * norm(p.am) + norm(p.ap) * norm(p.ap) +
      2.0 * real(p.eo * cam * cam * p.ap * p.ap) * p.e2a;
  const ComplexAmp cross2 =
      p.eo * norm(p.ap) * norm(p.ap) * p.gp +
      conj(p.eo) * norm(p.am) * norm(p.am) * p.gm +
      2.0 * p.es * real(e2isy * cap * cap * p.am * p.am);
  m.pair = k2 * p.K2 / 4.0 *
           (p.bw.dp * diag2_p + p.bw.dm * diag2_m +
            2.0 * real(cross2 * p.bw.w));

  const ComplexAmp adiag_p = sd + p.eo * mab * p.e2a + conj(p.eo) * p.ap * p.e2a;
  const ComplexAmp adiag_m =
      -sd - p.eo * p.ap * p.e2a + conj(p.eo) * p.am * p.e2a;
  const ComplexAmp across_1 =
      (2.0 * kI * alpha * p.sn - sd * p.cs) * p.es - p.eo * p.ap * p.gp +
      conj(p.eo) * p.am * p.gm;
  const ComplexAmp across_2 =
      (-2.0 * kI * alpha * p.sn + sd * p.cs) * p.es + p.eo * mab * p.gm +
      conj(p.eo) * p.ap * p.gp;
  m.ladder = k2 * p.K2 / 4.0 *
             (p.bw.dp * adiag_p + p.bw.dm * adiag_m + p.bw.w * across_1 +
              conj(p.bw.w) * across_2);

  const ComplexAmp sq_sum = alpha * alpha + p.b * p.b;
  const ComplexAmp a2diag_p =
      2.0 * sq_sum + p.eo * mab * mab * p.e2a + conj(p.eo) * p.ap * p.ap * p.e2a;
  const ComplexAmp a2diag_m =
      2.0 * sq_sum + p.eo * p.ap * p.ap * p.e2a + conj(p.eo) * p.am * p.am * p.e2a;
  const ComplexAmp a2core =
      2.0 * p.es * (p.cs * sq_sum - kI * sd * alpha * p.sn);
  const ComplexAmp a2cross_1 =
      a2core + conj(p.eo) * p.am * p.am * p.gm + p.eo * p.ap * p.ap * p.gp;
  const ComplexAmp a2cross_2 =
      a2core + p.eo * p.am * p.am * p.gm + conj(p.eo) * p.ap * p.ap * p.gp;
  m.pair_amp = k2 * p.K2 / 4.0 *
               (p.bw.dp * a2diag_p + p.bw.dm * a2diag_m + p.bw.w * a2cross_1 +
                conj(p.bw.w) * a2cross_2);
  return m;
}

// ── quadrature assembly ──────────────────────────────────────────────────

double xphi_of(ComplexAmp ladder, double phi) {
  return std::numbers::sqrt2 * real(ladder * polar1(-phi));
}

double x2_of(ComplexAmp pair_amp, double mean_n, double phi) {
  return 0.5 * (2.0 * real(pair_amp * polar1(-2.0 * phi)) + 2.0 * mean_n + 1.0);
}

double sphi_of(ComplexAmp ladder, ComplexAmp pair_amp, double mean_n,
               double phi) {
  const double x = xphi_of(ladder, phi);
  return x2_of(pair_amp, mean_n, phi) - x * x - 0.5;
}

// ── initial-state statistics ─────────────────────────────────────────────

double squeezed_init_g2(double eta) {
  const double sh = sinh(eta);
  if (sh * sh <= tol.vacuum_mean) {
    throw VacuumUndefined("squeezed_init_g2: eta too small, mean vanishes");
  }
  return 3.0 + 1.0 / (sh * sh);
}

double squeezed_init_q(double eta) {
  const double sh = sinh(eta);
  return 1.0 + 2.0 * sh * sh;
}

double squeezed_init_sphi(double eta, double delta, double phi) {
  return (cosh(2.0 * eta) - sinh(2.0 * eta) * cos(2.0 * phi - delta)) / 2.0 -
         0.5;
}

double cat_init_g2(double r, double omega) {
  const double ct = exp(-2.0 * r * r) * cos(omega);
  const double mean = r * r * (1.0 - ct) / (1.0 + ct);
  if (mean <= tol.vacuum_mean) {
    throw VacuumUndefined("cat_init_g2: mean occupation vanishes");
  }
  return 1.0 + 4.0 * exp(-2.0 * r * r) * cos(omega) / ((1.0 - ct) * (1.0 - ct));
}

double cat_init_q(double r, double omega) {
  const double e2 = exp(-2.0 * r * r);
  const double denom = 1.0 - e2 * e2 * cos(omega) * cos(omega);
  return 4.0 * r * r * e2 * cos(omega) / denom;
}

double cat_init_sphi(ComplexAmp alpha, double omega, double phi) {
  const double ct = exp(-2.0 * norm(alpha)) * cos(omega);
  const double K2 = 1.0 / (2.0 + 2.0 * ct);
  const double nbar = norm(alpha) * (1.0 - ct) / (1.0 + ct);
  const ComplexAmp amean =
      -2.0 * kI * K2 * alpha * exp(-2.0 * norm(alpha)) * sin(omega);
  const double proj = real(amean * polar1(-phi));
  return real(alpha * alpha * polar1(-2.0 * phi)) + nbar - 2.0 * proj * proj;
}

// ── originally printed variants ──────────────────────────────────────────

namespace literal {

double coherent_mean_n(ComplexAmp alpha, ComplexAmp aw, double s) {
  // |λ|²/4 prefactor: exactly half the corrected value.
  return coherent_moments(alpha, aw, s).mean_n / 2.0;
}

double coherent_pair(ComplexAmp alpha, ComplexAmp aw, double s,
                     double phi_sys) {
  const CoherentParts p(alpha, aw, s);
  // Printed interference phase e^{2is|α|sin φ_sys} instead of e^{2is·Im α},
  // and the halved prefactor |λ|²/4.
  const ComplexAmp ex_lit =
      exp(-s * s / 2.0) * polar1(2.0 * s * abs(alpha) * sin(phi_sys));
  return p.inv_weight2 / 4.0 *
         (p.bw.dp * norm(p.ap) * norm(p.ap) +
          p.bw.dm * norm(p.am) * norm(p.am) +
          2.0 * real(p.bw.w * ex_lit * conj(p.ap) * conj(p.ap) * p.am * p.am));
}

double coherent_xphi(ComplexAmp alpha, ComplexAmp aw, double s, double theta,
                     double phi) {
  const CoherentParts p(alpha, aw, s);
  const double r = abs(alpha);
  const double vth = std::arg(alpha);
  // Each term at half the corrected weight; first term printed cos(φ−θ)
  // with the preselection angle.
  const double term1 = (1.0 + p.bw.aw2) * r * cos(phi - theta);
  const double term2 = s * cos(phi) * real(aw);
  const ComplexAmp probe{2.0 * r * cos(vth - phi), s * sin(phi)};
  const double term3 = 0.5 * real(p.bw.w * p.ex * probe);
  return p.inv_weight2 / std::numbers::sqrt2 * (term1 + term2 + term3);
}

ComplexAmp coherent_pair_amp(ComplexAmp alpha, ComplexAmp aw, double s) {
  // Halved prefactor only.
  return coherent_moments(alpha, aw, s).pair_amp / 2.0;
}

double squeezed_mean_n(double eta, double delta, ComplexAmp aw, double s) {
  const SqueezedParts p(eta, delta, aw, s);
  const double k2 = 1.0 / p.weight;
  const double s2 = s * s;
  // Printed interference bracket: ov·(sinh²η + s²/4 − (s²/2)(1 + i sinδ sinh2η)),
  // complex where the true bracket is real.
  const ComplexAmp bracket_lit =
      p.ov * (ComplexAmp{p.sh2 + s2 / 4.0 - s2 / 2.0, 0.0} -
              kI * (s2 / 2.0) * sin(delta) * sinh(2.0 * eta));
  return k2 / 4.0 *
         (2.0 * (1.0 + p.bw.aw2) * (s2 / 4.0 + p.sh2) +
          2.0 * real(p.bw.w * bracket_lit));
}

double squeezed_xphi(double eta, double delta, ComplexAmp aw, double s,
                     double phi) {
  const SqueezedParts p(eta, delta, aw, s);
  const double k2 = 1.0 / p.weight;
  // First two printed terms cancel identically: cosφ|1+aw|² − cosφ|1+aw|².
  // The surviving terms use e^{∓iθ} factors, read here at the quadrature
  // angle (the printed symbol is ambiguous).
  const ComplexAmp wb = (1.0 + aw) * (1.0 - conj(aw));
  const double rest =
      2.0 * p.ov * real(polar1(-phi) * wb * p.z / 2.0) -
      2.0 * p.ov * real(polar1(phi) * conj(wb) * p.z / 2.0);
  return s * k2 / (4.0 * std::numbers::sqrt2) * rest;
}

double squeezed_x2(double eta, double delta, ComplexAmp aw, double s,
                   double phi) {
  const SqueezedParts p(eta, delta, aw, s);
  const double k2 = 1.0 / p.weight;
  const double s2 = s * s;
  const ComplexAmp emid = conj(p.eid);  // printed phases conjugated: e^{−iδ}
  const ComplexAmp c = cosh(eta) + p.eid * sinh(eta);
  // Printed sub-bracket (unbalanced brace read as closing at the end):
  // {s²/4 + s²(½e^{−iδ}sinh2η + sinh²η) + s²c²e^{−2iδ}sinh²η − ½e^{−iδ}sinh2η}·ov
  const ComplexAmp three_lit =
      (s2 / 4.0 + s2 * (0.5 * emid * sinh(2.0 * eta) + p.sh2) +
       s2 * c * c * emid * emid * p.sh2 - 0.5 * emid * sinh(2.0 * eta)) *
      p.ov;
  const ComplexAmp two_lit =
      k2 / 4.0 *
      ((s2 / 4.0 - 0.5 * emid * sinh(2.0 * eta)) * 2.0 * (1.0 + p.bw.aw2) +
       (1.0 - p.bw.aw2) * three_lit);
  // The ⟨n⟩ entering the quadrature identity is the corrected one, so this
  // entry isolates the pair-amplitude defects.
  const double n = squeezed_moments(eta, delta, aw, s).mean_n;
  return 0.5 * (2.0 * real(two_lit * polar1(-2.0 * phi)) + 2.0 * n + 1.0);
}

ComplexAmp cat_ladder(ComplexAmp alpha, double omega, ComplexAmp aw, double s,
                      double phi) {
  const CatParts p(alpha, omega, aw, s);
  const double k2 = 1.0 / p.weight;
  const ComplexAmp ef = polar1(phi);  // printed e^{±iφ}; e^{±iω} belongs
  const ComplexAmp mab = -alpha + p.b;
  const ComplexAmp adiag_p = s + ef * mab * p.e2a + conj(ef) * p.ap * p.e2a;
  const ComplexAmp adiag_m = -s - ef * p.ap * p.e2a + conj(ef) * p.am * p.e2a;
  const ComplexAmp across_1 =
      (2.0 * kI * alpha * p.sn - s * p.cs) * p.es - ef * p.ap * p.gp +
      conj(ef) * p.am * p.gm;
  const ComplexAmp across_2 =
      (-2.0 * kI * alpha * p.sn + s * p.cs) * p.es + ef * mab * p.gm +
      conj(ef) * p.ap * p.gp;
  return k2 * p.K2 / 4.0 *
         (p.bw.dp * adiag_p + p.bw.dm * adiag_m + p.bw.w * across_1 +
          conj(p.bw.w) * across_2);
}

ComplexAmp cat_pair_amp(ComplexAmp alpha, double omega, ComplexAmp aw,
                        double s) {
  const CatParts p(alpha, omega, aw, s);
  const double k2 = 1.0 / p.weight;
  const ComplexAmp mab = -alpha + p.b;
  const ComplexAmp sq_sum = alpha * alpha + p.b * p.b;
  const ComplexAmp a2diag_p =
      2.0 * sq_sum + p.eo * mab * mab * p.e2a + conj(p.eo) * p.ap * p.ap * p.e2a;
  const ComplexAmp a2diag_m =
      2.0 * sq_sum + p.eo * p.ap * p.ap * p.e2a + conj(p.eo) * p.am * p.am * p.e2a;
  // Printed cross overlap e^{−s²/4}; the branch overlap is e^{−s²/2}.
  const double es_lit = exp(-s * s / 4.0);
  const ComplexAmp a2core_lit =
      2.0 * es_lit * (p.cs * sq_sum - kI * s * alpha * p.sn);
  const ComplexAmp a2cross_1 =
      a2core_lit + conj(p.eo) * p.am * p.am * p.gm + p.eo * p.ap * p.ap * p.gp;
  const ComplexAmp a2cross_2 =
      a2core_lit + p.eo * p.am * p.am * p.gm + conj(p.eo) * p.ap * p.ap * p.gp;
  return k2 * p.K2 / 4.0 *
         (p.bw.dp * a2diag_p + p.bw.dm * a2diag_m + p.bw.w * a2cross_1 +
          conj(p.bw.w) * a2cross_2);
}

ComplexAmp cat_pair(ComplexAmp alpha, double omega, ComplexAmp aw, double s) {
  const CatParts p(alpha, omega, aw, s);
  const double k2 = 1.0 / p.weight;
  const ComplexAmp mab = -alpha + p.b;
  const ComplexAmp cap = conj(alpha) + p.b;
  const ComplexAmp cam = conj(alpha) - p.b;
  const ComplexAmp e2isy = polar1(2.0 * s * imag(alpha));
  const double diag2_p =
      norm(p.ap) * norm(p.ap) + norm(mab) * norm(mab) +
      2.0 * real(p.eo * cap * cap * mab * mab) * p.e2a;
  // Printed with (ᾱ+s/2) unsquared in the conjugate cross term, so the
  // bracket no longer reduces to a real number.
  const ComplexAmp diag2_m_lit =
      norm(p.am) * norm(p.am) + norm(p.ap) * norm(p.ap) +
      p.e2a * (p.eo * cam * cam * p.ap * p.ap +
               conj(p.eo) * cap * p.am * p.am);
  const ComplexAmp cross2 =
      p.eo * norm(p.ap) * norm(p.ap) * p.gp +
      conj(p.eo) * norm(p.am) * norm(p.am) * p.gm +
      2.0 * p.es * real(e2isy * cap * cap * p.am * p.am);
  return k2 * p.K2 / 4.0 *
         (p.bw.dp * diag2_p + p.bw.dm * diag2_m_lit +
          2.0 * real(cross2 * p.bw.w));
}

double cat_init_sphi(double r, double omega, double phi) {
  const double e2 = exp(-2.0 * r * r);
  const double denom = 1.0 + e2 * cos(omega);
  const double lead = r * r * e2 * e2 / (denom * denom);
  const double first = cos(2.0 * phi) * (exp(2.0 * r * r) + cos(omega)) *
                       (exp(2.0 * r * r) + cos(omega));
  const double second = sin(omega) * sin(omega) * cos(phi) * cos(phi);
  return lead * (first + second);
}

}  // namespace literal

}  // namespace postsel::closed
