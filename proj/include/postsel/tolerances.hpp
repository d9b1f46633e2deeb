#pragma once

// Every numerical threshold used by the library, in one place. Tests and the
// validator reference these members instead of re-hardcoding constants.

namespace postsel {

struct Tolerances {
  // Truncation control.
  double well_truncated = 1e-12;    // tail_mass bound: state fits the basis
  double displaced_tail = 1e-10;    // tail_mass bound after displace()
  double create_headroom = 1e-14;   // |v[dim-1]| bound required by apply_create
  double norm_floor = 1e-300;       // ‖v‖ at/below this is a ZeroVector
  double collapse_floor = 1e-14;    // ‖Φ̃‖² bound: branches fully cancelled

  // Parameter domains.
  double theta_margin = 1e-9;       // θ must stay ≤ π - margin (finite tan(θ/2))
  double vacuum_mean = 1e-12;       // ⟨n⟩ at/below this: g² undefined
  double degenerate_cat = 1e-12;    // K⁻² at/below this: cat unnormalizable
  double squeeze_max = 4.0;         // η beyond this cannot be truncated well

  // Report invariants.
  double prob_sum = 1e-10;          // |Σ P(n) - 1| bound
  double mandel_floor = 1e-9;       // Q ≥ -1 - mandel_floor
  double squeeze_floor = 1e-9;      // S_φ ≥ -1/2 - squeeze_floor
  double mandel_identity = 1e-9;    // |Q - ⟨n⟩(g²-1)| bound

  // Analytic-vs-numeric validation.
  double closed_form_rel = 1e-8;    // Match iff |Δ| < rel·max(1, |oracle|)
};

inline constexpr Tolerances tol{};

}  // namespace postsel
