#pragma once

// Vectors on the truncated Fock basis |0⟩..|dim-1⟩ and the exact ladder /
// displacement actions on that subspace.

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace postsel {

using ComplexAmp = std::complex<double>;

// tail_mass estimates the probability weight the truncation cannot hold: the
// top four basis probabilities plus a geometric extrapolation of the decay.
// A vector is "well truncated" when that estimate is below tol.well_truncated.
struct FockVector {
  std::size_t dim = 0;
  std::vector<ComplexAmp> amps;   // amps[n] multiplies |n⟩
  double tail_mass = 0.0;
};

// Wraps raw amplitudes, computing tail_mass. dim is amps.size().
FockVector make_state(std::vector<ComplexAmp> amps);

// Recomputes the tail estimate for amplitudes already stored in v.
double estimate_tail(const std::vector<ComplexAmp>& amps);

double norm_squared(const FockVector& v);
double norm(const FockVector& v);
bool well_truncated(const FockVector& v);

// a:  out[n] = √(n+1) · v[n+1]; the top slot of the result is 0.
FockVector apply_annihilate(const FockVector& v);

// a†: out[n+1] = √(n+1) · v[n]. The top input amplitude would be pushed out
// of the basis, so it must already be negligible (|v[dim-1]| below
// tol.create_headroom); otherwise TruncationOverflow.
FockVector apply_create(const FockVector& v);

// D(β) = e^{-|β|²/2} e^{β a†} e^{-β̄ a}, each series evaluated exactly on the
// truncated subspace (both terminate after dim terms). Throws
// TruncationOverflow when the result's tail_mass reaches tol.displaced_tail,
// i.e. when the displaced state no longer fits the basis.
FockVector displace(ComplexAmp beta, const FockVector& v);

// ⟨u|v⟩ (conjugate-linear in u). Throws DimensionMismatch when dims differ.
ComplexAmp inner(const FockVector& u, const FockVector& v);

// Returns (v/‖v‖, ‖v‖). Throws ZeroVector when ‖v‖ ≤ tol.norm_floor.
// The squared second element is the weight a success probability comes from.
std::pair<FockVector, double> normalize(const FockVector& v);

}  // namespace postsel
