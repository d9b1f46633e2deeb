#pragma once

// Weak value and the postselected von Neumann measurement: an initial pointer
// state goes to the conditional final pointer plus the success probability.

#include <utility>

#include "postsel/fock.hpp"

namespace postsel {

// s = dimensionless coupling (interaction strength over pointer width);
// theta ∈ [0, π) is the preselection polar angle (π itself makes the pre- and
// postselected system states orthogonal); phi_sys ∈ [0, 2π) is the azimuth.
// Postselection is onto the up eigenstate of the system z axis.
struct MeasurementConfig {
  double s = 0.0;
  double theta = 0.0;
  double phi_sys = 0.0;
};

// Throws ConfigError for s < 0 or theta outside [0, π − tol.theta_margin].
void validate_config(const MeasurementConfig& cfg);

struct WeakValue {
  ComplexAmp value{0.0, 0.0};
};

// e^{iφ_sys} tan(θ/2). Throws DivergentWeakValue within tol.theta_margin of π.
WeakValue weak_value(const MeasurementConfig& cfg);

// cos²(θ/2): the s-independent projection weight (ignores interference).
double postselection_success_naive(const MeasurementConfig& cfg);

// |Φ̃⟩ = c₊ D(s/2)|ptr⟩ + c₋ D(−s/2)|ptr⟩, c± = ½(cos(θ/2) ± e^{iφ_sys} sin(θ/2)).
// Returns (|Φ̃⟩/‖Φ̃‖, ‖Φ̃‖²); the weight is the exact success probability,
// interference included, and reduces to cos²(θ/2) at s = 0. Throws ZeroVector
// when ‖Φ̃‖² < tol.collapse_floor (near-perfect destructive interference).
std::pair<FockVector, double> apply_postselected_measurement(
    const MeasurementConfig& cfg, const FockVector& pointer);

// Same superposition with coefficients ½(1 ± aw): the overall overlap factor
// is dropped, so the returned weight is relative, not a probability. The
// normalized state is identical to the exact entry point's.
std::pair<FockVector, double> apply_with_explicit_weak_value(
    const WeakValue& aw, double s, const FockVector& pointer);

}  // namespace postsel
