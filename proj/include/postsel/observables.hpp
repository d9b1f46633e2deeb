#pragma once

// Measured quantities of a pointer state: photon distribution, mean photon
// number, second-order correlation g²(0), Mandel Q, quadrature moments, and
// the squeezing parameter S_φ = (ΔX_φ)² − ½.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "postsel/fock.hpp"

namespace postsel {

struct PhiSample {
  double phi_quad = 0.0;
  double value = 0.0;
};

// g2 is absent when the state is numerically vacuum (the ratio is 0/0);
// mandel_q is 0 there by the ⟨n⟩ → 0 limit. success_prob is carried through
// from the measurement when the report describes a conditional state.
struct ObservableReport {
  std::vector<double> photon_dist;
  double mean_n = 0.0;
  std::optional<double> g2;
  double mandel_q = 0.0;
  std::vector<PhiSample> s_phi;
  std::optional<double> success_prob;
};

// P(n) = |amps[n]|². Expects v normalized.
std::vector<double> photon_distribution(const FockVector& v);

double mean_occupation(const FockVector& v);        // ⟨a†a⟩
double pair_occupation(const FockVector& v);        // ⟨a†a†aa⟩ = Σ n(n−1)P(n)
ComplexAmp ladder_mean(const FockVector& v);        // ⟨a⟩
ComplexAmp pair_amplitude_mean(const FockVector& v);  // ⟨a²⟩

// ⟨a†a†aa⟩ / ⟨a†a⟩². Throws VacuumUndefined when ⟨n⟩ ≤ tol.vacuum_mean.
double g2(const FockVector& v);

// ⟨n⟩(g²−1), evaluated as (⟨a†a†aa⟩ − ⟨n⟩²)/⟨n⟩; 0 for vacuum by continuity.
double mandel_q(const FockVector& v);

// (⟨X_φ⟩, ⟨X²_φ⟩) with X_φ = (a e^{−iφ} + a† e^{iφ})/√2, so ⟨X_φ⟩ =
// √2·Re(⟨a⟩e^{−iφ}) and ⟨X²_φ⟩ = ½[2Re(⟨a²⟩e^{−2iφ}) + 2⟨n⟩ + 1].
std::pair<double, double> quadrature_moments(const FockVector& v,
                                             double phi_quad);

// (⟨X²⟩ − ⟨X⟩²) − ½; ≥ −½ always, 0 for coherent states.
double squeezing_parameter(const FockVector& v, double phi_quad);

// 64 uniform angles on [0, π).
std::vector<double> default_phi_grid();

// Assembles every observable and enforces the report invariants
// (Σ P(n) = 1, Q ≥ −1, S_φ ≥ −½, Q = ⟨n⟩(g²−1)); throws InvariantViolation
// naming the failing quantity.
ObservableReport full_report(const FockVector& v,
                             const std::vector<double>& phi_grid,
                             std::optional<double> success_prob = std::nullopt);

}  // namespace postsel
