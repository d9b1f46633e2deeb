#pragma once

// Pointer-state constructors: coherent, squeezed vacuum, cat, plus the
// displaced-squeezed Fock amplitude via a rescaled Hermite recurrence.

#include <cstddef>

#include "postsel/fock.hpp"

namespace postsel {

enum class PointerKind { Coherent, SqueezedVacuum, Cat };

// Coherent: α = r·e^{iϑ} (fields r, vartheta). Squeezed vacuum: ξ = η·e^{iδ}
// (fields eta, delta). Cat: K(|α⟩ + e^{iω}|−α⟩) with α = r·e^{iδ} (fields r,
// delta, omega). Fields a kind does not read must stay 0.
struct PointerSpec {
  PointerKind kind = PointerKind::Coherent;
  double r = 0.0;         // coherent / cat modulus
  double vartheta = 0.0;  // coherent argument ϑ
  double eta = 0.0;       // squeeze modulus η (≤ tol.squeeze_max)
  double delta = 0.0;     // squeeze / cat argument δ
  double omega = 0.0;     // cat superposition phase ω
};

// Throws ConfigError on negative moduli, η beyond tol.squeeze_max, or a
// nonzero field the kind does not read.
void validate_spec(const PointerSpec& spec);

// amps[n] = e^{−r²/2} αⁿ/√n!, α = r e^{iϑ}.
FockVector coherent(double r, double vartheta, std::size_t dim);

// Even-only series amps[2m] = (cosh η)^{−1/2} √(2m)!/(2^m m!) (−e^{iδ} tanh η)^m.
FockVector squeezed_vacuum(double eta, double delta, std::size_t dim);

// K(|α⟩ + e^{iω}|−α⟩) with K = [2 + 2 e^{−2r²} cos ω]^{−1/2}, α = r e^{iδ}.
// Throws DegenerateCat when K⁻² ≤ tol.degenerate_cat (branches cancel).
FockVector cat(double r, double delta, double omega, std::size_t dim);

// ⟨n| D(b) S(η e^{iδ}) |0⟩ for real displacement b = sign_s_half: the complex
// Hermite three-term recurrence with per-step rescaling by u/√k, so no
// factorial overflow at any n. Matches `displace` on `squeezed_vacuum`.
ComplexAmp squeezed_coherent_amplitude(std::size_t n, double sign_s_half,
                                       double eta, double delta);

// Constructs the pointer for `spec` at the given dim.
FockVector build(const PointerSpec& spec, std::size_t dim);

// Builds at the smallest dim in {start_dim, 2·start_dim, ..., ≤1024} where
// the initial state and both ±s/2-displaced states are all well truncated;
// throws TruncationOverflow when even 1024 is not enough.
FockVector build_pointer(const PointerSpec& spec, double s,
                         std::size_t start_dim = 128);

}  // namespace postsel
