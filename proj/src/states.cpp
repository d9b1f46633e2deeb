#include "postsel/states.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "postsel/errors.hpp"
#include "postsel/tolerances.hpp"

namespace postsel {

namespace {

void require_zero(double value, const char* field, const char* kind) {
  if (value != 0.0) {
    throw ConfigError(std::string("PointerSpec: field ") + field +
                      " is not read by kind " + kind + " and must be 0");
  }
}

}  // namespace

void validate_spec(const PointerSpec& spec) {
  switch (spec.kind) {
    case PointerKind::Coherent:
      if (spec.r < 0.0) throw ConfigError("PointerSpec: r must be >= 0");
      require_zero(spec.eta, "eta", "Coherent");
      require_zero(spec.delta, "delta", "Coherent");
      require_zero(spec.omega, "omega", "Coherent");
      break;
    case PointerKind::SqueezedVacuum:
      if (spec.eta < 0.0) throw ConfigError("PointerSpec: eta must be >= 0");
      if (spec.eta > tol.squeeze_max) {
        throw ConfigError("PointerSpec: eta " + std::to_string(spec.eta) +
                          " beyond " + std::to_string(tol.squeeze_max) +
                          " cannot be truncated");
      }
      require_zero(spec.r, "r", "SqueezedVacuum");
      require_zero(spec.vartheta, "vartheta", "SqueezedVacuum");
      require_zero(spec.omega, "omega", "SqueezedVacuum");
      break;
    case PointerKind::Cat:
      if (spec.r < 0.0) throw ConfigError("PointerSpec: r must be >= 0");
      require_zero(spec.vartheta, "vartheta", "Cat");
      require_zero(spec.eta, "eta", "Cat");
      break;
  }
}

FockVector coherent(double r, double vartheta, std::size_t dim) {
  if (r < 0.0) throw ConfigError("coherent: r must be >= 0");
  const ComplexAmp alpha = std::polar(r, vartheta);
  std::vector<ComplexAmp> amps(dim, ComplexAmp{0.0, 0.0});
  ComplexAmp term = std::exp(-0.5 * r * r);  // e^{−r²/2} α⁰/√0!
  for (std::size_t n = 0; n < dim; ++n) {
    amps[n] = term;
    term *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  FockVector v = make_state(std::move(amps));
  if (!well_truncated(v)) {
    throw TruncationOverflow("coherent: dim " + std::to_string(dim) +
                             " too small for r = " + std::to_string(r));
  }
  return v;
}

FockVector squeezed_vacuum(double eta, double delta, std::size_t dim) {
  if (eta < 0.0) throw ConfigError("squeezed_vacuum: eta must be >= 0");
  if (eta > tol.squeeze_max) {
    throw ConfigError("squeezed_vacuum: eta " + std::to_string(eta) +
                      " beyond " + std::to_string(tol.squeeze_max));
  }
  std::vector<ComplexAmp> amps(dim, ComplexAmp{0.0, 0.0});
  const ComplexAmp w = -std::polar(std::tanh(eta), delta);
  // amps[2m] = (cosh η)^{−1/2} √(2m)!/(2^m m!) wᵐ, built by the ratio
  // amps[2m+2]/amps[2m] = w·√((2m+1)(2m+2))/(2(m+1)).
  ComplexAmp term = 1.0 / std::sqrt(std::cosh(eta));
  for (std::size_t m = 0; 2 * m < dim; ++m) {
    amps[2 * m] = term;
    const double tm = static_cast<double>(m);
    term *= w * std::sqrt((2 * tm + 1) * (2 * tm + 2)) / (2 * (tm + 1));
  }
  FockVector v = make_state(std::move(amps));
  if (!well_truncated(v)) {
    throw TruncationOverflow("squeezed_vacuum: dim " + std::to_string(dim) +
                             " too small for eta = " + std::to_string(eta));
  }
  return v;
}

FockVector cat(double r, double delta, double omega, std::size_t dim) {
  if (r < 0.0) throw ConfigError("cat: r must be >= 0");
  const double k_inv_sq = 2.0 + 2.0 * std::exp(-2.0 * r * r) * std::cos(omega);
  if (k_inv_sq <= tol.degenerate_cat) {
    throw DegenerateCat("cat: normalization K^-2 = " +
                        std::to_string(k_inv_sq) + " vanishes");
  }
  const double k = 1.0 / std::sqrt(k_inv_sq);
  const ComplexAmp alpha = std::polar(r, delta);
  const ComplexAmp branch_phase = std::polar(1.0, omega);
  std::vector<ComplexAmp> amps(dim, ComplexAmp{0.0, 0.0});
  ComplexAmp plus = std::exp(-0.5 * r * r);   // |α⟩ series term
  for (std::size_t n = 0; n < dim; ++n) {
    const ComplexAmp minus = ((n % 2 == 0) ? 1.0 : -1.0) * plus;  // |−α⟩ term
    amps[n] = k * (plus + branch_phase * minus);
    plus *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  FockVector v = make_state(std::move(amps));
  if (!well_truncated(v)) {
    throw TruncationOverflow("cat: dim " + std::to_string(dim) +
                             " too small for r = " + std::to_string(r));
  }
  return v;
}

ComplexAmp squeezed_coherent_amplitude(std::size_t n, double sign_s_half,
                                       double eta, double delta) {
  if (eta < 0.0) throw ConfigError("squeezed_coherent_amplitude: eta >= 0");
  const double b = sign_s_half;
  const ComplexAmp eid = std::polar(1.0, delta);
  const double ch = std::cosh(eta);
  const double th = std::tanh(eta);
  // χ = b(cosh η + e^{iδ} sinh η); the Hermite argument divided by its
  // rescaling, zu = χ/(2cosh η), and the squared step weight u² = ½e^{iδ}tanh η.
  const ComplexAmp zu = b * (1.0 + eid * th) / 2.0;
  const ComplexAmp u2 = 0.5 * eid * th;
  const ComplexAmp prefactor =
      std::exp(ComplexAmp{-0.5 * b * b, 0.0} - 0.5 * b * b * eid * th) /
      std::sqrt(ch);
  // t_k = u^k H_k(χ/(2u)) / √(k!); three-term recurrence stays O(1) in k.
  ComplexAmp t_prev{1.0, 0.0};
  if (n == 0) return prefactor * t_prev;
  ComplexAmp t_cur = 2.0 * zu;
  for (std::size_t k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const ComplexAmp t_next = 2.0 * zu * t_cur / std::sqrt(kd + 1.0) -
                              2.0 * u2 * std::sqrt(kd / (kd + 1.0)) * t_prev;
    t_prev = t_cur;
    t_cur = t_next;
  }
  return prefactor * t_cur;
}

FockVector build(const PointerSpec& spec, std::size_t dim) {
  validate_spec(spec);
  switch (spec.kind) {
    case PointerKind::Coherent:
      return coherent(spec.r, spec.vartheta, dim);
    case PointerKind::SqueezedVacuum:
      return squeezed_vacuum(spec.eta, spec.delta, dim);
    case PointerKind::Cat:
      return cat(spec.r, spec.delta, spec.omega, dim);
  }
  throw Error("build: unreachable pointer kind");
}

FockVector build_pointer(const PointerSpec& spec, double s,
                         std::size_t start_dim) {
  validate_spec(spec);
  if (s < 0.0) throw ConfigError("build_pointer: s must be >= 0");
  constexpr std::size_t kMaxDim = 1024;
  std::size_t dim = std::clamp<std::size_t>(start_dim, 8, kMaxDim);
  for (;; dim *= 2) {
    if (dim > kMaxDim) {
      throw TruncationOverflow(
          "build_pointer: not well truncated even at dim 1024");
    }
    try {
      FockVector v = build(spec, dim);
      if (s > 0.0) {
        // Both measurement branches must also fit the basis.
        const FockVector up = displace(ComplexAmp{s / 2.0, 0.0}, v);
        const FockVector down = displace(ComplexAmp{-s / 2.0, 0.0}, v);
        if (!well_truncated(up) || !well_truncated(down)) continue;
      }
      return v;
    } catch (const TruncationOverflow&) {
      if (dim * 2 > kMaxDim) throw;
    }
  }
}

}  // namespace postsel
