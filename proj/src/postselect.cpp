#include "postsel/postselect.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "postsel/errors.hpp"
#include "postsel/tolerances.hpp"

namespace postsel {

void validate_config(const MeasurementConfig& cfg) {
  if (cfg.s < 0.0) throw ConfigError("MeasurementConfig: s must be >= 0");
  if (cfg.theta < 0.0) {
    throw ConfigError("MeasurementConfig: theta must be >= 0");
  }
  if (cfg.theta >= std::numbers::pi - tol.theta_margin) {
    throw ConfigError(
        "MeasurementConfig: theta = " + std::to_string(cfg.theta) +
        " too close to pi; pre/postselection orthogonal");
  }
}

WeakValue weak_value(const MeasurementConfig& cfg) {
  if (cfg.theta >= std::numbers::pi - tol.theta_margin) {
    throw DivergentWeakValue("weak_value: tan(theta/2) diverges at theta = " +
                             std::to_string(cfg.theta));
  }
  const double magnitude = std::tan(cfg.theta / 2.0);
  return WeakValue{std::polar(magnitude, cfg.phi_sys)};
}

double postselection_success_naive(const MeasurementConfig& cfg) {
  const double c = std::cos(cfg.theta / 2.0);
  return c * c;
}

namespace {

// c₊ D(s/2)|ptr⟩ + c₋ D(−s/2)|ptr⟩, shared by both entry points.
std::pair<FockVector, double> two_branch(ComplexAmp c_plus, ComplexAmp c_minus,
                                         double s, const FockVector& pointer) {
  const ComplexAmp half_shift{s / 2.0, 0.0};
  const FockVector up = displace(half_shift, pointer);
  const FockVector down = displace(-half_shift, pointer);
  std::vector<ComplexAmp> amps(pointer.dim);
  for (std::size_t n = 0; n < pointer.dim; ++n) {
    amps[n] = c_plus * up.amps[n] + c_minus * down.amps[n];
  }
  FockVector raw = make_state(std::move(amps));
  const double weight = norm_squared(raw);
  if (weight < tol.collapse_floor) {
    throw ZeroVector("postselected measurement: branches cancel, weight = " +
                     std::to_string(weight));
  }
  auto [unit, nrm] = normalize(raw);
  (void)nrm;
  return {std::move(unit), weight};
}

}  // namespace

std::pair<FockVector, double> apply_postselected_measurement(
    const MeasurementConfig& cfg, const FockVector& pointer) {
  validate_config(cfg);
  const double c = std::cos(cfg.theta / 2.0);
  const ComplexAmp spin = std::polar(std::sin(cfg.theta / 2.0), cfg.phi_sys);
  return two_branch(0.5 * (c + spin), 0.5 * (c - spin), cfg.s, pointer);
}

std::pair<FockVector, double> apply_with_explicit_weak_value(
    const WeakValue& aw, double s, const FockVector& pointer) {
  if (s < 0.0) throw ConfigError("apply_with_explicit_weak_value: s >= 0");
  const ComplexAmp one{1.0, 0.0};
  return two_branch(0.5 * (one + aw.value), 0.5 * (one - aw.value), s,
                    pointer);
}

}  // namespace postsel
