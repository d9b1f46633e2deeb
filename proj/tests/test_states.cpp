#include <doctest.h>

#include <cmath>
#include <complex>

#include "helpers.hpp"
#include "postsel/errors.hpp"
#include "postsel/observables.hpp"
#include "postsel/states.hpp"
#include "postsel/tolerances.hpp"

using namespace postsel;
using testval::kPi;

TEST_SUITE("states") {

TEST_CASE("coherent amplitudes follow the Poisson ladder") {
  const double r = 1.0, vt = kPi / 3;
  FockVector v = coherent(r, vt, 128);
  CHECK(std::abs(norm_squared(v) - 1.0) < 1e-12);
  const ComplexAmp alpha = std::polar(r, vt);
  ComplexAmp term = std::exp(-0.5 * r * r);
  for (std::size_t n = 0; n < 24; ++n) {
    CHECK(std::abs(v.amps[n] - term) < 1e-14);
    term *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  CHECK(mean_occupation(v) == doctest::Approx(r * r).epsilon(1e-12));
}

TEST_CASE("squeezed vacuum occupies even levels only") {
  const double eta = 0.5, delta = kPi / 3;
  FockVector v = squeezed_vacuum(eta, delta, 128);
  CHECK(std::abs(norm_squared(v) - 1.0) < 1e-12);
  for (std::size_t n = 1; n < v.dim; n += 2) {
    CHECK(std::abs(v.amps[n]) == 0.0);
  }
  // amps[2m] = (cosh eta)^{-1/2} sqrt((2m)!)/(2^m m!) (-e^{i delta} tanh eta)^m
  const ComplexAmp w = -std::polar(std::tanh(eta), delta);
  const double pref = 1.0 / std::sqrt(std::cosh(eta));
  CHECK(std::abs(v.amps[0] - ComplexAmp{pref, 0.0}) < 1e-14);
  CHECK(std::abs(v.amps[2] - pref * (std::sqrt(2.0) / 2.0) * w) < 1e-14);
  CHECK(std::abs(v.amps[4] - pref * (std::sqrt(24.0) / 8.0) * w * w) < 1e-14);
  CHECK(mean_occupation(v) ==
        doctest::Approx(std::sinh(eta) * std::sinh(eta)).epsilon(1e-12));
}

TEST_CASE("even and odd cats carry the matching parity") {
  FockVector even = cat(0.5, kPi / 3, 0.0, 64);
  CHECK(std::abs(norm_squared(even) - 1.0) < 1e-12);
  for (std::size_t n = 1; n < even.dim; n += 2) {
    CHECK(std::abs(even.amps[n]) < 1e-16);
  }
  FockVector odd = cat(0.5, kPi / 3, kPi, 64);
  CHECK(std::abs(norm_squared(odd) - 1.0) < 1e-12);
  for (std::size_t n = 0; n < odd.dim; n += 2) {
    // e^{iπ} carries a ~1e-16 imaginary residue, so even slots are only
    // zero to machine precision.
    CHECK(std::abs(odd.amps[n]) < 1e-14);
  }
}

TEST_CASE("a collapsing cat superposition is rejected") {
  CHECK_THROWS_AS(cat(0.0, 0.0, kPi, 64), DegenerateCat);
  CHECK_THROWS_AS(cat(1e-9, 0.0, kPi, 64), DegenerateCat);
}

TEST_CASE("displaced-squeezed amplitudes match the recurrence") {
  const double b = 0.5, eta = 0.5, delta = kPi / 3;
  FockVector moved = displace({b, 0.0}, squeezed_vacuum(eta, delta, 192));
  for (std::size_t n = 0; n < 24; ++n) {
    const ComplexAmp closed = squeezed_coherent_amplitude(n, b, eta, delta);
    CHECK(std::abs(moved.amps[n] - closed) < 1e-12);
  }
  const ComplexAmp a2 = squeezed_coherent_amplitude(2, b, eta, delta);
  CHECK(std::abs(a2.real() - testval::kSqAmp2_re) < 1e-14);
  CHECK(std::abs(a2.imag() - testval::kSqAmp2_im) < 1e-14);
}

TEST_CASE("pointer validation rejects out-of-domain fields") {
  PointerSpec coh;
  coh.kind = PointerKind::Coherent;
  coh.r = -1.0;
  CHECK_THROWS_AS(validate_spec(coh), ConfigError);

  PointerSpec coh_eta;
  coh_eta.kind = PointerKind::Coherent;
  coh_eta.r = 1.0;
  coh_eta.eta = 0.5;  // not read by this kind: must stay 0
  CHECK_THROWS_AS(validate_spec(coh_eta), ConfigError);

  PointerSpec sq;
  sq.kind = PointerKind::SqueezedVacuum;
  sq.eta = tol.squeeze_max + 1.0;
  CHECK_THROWS_AS(validate_spec(sq), ConfigError);

  PointerSpec sq_r;
  sq_r.kind = PointerKind::SqueezedVacuum;
  sq_r.eta = 0.5;
  sq_r.r = 0.3;
  CHECK_THROWS_AS(validate_spec(sq_r), ConfigError);

  PointerSpec ok;
  ok.kind = PointerKind::Cat;
  ok.r = 0.5;
  ok.delta = kPi / 3;
  ok.omega = kPi;
  CHECK_NOTHROW(validate_spec(ok));
}

TEST_CASE("build dispatches on the pointer kind") {
  PointerSpec spec;
  spec.kind = PointerKind::SqueezedVacuum;
  spec.eta = 0.5;
  spec.delta = kPi / 3;
  FockVector via_build = build(spec, 128);
  FockVector direct = squeezed_vacuum(0.5, kPi / 3, 128);
  for (std::size_t n = 0; n < 128; ++n) {
    CHECK(via_build.amps[n] == direct.amps[n]);
  }
}

TEST_CASE("build_pointer doubles the dimension until displacements fit") {
  PointerSpec spec;
  spec.kind = PointerKind::Coherent;
  spec.r = 2.0;
  const double s = 4.0;
  FockVector v = build_pointer(spec, s, 8);
  CHECK(well_truncated(v));
  CHECK(v.dim >= 64);
  CHECK_NOTHROW(displace({s / 2, 0.0}, v));
  CHECK_NOTHROW(displace({-s / 2, 0.0}, v));

  // Impossible fit: the doubling tops out and reports the overflow.
  PointerSpec big;
  big.kind = PointerKind::Coherent;
  big.r = 20.0;
  CHECK_THROWS_AS(build_pointer(big, 40.0, 128), TruncationOverflow);
}

TEST_CASE("start dimension is clamped to a sane range") {
  PointerSpec spec;
  spec.kind = PointerKind::Coherent;
  spec.r = 0.0;
  FockVector tiny = build_pointer(spec, 0.0, 2);
  CHECK(tiny.dim >= 8);
  FockVector vac = build_pointer(spec, 0.0, 64);
  CHECK(vac.dim == 64);
}

}  // TEST_SUITE
