#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "helpers.hpp"
#include "postsel/errors.hpp"
#include "postsel/fock.hpp"
#include "postsel/states.hpp"
#include "postsel/tolerances.hpp"

using namespace postsel;
using testval::kPi;

namespace {

FockVector basis_state(std::size_t n, std::size_t dim) {
  std::vector<ComplexAmp> amps(dim, ComplexAmp{0.0, 0.0});
  amps[n] = 1.0;
  return make_state(std::move(amps));
}

}  // namespace

TEST_SUITE("fock") {

TEST_CASE("make_state wraps amplitudes and sizes the vector") {
  FockVector v = make_state({{1.0, 0.0}, {0.0, 2.0}});
  CHECK(v.dim == 2);
  CHECK(norm_squared(v) == doctest::Approx(5.0));
}

TEST_CASE("ladder operators act as matrix elements require") {
  FockVector three = basis_state(3, 8);
  FockVector lowered = apply_annihilate(three);
  CHECK(std::abs(lowered.amps[2] - std::sqrt(3.0)) < 1e-15);
  for (std::size_t n : {0u, 1u, 3u, 4u}) {
    CHECK(std::abs(lowered.amps[n]) == 0.0);
  }

  FockVector raised = apply_create(three);
  CHECK(std::abs(raised.amps[4] - 2.0) < 1e-15);

  FockVector vac = basis_state(0, 4);
  FockVector avac = apply_annihilate(vac);
  CHECK(norm_squared(avac) == 0.0);
}

TEST_CASE("create refuses to push weight past the top slot") {
  FockVector top = basis_state(5, 6);
  CHECK_THROWS_AS(apply_create(top), TruncationOverflow);
}

TEST_CASE("commutator [a, a+] = 1 away from the truncation edge") {
  FockVector v = coherent(0.6, 0.9, 64);
  FockVector lhs = apply_annihilate(apply_create(v));
  FockVector rhs = apply_create(apply_annihilate(v));
  for (std::size_t n = 0; n < 50; ++n) {
    CHECK(std::abs(lhs.amps[n] - rhs.amps[n] - v.amps[n]) < 1e-13);
  }
}

TEST_CASE("displacing vacuum yields the coherent amplitude ladder") {
  const ComplexAmp beta{0.7, 0.2};
  FockVector d = displace(beta, basis_state(0, 64));
  const double pref = std::exp(-0.5 * std::norm(beta));
  ComplexAmp term = pref;
  for (std::size_t n = 0; n < 20; ++n) {
    CHECK(std::abs(d.amps[n] - term) < 1e-14);
    term *= beta / std::sqrt(static_cast<double>(n + 1));
  }
  CHECK(norm_squared(d) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("displacement is unitary and invertible on the subspace") {
  FockVector v = coherent(0.8, 2.2, 96);
  const ComplexAmp beta{0.4, -0.3};
  FockVector moved = displace(beta, v);
  CHECK(std::abs(norm_squared(moved) - 1.0) < 1e-12);
  FockVector back = displace(-beta, moved);
  for (std::size_t n = 0; n < 80; ++n) {
    CHECK(std::abs(back.amps[n] - v.amps[n]) < 1e-12);
  }
}

TEST_CASE("displacement composes with the canonical phase") {
  // D(a)D(b) = e^{i Im(a conj(b))} D(a+b)
  const ComplexAmp a{0.3, 0.5}, b{-0.2, 0.4};
  FockVector v = coherent(0.5, 0.3, 96);
  FockVector two_step = displace(a, displace(b, v));
  FockVector one_step = displace(a + b, v);
  const ComplexAmp phase = std::exp(ComplexAmp{0.0, std::imag(a * std::conj(b))});
  for (std::size_t n = 0; n < 60; ++n) {
    CHECK(std::abs(two_step.amps[n] - phase * one_step.amps[n]) < 1e-12);
  }
}

TEST_CASE("too-large displacements overflow the basis") {
  CHECK_THROWS_AS(displace({6.0, 0.0}, coherent(2.0, 0.0, 32)),
                  TruncationOverflow);
}

TEST_CASE("zero displacement is the identity") {
  FockVector v = coherent(1.0, 0.4, 64);
  FockVector same = displace({0.0, 0.0}, v);
  for (std::size_t n = 0; n < v.dim; ++n) {
    CHECK(same.amps[n] == v.amps[n]);
  }
}

TEST_CASE("inner product conjugates the left argument") {
  FockVector u = make_state({{0.0, 1.0}, {1.0, 0.0}});
  FockVector v = make_state({{1.0, 0.0}, {0.0, 0.0}});
  ComplexAmp ip = inner(u, v);
  CHECK(std::abs(ip - ComplexAmp{0.0, -1.0}) < 1e-15);
  CHECK_THROWS_AS(inner(u, basis_state(0, 4)), DimensionMismatch);
}

TEST_CASE("normalize returns the unit vector and the norm") {
  FockVector v = make_state({{2.0, 0.0}, {0.0, 0.0}});
  auto [unit, nrm] = normalize(v);
  CHECK(nrm == doctest::Approx(2.0));
  CHECK(std::abs(unit.amps[0] - ComplexAmp{1.0, 0.0}) < 1e-15);
  CHECK_THROWS_AS(normalize(make_state({{0.0, 0.0}, {0.0, 0.0}})), ZeroVector);
}

TEST_CASE("tail estimate sees through parity gaps") {
  // Even-only occupation: the top slot alternates exactly zero, so a naive
  // last-slot estimate would claim perfect truncation. Chop a wide squeezed
  // state down to 32 slots and the estimator must still flag the loss.
  FockVector sq_big = squeezed_vacuum(1.2, 0.0, 512);
  CHECK(well_truncated(sq_big));
  std::vector<ComplexAmp> low(sq_big.amps.begin(), sq_big.amps.begin() + 32);
  CHECK(std::abs(low[31]) == 0.0);  // odd slot: the naive signal is silent
  FockVector chopped = make_state(std::move(low));
  CHECK(chopped.tail_mass > tol.well_truncated);
  // The constructor refuses to hand out such a state directly.
  CHECK_THROWS_AS(squeezed_vacuum(1.2, 0.0, 32), TruncationOverflow);
}

TEST_CASE("well-truncated coherent states stay well truncated under displacement") {
  FockVector v = coherent(1.0, kPi / 3, 128);
  CHECK(well_truncated(v));
  FockVector moved = displace({1.5, 0.0}, v);
  CHECK(well_truncated(moved));
}

}  // TEST_SUITE
