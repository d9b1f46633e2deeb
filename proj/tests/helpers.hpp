#pragma once

// Shared test fixtures: high-precision reference values certified against an
// independent arbitrary-precision implementation of the same physics, plus
// small comparison utilities.

#include <cmath>
#include <complex>
#include <numbers>

#include "postsel/fock.hpp"

namespace testval {

inline constexpr double kPi = std::numbers::pi;

// weak value at theta = 7 pi / 9, phi_sys = pi / 4
inline constexpr double kWeakValue_re = 1.9427599144532798;
inline constexpr double kWeakValue_im = 1.9427599144532798;
// cos^2(7 pi / 18)
inline constexpr double kNaiveSuccess = 0.11697777844051098;
// squeezed-vacuum photon statistics
inline constexpr double kSqMeanN_05 = 0.27154031740762189;
inline constexpr double kSqG2_05 = 6.6826943768311693;
inline constexpr double kSqG2_02 = 27.669316496441099;
inline constexpr double kSqQ_05 = 1.5430806348152438;
// odd cat r = 0.3 photon statistics
inline constexpr double kCatG2_03 = 0.0080564599227175277;
inline constexpr double kCatQ_03 = -0.99462034249658815;
// displaced-squeezed amplitude n=2, beta=1/2, eta=0.5, delta=pi/3
inline constexpr double kSqAmp2_re = 0.057061771565150817;
inline constexpr double kSqAmp2_im = -0.090812205027549484;
// success probability, coherent pointer
// (r=1, vartheta=pi/3, theta=7pi/9, phi_sys=pi/4, s=2)
inline constexpr double kCohSuccess = 0.53941579092930777;
// coherent pinned point:
// r=1, vartheta=pi/3, theta=7pi/9, phi_sys=4pi/5, s=2, phi_quad=pi/5
inline constexpr double kCohP_success = 0.54106074666418034;
inline constexpr double kCohP_meanN = 1.2374421273057724;
inline constexpr double kCohP_pair = 2.4706385895279634;
inline constexpr double kCohP_xphi = 0.67963222494129877;
inline constexpr double kCohP_a2_re = 0.14965586113478266;
inline constexpr double kCohP_a2_im = -0.041512925940924901;
inline constexpr double kCohP_g2 = 1.6134645451435458;
inline constexpr double kCohP_q = 0.75912687176909732;
inline constexpr double kCohP_sphi = 0.78230723179898253;
inline constexpr double kCohP_p2 = 0.085842418431468008;
// squeezed pinned point:
// eta=0.5, delta=pi/3, theta=pi/3, phi_sys=pi/3, s=1, phi_quad=pi/5
inline constexpr double kSqP_success = 0.5861526137505069;
inline constexpr double kSqP_meanN = 0.2799192171127793;
inline constexpr double kSqP_xphi = 0.27818115028559279;
inline constexpr double kSqP_x2phi = 0.46240935195729301;
inline constexpr double kSqP_g2 = 6.0950741690788857;
inline constexpr double kSqP_sphi = -0.11497540041692255;
// cat pinned point:
// r=0.5, delta=pi/3, omega=pi/2, theta=pi/3, phi_sys=pi/3, s=1, phi_quad=pi/5
inline constexpr double kCatP_success = 0.52634904529030062;
inline constexpr double kCatP_meanN = 0.48237837226279934;
inline constexpr double kCatP_pair = 0.29306808758403663;
inline constexpr double kCatP_amean_re = 0.62276736975559466;
inline constexpr double kCatP_amean_im = 0.13474181686955466;
inline constexpr double kCatP_a2_re = 0.40194341069936271;
inline constexpr double kCatP_a2_im = 0.22724771129428252;
inline constexpr double kCatP_sphi = 0.14286634696906792;
// initial even/odd cat squeezing parameter
inline constexpr double kCatInitS_r03_om0_phi157 = -0.08192179937275559;
inline constexpr double kCatInitS_r10_om0_phi157 = -0.23840584404423511;
inline constexpr double kCatInitS_r05_ompi2_phi07 = 0.21615377981911148;

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// |⟨u|v⟩|² for unit vectors of equal dim.
inline double fidelity(const postsel::FockVector& u,
                       const postsel::FockVector& v) {
  return std::norm(postsel::inner(u, v));
}

}  // namespace testval
