#include "postsel/observables.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "postsel/errors.hpp"
#include "postsel/tolerances.hpp"

namespace postsel {

std::vector<double> photon_distribution(const FockVector& v) {
  std::vector<double> p(v.dim);
  for (std::size_t n = 0; n < v.dim; ++n) p[n] = std::norm(v.amps[n]);
  return p;
}

double mean_occupation(const FockVector& v) {
  double s = 0.0;
  for (std::size_t n = 1; n < v.dim; ++n) {
    s += static_cast<double>(n) * std::norm(v.amps[n]);
  }
  return s;
}

double pair_occupation(const FockVector& v) {
  double s = 0.0;
  for (std::size_t n = 2; n < v.dim; ++n) {
    const double nd = static_cast<double>(n);
    s += nd * (nd - 1.0) * std::norm(v.amps[n]);
  }
  return s;
}

ComplexAmp ladder_mean(const FockVector& v) {
  ComplexAmp s{0.0, 0.0};
  for (std::size_t n = 0; n + 1 < v.dim; ++n) {
    s += std::conj(v.amps[n]) * std::sqrt(static_cast<double>(n + 1)) *
         v.amps[n + 1];
  }
  return s;
}

ComplexAmp pair_amplitude_mean(const FockVector& v) {
  ComplexAmp s{0.0, 0.0};
  for (std::size_t n = 0; n + 2 < v.dim; ++n) {
    const double w = std::sqrt(static_cast<double>((n + 1) * (n + 2)));
    s += std::conj(v.amps[n]) * w * v.amps[n + 2];
  }
  return s;
}

double g2(const FockVector& v) {
  const double n = mean_occupation(v);
  if (n <= tol.vacuum_mean) {
    throw VacuumUndefined("g2: mean occupation " + std::to_string(n) +
                          " is numerically vacuum");
  }
  return pair_occupation(v) / (n * n);
}

double mandel_q(const FockVector& v) {
  const double n = mean_occupation(v);
  if (n <= tol.vacuum_mean) return 0.0;
  return (pair_occupation(v) - n * n) / n;
}

std::pair<double, double> quadrature_moments(const FockVector& v,
                                             double phi_quad) {
  const ComplexAmp rot = std::polar(1.0, -phi_quad);
  const double mean_x = std::numbers::sqrt2 * std::real(ladder_mean(v) * rot);
  const double mean_x2 =
      0.5 * (2.0 * std::real(pair_amplitude_mean(v) * rot * rot) +
             2.0 * mean_occupation(v) + 1.0);
  return {mean_x, mean_x2};
}

double squeezing_parameter(const FockVector& v, double phi_quad) {
  const auto [x, x2] = quadrature_moments(v, phi_quad);
  return (x2 - x * x) - 0.5;
}

std::vector<double> default_phi_grid() {
  std::vector<double> grid(64);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = std::numbers::pi * static_cast<double>(i) / 64.0;
  }
  return grid;
}

ObservableReport full_report(const FockVector& v,
                             const std::vector<double>& phi_grid,
                             std::optional<double> success_prob) {
  ObservableReport rep;
  rep.photon_dist = photon_distribution(v);
  rep.mean_n = mean_occupation(v);
  rep.mandel_q = mandel_q(v);
  if (rep.mean_n > tol.vacuum_mean) rep.g2 = g2(v);
  rep.s_phi.reserve(phi_grid.size());
  for (double phi : phi_grid) {
    rep.s_phi.push_back({phi, squeezing_parameter(v, phi)});
  }
  rep.success_prob = success_prob;

  double total = 0.0;
  for (double p : rep.photon_dist) total += p;
  if (std::abs(total - 1.0) > tol.prob_sum) {
    throw InvariantViolation("full_report: photon_dist sums to " +
                             std::to_string(total));
  }
  if (rep.mandel_q < -1.0 - tol.mandel_floor) {
    throw InvariantViolation("full_report: mandel_q = " +
                             std::to_string(rep.mandel_q) + " below -1");
  }
  for (const auto& s : rep.s_phi) {
    if (s.value < -0.5 - tol.squeeze_floor) {
      throw InvariantViolation("full_report: s_phi(" +
                               std::to_string(s.phi_quad) + ") = " +
                               std::to_string(s.value) + " below -1/2");
    }
  }
  if (rep.g2) {
    const double identity = rep.mean_n * (*rep.g2 - 1.0);
    if (std::abs(rep.mandel_q - identity) > tol.mandel_identity) {
      throw InvariantViolation("full_report: mandel_q " +
                               std::to_string(rep.mandel_q) +
                               " != mean_n*(g2-1) " + std::to_string(identity));
    }
  }
  return rep;
}

}  // namespace postsel
