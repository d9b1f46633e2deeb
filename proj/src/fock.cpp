#include "postsel/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "postsel/errors.hpp"
#include "postsel/tolerances.hpp"

namespace postsel {

double estimate_tail(const std::vector<ComplexAmp>& amps) {
  const std::size_t dim = amps.size();
  if (dim == 0) return 0.0;
  auto p = [&](std::size_t i) { return std::norm(amps[i]); };
  if (dim < 4) {
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i) s += p(i);
    return s;
  }
  const double last4 = p(dim - 1) + p(dim - 2) + p(dim - 3) + p(dim - 4);
  // Parity-safe geometric extrapolation: pair up slots so states with only
  // even (or only odd) occupation still yield a nonzero decay ratio.
  const double q1 = std::max(p(dim - 1), p(dim - 2));
  const double q0 = std::max(p(dim - 3), p(dim - 4));
  if (q0 <= 0.0 || q1 <= 0.0) return last4;
  const double ratio = std::min(q1 / q0, 0.99);
  return last4 + 2.0 * q1 * ratio / (1.0 - ratio);
}

FockVector make_state(std::vector<ComplexAmp> amps) {
  FockVector v;
  v.dim = amps.size();
  v.tail_mass = estimate_tail(amps);
  v.amps = std::move(amps);
  return v;
}

double norm_squared(const FockVector& v) {
  double s = 0.0;
  for (const auto& a : v.amps) s += std::norm(a);
  return s;
}

double norm(const FockVector& v) { return std::sqrt(norm_squared(v)); }

bool well_truncated(const FockVector& v) {
  return v.tail_mass < tol.well_truncated;
}

FockVector apply_annihilate(const FockVector& v) {
  std::vector<ComplexAmp> out(v.dim, ComplexAmp{0.0, 0.0});
  for (std::size_t n = 0; n + 1 < v.dim; ++n) {
    out[n] = std::sqrt(static_cast<double>(n + 1)) * v.amps[n + 1];
  }
  return make_state(std::move(out));
}

FockVector apply_create(const FockVector& v) {
  if (v.dim == 0) return v;
  if (std::abs(v.amps[v.dim - 1]) >= tol.create_headroom) {
    throw TruncationOverflow(
        "apply_create: top amplitude |v[dim-1]| = " +
        std::to_string(std::abs(v.amps[v.dim - 1])) +
        " would be pushed past the truncation");
  }
  std::vector<ComplexAmp> out(v.dim, ComplexAmp{0.0, 0.0});
  for (std::size_t n = 0; n + 1 < v.dim; ++n) {
    out[n + 1] = std::sqrt(static_cast<double>(n + 1)) * v.amps[n];
  }
  return make_state(std::move(out));
}

namespace {

// w ← e^{c·op} v as the finite series Σ_k (c·op)^k v / k!, where op is the
// raw lower/upper shift (annihilate or create without the headroom check;
// the create series just drops weight shifted past the top, matching the
// exact matrix exponential on the truncated subspace).
std::vector<ComplexAmp> exp_shift_series(ComplexAmp c, bool raising,
                                         const std::vector<ComplexAmp>& v) {
  const std::size_t dim = v.size();
  std::vector<ComplexAmp> acc = v;
  std::vector<ComplexAmp> term = v;
  std::vector<ComplexAmp> next(dim);
  for (std::size_t k = 1; k < dim; ++k) {
    std::fill(next.begin(), next.end(), ComplexAmp{0.0, 0.0});
    if (raising) {
      for (std::size_t n = 0; n + 1 < dim; ++n) {
        next[n + 1] = std::sqrt(static_cast<double>(n + 1)) * term[n];
      }
    } else {
      for (std::size_t n = 0; n + 1 < dim; ++n) {
        next[n] = std::sqrt(static_cast<double>(n + 1)) * term[n + 1];
      }
    }
    const ComplexAmp scale = c / static_cast<double>(k);
    bool any = false;
    for (std::size_t n = 0; n < dim; ++n) {
      term[n] = scale * next[n];
      acc[n] += term[n];
      any = any || (term[n] != ComplexAmp{0.0, 0.0});
    }
    if (!any) break;  // series terminated early (e.g. few occupied slots)
  }
  return acc;
}

}  // namespace

FockVector displace(ComplexAmp beta, const FockVector& v) {
  if (beta == ComplexAmp{0.0, 0.0}) return v;
  std::vector<ComplexAmp> work = exp_shift_series(-std::conj(beta), false, v.amps);
  work = exp_shift_series(beta, true, work);
  const double prefactor = std::exp(-0.5 * std::norm(beta));
  for (auto& a : work) a *= prefactor;
  FockVector out = make_state(std::move(work));
  if (out.tail_mass >= tol.displaced_tail) {
    throw TruncationOverflow(
        "displace: tail_mass " + std::to_string(out.tail_mass) +
        " after displacement; increase dim");
  }
  return out;
}

ComplexAmp inner(const FockVector& u, const FockVector& v) {
  if (u.dim != v.dim) {
    throw DimensionMismatch("inner: dims " + std::to_string(u.dim) + " vs " +
                            std::to_string(v.dim));
  }
  ComplexAmp s{0.0, 0.0};
  for (std::size_t n = 0; n < u.dim; ++n) s += std::conj(u.amps[n]) * v.amps[n];
  return s;
}

std::pair<FockVector, double> normalize(const FockVector& v) {
  const double nrm = norm(v);
  if (nrm <= tol.norm_floor) {
    throw ZeroVector("normalize: norm " + std::to_string(nrm));
  }
  FockVector unit = v;
  const double inv = 1.0 / nrm;
  for (auto& a : unit.amps) a *= inv;
  unit.tail_mass = estimate_tail(unit.amps);
  return {std::move(unit), nrm};
}

}  // namespace postsel
