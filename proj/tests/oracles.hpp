#pragma once

// Test-only reference computations. Everything here goes through explicit
// matrices and eigendecompositions, never through the Bloch closed forms.

#include <cmath>
#include <functional>
#include <random>

#include "qdist/model_a.hpp"
#include "qdist/numerics.hpp"
#include "qdist/qstate.hpp"

namespace qdist::oracle {

using numerics::Hermitian2;
using numerics::Mat2;

inline Hermitian2 diff(const Hermitian2& x, const Hermitian2& y) {
  return {x.a - y.a, x.d - y.d, x.c - y.c};
}

inline double trace_distance(const QubitState& s1, const QubitState& s2) {
  const auto e = numerics::eig_hermitian2(diff(s1.matrix(), s2.matrix()));
  return 0.5 * (std::abs(e.values[0]) + std::abs(e.values[1]));
}

inline double hs_distance(const QubitState& s1, const QubitState& s2) {
  const auto e = numerics::eig_hermitian2(diff(s1.matrix(), s2.matrix()));
  return std::sqrt(e.values[0] * e.values[0] + e.values[1] * e.values[1]);
}

// Uhlmann: [Tr sqrt(sqrt(rho1) rho2 sqrt(rho1))]^2.
inline double fidelity(const QubitState& s1, const QubitState& s2) {
  const Mat2 root1 = Mat2::from(numerics::sqrt_psd2(s1.matrix()));
  const Mat2 inner = root1 * Mat2::from(s2.matrix()) * root1;
  const Hermitian2 r = numerics::sqrt_psd2(numerics::hermitian_part(inner));
  const double tr = r.trace();
  return tr * tr;
}

inline double bures_distance(const QubitState& s1, const QubitState& s2) {
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - std::sqrt(fidelity(s1, s2)))));
}

inline double affinity(const QubitState& s1, const QubitState& s2) {
  const Mat2 p = Mat2::from(numerics::sqrt_psd2(s1.matrix())) *
                 Mat2::from(numerics::sqrt_psd2(s2.matrix()));
  return p.trace().real();
}

// sqrt(Tr (sqrt(rho1) - sqrt(rho2))^2).
inline double hellinger_distance(const QubitState& s1, const QubitState& s2) {
  const Hermitian2 d =
      diff(numerics::sqrt_psd2(s1.matrix()), numerics::sqrt_psd2(s2.matrix()));
  const auto e = numerics::eig_hermitian2(d);
  return std::sqrt(e.values[0] * e.values[0] + e.values[1] * e.values[1]);
}

inline double entropy(const QubitState& s) {
  const auto e = numerics::eig_hermitian2(s.matrix());
  double h = 0.0;
  for (double l : e.values)
    if (l > 0.0) h -= l * std::log(l);
  return h;
}

inline double js_distance(const QubitState& s1, const QubitState& s2) {
  const QubitState mid{0.5 * (s1.p + s2.p), 0.5 * (s1.coh + s2.coh)};
  const double sq = entropy(mid) - 0.5 * entropy(s1) - 0.5 * entropy(s2);
  return std::sqrt(std::max(0.0, sq));
}

// Uniform point in the Bloch ball (or on the sphere when `pure`).
inline BlochVector random_bloch(std::mt19937_64& rng, bool pure = false) {
  std::normal_distribution<double> n01;
  std::uniform_real_distribution<double> u01;
  double x = n01(rng), y = n01(rng), z = n01(rng);
  const double len = std::sqrt(x * x + y * y + z * z);
  const double r = pure ? 1.0 : std::cbrt(u01(rng));
  return {r * x / len, r * y / len, r * z / len};
}

inline QubitState random_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01;
  // Mix in some pure states; the sphere is where the formulas are most delicate.
  return from_bloch(random_bloch(rng, u01(rng) < 0.15));
}

// Model A exponents straight from the defining integrals.
struct QuadExponents {
  double r, s, phi;
};

inline QuadExponents model_a_by_quadrature(const model_a::Params& p, double t) {
  const double kappa = 0.5 * (p.mu + p.nu);
  const double cross = std::sqrt(p.alpha_eff * p.gamma_eff);
  numerics::QuadOptions opts;
  opts.tol = 1e-10;
  // 1 - cos(wt) = 2 sin^2(wt/2) avoids cancellation near w = 0.
  auto one_minus_cos = [t](double w) {
    const double s = std::sin(0.5 * w * t);
    return 2.0 * s * s;
  };
  const double r = 4.0 * numerics::quad_semiinf(
                             [&](double w) {
                               return p.alpha_eff * std::pow(w, p.mu - 1.0) * std::exp(-w) *
                                      one_minus_cos(w);
                             },
                             opts);
  const double gf_part = numerics::quad_semiinf(
      [&](double w) { return cross * std::pow(w, kappa - 1.0) * std::exp(-w) * one_minus_cos(w); },
      opts);
  const double f2 = numerics::quad_semiinf(
      [&](double w) { return p.gamma_eff * std::pow(w, p.nu - 1.0) * std::exp(-w); }, opts);
  const double phi = numerics::quad_semiinf(
      [&](double w) { return cross * std::pow(w, kappa - 1.0) * std::exp(-w) * std::sin(w * t); },
      opts);
  return {r, 2.0 * gf_part - 0.5 * f2, phi};
}

}  // namespace qdist::oracle
