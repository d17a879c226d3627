#include "qdist/distances.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qdist/errors.hpp"

namespace qdist {

std::string_view measure_label(Measure m) {
  switch (m) {
    case Measure::trace: return "D_T";
    case Measure::hilbert_schmidt: return "D_HS";
    case Measure::bures: return "D_B";
    case Measure::hellinger: return "D_H";
    case Measure::jensen_shannon: return "D_JS";
  }
  return "?";
}

double DistanceRecord::get(Measure m) const {
  switch (m) {
    case Measure::trace: return d_t;
    case Measure::hilbert_schmidt: return d_hs;
    case Measure::bures: return d_b;
    case Measure::hellinger: return d_h;
    case Measure::jensen_shannon: return d_js;
  }
  return 0.0;
}

namespace bloch {
namespace {

// Radial quantities of a Bloch vector. 1 - |r|^2 is taken straight from the
// components and drives every sqrt(1 - |r|) below, so no cancellation happens
// near the sphere. Values under 4 kRankSnap (lower eigenvalue under kRankSnap)
// are rounding noise on a pure state and snap to zero.
struct Radial {
  double n;       // |r|, capped at 1
  double deficit; // 1 - |r|^2
};

Radial radial(const BlochVector& r) {
  const double n2 = r.norm2();
  double deficit = 1.0 - n2;
  if (deficit < 4.0 * numerics::kRankSnap) deficit = 0.0;
  return {std::min(1.0, std::sqrt(n2)), deficit};
}

// sqrt((1 - |r|) / 2), the root of the smaller eigenvalue.
double root_minus(const Radial& q) { return std::sqrt(q.deficit / (2.0 * (1.0 + q.n))); }

double one_minus_r2(const BlochVector& r) { return radial(r).deficit; }

double cross_norm2(const BlochVector& u, const BlochVector& v) {
  const double cx = u.y * v.z - u.z * v.y;
  const double cy = u.z * v.x - u.x * v.z;
  const double cz = u.x * v.y - u.y * v.x;
  return cx * cx + cy * cy + cz * cz;
}

// 1 - F without the cancellation of the direct formula:
// (1 - r1.r2)^2 - (1 - r1^2)(1 - r2^2) = |r1 - r2|^2 - |r1 x r2|^2.
double infidelity(const BlochVector& r1, const BlochVector& r2) {
  const double root = std::sqrt(one_minus_r2(r1) * one_minus_r2(r2));
  const double den = (1.0 - dot(r1, r2)) + root;
  if (den <= 0.0) return 0.0;
  const double num = std::max(0.0, (r1 - r2).norm2() - cross_norm2(r1, r2));
  return std::min(1.0, 0.5 * num / den);
}

// sqrt(rho) = a*1 + b.sigma with a = (sqrt(l+) + sqrt(l-))/2 and
// b = r / (2 (sqrt(l+) + sqrt(l-))), l+- = (1 +- r)/2.
struct SqrtBloch {
  double a;
  BlochVector b;
};

SqrtBloch sqrt_bloch(const BlochVector& r) {
  const Radial q = radial(r);
  const double s = std::sqrt(0.5 * (1.0 + q.n)) + root_minus(q);
  const double k = 0.5 / s;
  return {0.5 * s, {k * r.x, k * r.y, k * r.z}};
}

}  // namespace

double trace_distance(const BlochVector& r1, const BlochVector& r2) {
  return 0.5 * (r1 - r2).norm();
}

double hs_distance(const BlochVector& r1, const BlochVector& r2) {
  return (r1 - r2).norm() / std::numbers::sqrt2;
}

double fidelity(const BlochVector& r1, const BlochVector& r2) {
  // Tr(rho1 rho2) + 2 sqrt(det rho1 det rho2).
  const double f = 0.5 * (1.0 + dot(r1, r2)) + 0.5 * std::sqrt(one_minus_r2(r1) * one_minus_r2(r2));
  return std::clamp(f, 0.0, 1.0);
}

double bures_distance(const BlochVector& r1, const BlochVector& r2) {
  const double one_minus_f = infidelity(r1, r2);
  const double one_minus_sqrt_f = one_minus_f / (1.0 + std::sqrt(1.0 - one_minus_f));
  return std::sqrt(2.0 * one_minus_sqrt_f);
}

double affinity(const BlochVector& r1, const BlochVector& r2) {
  const Radial q1 = radial(r1);
  const Radial q2 = radial(r2);
  const double num = (1.0 + std::sqrt(q1.deficit)) * (1.0 + std::sqrt(q2.deficit)) + dot(r1, r2);
  // sqrt(1 - n) = sqrt(2) root_minus.
  const double den = (std::sqrt(1.0 + q1.n) + std::numbers::sqrt2 * root_minus(q1)) *
                     (std::sqrt(1.0 + q2.n) + std::numbers::sqrt2 * root_minus(q2));
  return std::clamp(num / den, 0.0, 1.0);
}

double hellinger_distance(const BlochVector& r1, const BlochVector& r2) {
  // Tr(sqrt(rho1) - sqrt(rho2))^2 = 2 (1 - A), evaluated term by term.
  const SqrtBloch q1 = sqrt_bloch(r1);
  const SqrtBloch q2 = sqrt_bloch(r2);
  const double da = q1.a - q2.a;
  return std::sqrt(2.0 * (da * da + (q1.b - q2.b).norm2()));
}

double js_divergence_squared(const BlochVector& r1, const BlochVector& r2) {
  const BlochVector mid{0.5 * (r1.x + r2.x), 0.5 * (r1.y + r2.y), 0.5 * (r1.z + r2.z)};
  // Summing the end-point entropies first keeps the result exactly symmetric.
  return entropy_from_radius(mid.norm()) -
         0.5 * (entropy_from_radius(r1.norm()) + entropy_from_radius(r2.norm()));
}

double js_distance(const BlochVector& r1, const BlochVector& r2) {
  const double sq = js_divergence_squared(r1, r2);
  if (sq < -kStateTol)
    throw DomainError("js_distance: negative Jensen-Shannon divergence " + std::to_string(sq));
  return std::sqrt(std::max(0.0, sq));
}

DistanceRecord all_distances(const BlochVector& r1, const BlochVector& r2) {
  DistanceRecord rec;
  rec.d_t = trace_distance(r1, r2);
  rec.d_hs = hs_distance(r1, r2);
  rec.d_b = bures_distance(r1, r2);
  rec.d_h = hellinger_distance(r1, r2);
  rec.d_js = js_distance(r1, r2);
  return rec;
}

}  // namespace bloch

double trace_distance(const QubitState& s1, const QubitState& s2) {
  return bloch::trace_distance(to_bloch(s1), to_bloch(s2));
}
double hs_distance(const QubitState& s1, const QubitState& s2) {
  return bloch::hs_distance(to_bloch(s1), to_bloch(s2));
}
double fidelity(const QubitState& s1, const QubitState& s2) {
  return bloch::fidelity(to_bloch(s1), to_bloch(s2));
}
double bures_distance(const QubitState& s1, const QubitState& s2) {
  return bloch::bures_distance(to_bloch(s1), to_bloch(s2));
}
double affinity(const QubitState& s1, const QubitState& s2) {
  return bloch::affinity(to_bloch(s1), to_bloch(s2));
}
double hellinger_distance(const QubitState& s1, const QubitState& s2) {
  return bloch::hellinger_distance(to_bloch(s1), to_bloch(s2));
}
double js_distance(const QubitState& s1, const QubitState& s2) {
  return bloch::js_distance(to_bloch(s1), to_bloch(s2));
}
DistanceRecord all_distances(const QubitState& s1, const QubitState& s2) {
  return bloch::all_distances(to_bloch(s1), to_bloch(s2));
}

}  // namespace qdist
