#include "qdist/qstate.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qdist/errors.hpp"

namespace qdist {

double BlochVector::norm() const { return std::sqrt(norm2()); }

double dot(const BlochVector& u, const BlochVector& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }

BlochVector operator-(const BlochVector& u, const BlochVector& v) {
  return {u.x - v.x, u.y - v.y, u.z - v.z};
}

QubitState from_bloch(const BlochVector& r) {
  if (!(r.norm() <= 1.0 + kStateTol))
    throw DomainError("from_bloch: Bloch vector longer than 1 (|r| = " + std::to_string(r.norm()) +
                      ")");
  return {0.5 * (1.0 + r.z), Complex{0.5 * r.x, -0.5 * r.y}};
}

BlochVector to_bloch(const QubitState& s) {
  return {2.0 * s.coh.real(), -2.0 * s.coh.imag(), 2.0 * s.p - 1.0};
}

double entropy_from_radius(double r) {
  if (1.0 - r < 1e-12) return 0.0;
  if (r == 0.0) return std::numbers::ln2;
  return std::numbers::ln2 - 0.5 * std::log((1.0 - r) * (1.0 + r)) -
         0.5 * r * std::log((1.0 + r) / (1.0 - r));
}

double von_neumann_entropy(const QubitState& s) { return entropy_from_radius(to_bloch(s).norm()); }

ValidityReport validate(const QubitState& s) {
  ValidityReport rep;
  rep.population_ok = s.p >= -kStateTol && s.p <= 1.0 + kStateTol;
  rep.positivity_margin = s.p * (1.0 - s.p) - std::norm(s.coh);
  return rep;
}

}  // namespace qdist
