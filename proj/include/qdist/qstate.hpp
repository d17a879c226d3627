#pragma once

#include "qdist/numerics.hpp"

namespace qdist {

/// Global validity tolerance shared by every state check.
inline constexpr double kStateTol = 1e-12;

/// Qubit density matrix [[p, coh], [conj(coh), 1-p]]. Trace one by construction.
struct QubitState {
  double p = 0.5;
  Complex coh{0.0, 0.0};

  numerics::Hermitian2 matrix() const { return {p, 1.0 - p, coh}; }
};

/// rho = (1 + r.sigma) / 2.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm2() const { return x * x + y * y + z * z; }
  double norm() const;
};

double dot(const BlochVector& u, const BlochVector& v);
BlochVector operator-(const BlochVector& u, const BlochVector& v);

QubitState from_bloch(const BlochVector& r);
BlochVector to_bloch(const QubitState& s);

/// Von Neumann entropy in nats.
double von_neumann_entropy(const QubitState& s);
/// Same quantity from the Bloch radius.
double entropy_from_radius(double r);

struct ValidityReport {
  bool trace_one = true;  // structural
  bool population_ok = true;
  double positivity_margin = 0.0;  // p(1-p) - |coh|^2

  bool valid() const { return trace_one && population_ok && positivity_margin >= -kStateTol; }
};

ValidityReport validate(const QubitState& s);

}  // namespace qdist
