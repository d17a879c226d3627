#pragma once

// Qubit dephased by an infinite bosonic bath with spectral profile
// g_h^2(w) = alpha w^(mu-1) e^(-w/wc), starting from the correlated state
// b+|1>|vac> + b-|-1>|Omega_lambda>, where Omega_lambda mixes the vacuum with
// the coherent state of profile f^2(w) = gamma w^(nu-1) e^(-w/wc).
//
// Units: wc = 1. Time is in 1/wc, eps in wc, and the couplings are the
// dimensionless products alpha*wc^mu and gamma*wc^nu.

#include "qdist/numerics.hpp"
#include "qdist/qstate.hpp"

namespace qdist::model_a {

struct Params {
  double alpha_eff = 0.01;
  double gamma_eff = 0.05;
  double mu = 0.01;
  double nu = 0.2;
  double eps = 1.0;
  double lam = 0.0;
  Complex b_plus{0.7071067811865476, 0.0};
  Complex b_minus{0.7071067811865476, 0.0};
};

/// Throws ValidationError naming the first bad field.
void validate(const Params& p);

/// w Gamma(m) {1 - cos(m atan t) / (1 + t^2)^(m/2)}.
double l_func(double w, double m, double t);

struct Exponents {
  double r = 0.0;
  double s = 0.0;
  double phi = 0.0;
};

/// Decay r(t), correlation gain s(t) and phase Phi(t) in closed form.
Exponents rst_phi(const Params& p, double t);

/// Normalisation C_lambda of the environment state, using <vac|Omega_f> = exp(-gamma Gamma(nu)/2).
double c_lambda(const Params& p);

/// Dephasing function A_lambda(t); multiplies the initial coherence b+ conj(b-).
Complex dephasing(const Params& p, double t);

/// Reduced qubit state at time t. Throws InvalidStateError on a positivity violation.
QubitState rho(const Params& p, double t);

}  // namespace qdist::model_a
