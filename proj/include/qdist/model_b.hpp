#pragma once

// Qubit coupled to a single boson mode, H_pm = w a^dag a +- g0 (a + a^dag) +- eps,
// starting from b+|1>|0> + b-|-1>|Omega_lambda> with Omega_lambda a
// superposition of the vacuum and either a coherent state |z> or a number
// state |N>. Units: w = 1, g = g0 / w.

#include <variant>

#include "qdist/numerics.hpp"
#include "qdist/qstate.hpp"

namespace qdist::model_b {

inline constexpr int kDefaultNumberCap = 20;

struct Coherent {
  double z_abs = 1.0;
  double phase = 0.0;
};

struct Number {
  int n = 1;
};

using EnvPrep = std::variant<Coherent, Number>;

/// Sign inside the first sine of Lambda(t): sin(t + phase) or sin(t - phase).
enum class LambdaConvention { plus, minus };

struct Params {
  double g = 0.1;
  double eps = 1.0;
  double lam = 0.0;
  EnvPrep prep = Coherent{};
  Complex b_plus{0.7071067811865476, 0.0};
  Complex b_minus{0.7071067811865476, 0.0};
  int n_cap = kDefaultNumberCap;
  LambdaConvention lambda_convention = LambdaConvention::plus;
};

void validate(const Params& p);

struct CoherentExponents {
  double R = 0.0;
  double S = 0.0;
  double Lam = 0.0;
};

CoherentExponents rsl_coherent(double g, double z_abs, double phase, double t,
                               LambdaConvention conv = LambdaConvention::plus);

/// Number-state factor (2g)^n / sqrt(n!) (e^{-it} - 1)^n. Throws DomainError past `cap`.
Complex b_n(double g, int n, double t, int cap = kDefaultNumberCap);

Complex dephasing_coherent(const Params& p, double t);
Complex dephasing_number(const Params& p, double t);
/// Dispatches on p.prep.
Complex dephasing(const Params& p, double t);

/// Normalisation C_lambda for the configured preparation.
double c_lambda(const Params& p);

QubitState rho(const Params& p, double t);

}  // namespace qdist::model_b
