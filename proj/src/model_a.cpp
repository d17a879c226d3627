#include "qdist/model_a.hpp"

#include <cmath>
#include <string>

#include "qdist/errors.hpp"

namespace qdist::model_a {

void validate(const Params& p) {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(p.alpha_eff) || p.alpha_eff < 0.0)
    throw ValidationError("alpha_eff", "must be finite and >= 0");
  if (!finite(p.gamma_eff) || p.gamma_eff < 0.0)
    throw ValidationError("gamma_eff", "must be finite and >= 0");
  if (!finite(p.mu) || p.mu <= 0.0) throw ValidationError("mu", "must be > 0");
  if (!finite(p.nu) || p.nu <= 0.0) throw ValidationError("nu", "must be > 0");
  if (!finite(p.eps)) throw ValidationError("eps", "must be finite");
  if (!finite(p.lam) || p.lam < 0.0 || p.lam > 1.0)
    throw ValidationError("lam", "lam out of [0,1]");
  const double norm = std::norm(p.b_plus) + std::norm(p.b_minus);
  if (std::abs(norm - 1.0) > 1e-12) throw ValidationError("amplitudes", "|b+|^2 + |b-|^2 != 1");
  if (p.b_plus == Complex{} || p.b_minus == Complex{})
    throw ValidationError("amplitudes", "b+ and b- must both be non-zero");
}

double l_func(double w, double m, double t) {
  if (!(m > 0.0)) throw DomainError("l_func: exponent must be > 0");
  return w * numerics::gamma(m) *
         (1.0 - std::cos(m * std::atan(t)) / std::pow(1.0 + t * t, 0.5 * m));
}

Exponents rst_phi(const Params& p, double t) {
  const double kappa = 0.5 * (p.mu + p.nu);
  const double cross = std::sqrt(p.alpha_eff * p.gamma_eff);
  Exponents e;
  e.r = 4.0 * l_func(p.alpha_eff, p.mu, t);
  e.s = 2.0 * l_func(cross, kappa, t) - 0.5 * p.gamma_eff * numerics::gamma(p.nu);
  e.phi = cross * numerics::gamma(kappa) * std::sin(kappa * std::atan(t)) /
          std::pow(1.0 + t * t, 0.5 * kappa);
  return e;
}

double c_lambda(const Params& p) {
  const double overlap = std::exp(-0.5 * p.gamma_eff * numerics::gamma(p.nu));
  const double l = p.lam;
  return std::sqrt((1.0 - l) * (1.0 - l) + l * l + 2.0 * l * (1.0 - l) * overlap);
}

Complex dephasing(const Params& p, double t) {
  const Exponents e = rst_phi(p, t);
  const Complex bracket = (1.0 - p.lam) + p.lam * std::exp(Complex{e.s, -2.0 * e.phi});
  return std::exp(Complex{-e.r, -2.0 * p.eps * t}) * bracket / c_lambda(p);
}

QubitState rho(const Params& p, double t) {
  const QubitState s{std::norm(p.b_plus), p.b_plus * std::conj(p.b_minus) * dephasing(p, t)};
  const ValidityReport rep = validate(s);
  if (!rep.valid())
    throw InvalidStateError("model A state not positive (margin " +
                            std::to_string(rep.positivity_margin) + ")");
  return s;
}

}  // namespace qdist::model_a
