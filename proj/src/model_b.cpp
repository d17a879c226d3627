#include "qdist/model_b.hpp"

#include <cmath>
#include <string>

#include "qdist/errors.hpp"

namespace qdist::model_b {

void validate(const Params& p) {
  if (!std::isfinite(p.g) || p.g < 0.0) throw ValidationError("g", "must be finite and >= 0");
  if (!std::isfinite(p.eps)) throw ValidationError("eps", "must be finite");
  if (!std::isfinite(p.lam) || p.lam < 0.0 || p.lam > 1.0)
    throw ValidationError("lam", "lam out of [0,1]");
  if (p.n_cap < 0) throw ValidationError("n_cap", "must be >= 0");
  if (const auto* c = std::get_if<Coherent>(&p.prep)) {
    if (!std::isfinite(c->z_abs) || c->z_abs < 0.0)
      throw ValidationError("z_abs", "must be finite and >= 0");
    if (!std::isfinite(c->phase)) throw ValidationError("phase", "must be finite");
  } else {
    const int n = std::get<Number>(p.prep).n;
    if (n < 0 || n > p.n_cap)
      throw ValidationError("n", "must lie in [0, " + std::to_string(p.n_cap) + "]");
  }
  const double norm = std::norm(p.b_plus) + std::norm(p.b_minus);
  if (std::abs(norm - 1.0) > 1e-12) throw ValidationError("amplitudes", "|b+|^2 + |b-|^2 != 1");
}

CoherentExponents rsl_coherent(double g, double z_abs, double phase, double t,
                               LambdaConvention conv) {
  const double shifted = conv == LambdaConvention::plus ? t + phase : t - phase;
  CoherentExponents e;
  e.R = 4.0 * g * g * (1.0 - std::cos(t));
  e.S = 2.0 * g * z_abs * (std::cos(phase) - std::cos(t - phase)) - 0.5 * z_abs * z_abs;
  e.Lam = g * z_abs * (std::sin(shifted) + std::sin(phase));
  return e;
}

Complex b_n(double g, int n, double t, int cap) {
  if (n < 0) throw DomainError("b_n: negative number state");
  if (n > cap)
    throw DomainError("b_n: number state " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  const Complex base = 2.0 * g * (std::exp(Complex{0.0, -t}) - 1.0);
  // base^n / sqrt(n!) by cumulative product.
  Complex acc{1.0, 0.0};
  for (int k = 1; k <= n; ++k) acc *= base / std::sqrt(static_cast<double>(k));
  return acc;
}

double c_lambda(const Params& p) {
  double overlap = 0.0;
  if (const auto* c = std::get_if<Coherent>(&p.prep))
    overlap = std::exp(-0.5 * c->z_abs * c->z_abs);
  else
    overlap = std::get<Number>(p.prep).n == 0 ? 1.0 : 0.0;
  const double l = p.lam;
  return std::sqrt((1.0 - l) * (1.0 - l) + l * l + 2.0 * l * (1.0 - l) * overlap);
}

namespace {

Complex common_factor(const Params& p, double t) {
  const double R = 4.0 * p.g * p.g * (1.0 - std::cos(t));
  return std::exp(Complex{-R, -2.0 * p.eps * t}) / c_lambda(p);
}

}  // namespace

Complex dephasing_coherent(const Params& p, double t) {
  const auto* c = std::get_if<Coherent>(&p.prep);
  if (c == nullptr) throw DomainError("dephasing_coherent: preparation is not coherent");
  const CoherentExponents e = rsl_coherent(p.g, c->z_abs, c->phase, t, p.lambda_convention);
  const Complex bracket = (1.0 - p.lam) + p.lam * std::exp(Complex{e.S, -2.0 * e.Lam});
  return common_factor(p, t) * bracket;
}

Complex dephasing_number(const Params& p, double t) {
  const auto* num = std::get_if<Number>(&p.prep);
  if (num == nullptr) throw DomainError("dephasing_number: preparation is not a number state");
  const Complex bracket = (1.0 - p.lam) + p.lam * b_n(p.g, num->n, t, p.n_cap);
  return common_factor(p, t) * bracket;
}

Complex dephasing(const Params& p, double t) {
  return std::holds_alternative<Coherent>(p.prep) ? dephasing_coherent(p, t)
                                                  : dephasing_number(p, t);
}

QubitState rho(const Params& p, double t) {
  const QubitState s{std::norm(p.b_plus), p.b_plus * std::conj(p.b_minus) * dephasing(p, t)};
  const ValidityReport rep = validate(s);
  if (!rep.valid())
    throw InvalidStateError("model B state not positive (margin " +
                            std::to_string(rep.positivity_margin) + ")");
  return s;
}

}  // namespace qdist::model_b
