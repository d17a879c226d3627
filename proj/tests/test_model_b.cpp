#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "qdist/distances.hpp"
#include "qdist/errors.hpp"
#include "qdist/model_b.hpp"

using namespace qdist;
using model_b::Coherent;
using model_b::Number;
using model_b::Params;

namespace {

constexpr double kPi = std::numbers::pi;

// Truncated Fock-space propagation of the single mode. The dephasing factor is
// <psi_-(t)|psi_+(t)> with psi_+ = e^{-iH_+ t}|0> and psi_- = e^{-iH_- t}|Omega>.
class FockOracle {
 public:
  static constexpr int kLevels = 60;
  using Vec = Eigen::VectorXcd;

  FockOracle(double g, double eps) : eps_(eps) {
    Eigen::MatrixXd hp = Eigen::MatrixXd::Zero(kLevels, kLevels);
    Eigen::MatrixXd hm = hp;
    for (int n = 0; n < kLevels; ++n) {
      hp(n, n) = hm(n, n) = n;
      if (n + 1 < kLevels) {
        const double off = g * std::sqrt(n + 1.0);
        hp(n, n + 1) = hp(n + 1, n) = off;
        hm(n, n + 1) = hm(n + 1, n) = -off;
      }
    }
    plus_.compute(hp);
    minus_.compute(hm);
  }

  static Vec vacuum() {
    Vec v = Vec::Zero(kLevels);
    v(0) = 1.0;
    return v;
  }
  static Vec number(int n) {
    Vec v = Vec::Zero(kLevels);
    v(n) = 1.0;
    return v;
  }
  static Vec coherent(Complex z) {
    Vec v(kLevels);
    Complex c = std::exp(-0.5 * std::norm(z));
    for (int n = 0; n < kLevels; ++n) {
      v(n) = c;
      c *= z / std::sqrt(n + 1.0);
    }
    return v;
  }

  Complex dephasing(double lam, const Vec& env, double t) const {
    Vec omega = (1.0 - lam) * vacuum() + lam * env;
    omega /= omega.norm();
    const Vec pp = evolve(plus_, vacuum(), t) * std::exp(Complex{0.0, -eps_ * t});
    const Vec pm = evolve(minus_, omega, t) * std::exp(Complex{0.0, eps_ * t});
    return pm.dot(pp);  // conjugates the first argument
  }

 private:
  static Vec evolve(const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>& es, const Vec& v,
                    double t) {
    const Eigen::MatrixXcd vecs = es.eigenvectors().cast<Complex>();
    Vec coeffs = vecs.adjoint() * v;
    for (int k = 0; k < kLevels; ++k) coeffs(k) *= std::exp(Complex{0.0, -es.eigenvalues()(k) * t});
    return vecs * coeffs;
  }

  double eps_;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> plus_, minus_;
};

}  // namespace

TEST_SUITE("model_b") {
  TEST_CASE("coherent exponents") {
    const auto e0 = model_b::rsl_coherent(0.1, 1.0, 0.0, 0.0);
    CHECK(e0.R == 0.0);
    CHECK(e0.S == doctest::Approx(-0.5));
    CHECK(e0.Lam == 0.0);
    const auto pi = model_b::rsl_coherent(0.1, 1.0, 0.0, kPi);
    CHECK(pi.R == doctest::Approx(0.08).epsilon(1e-14));
    CHECK(pi.S == doctest::Approx(0.4 - 0.5).epsilon(1e-14));
    for (double t : {0.3, 1.7, 5.0}) {
      for (auto conv : {model_b::LambdaConvention::plus, model_b::LambdaConvention::minus}) {
        const auto a = model_b::rsl_coherent(0.2, 0.7, 0.4, t, conv);
        const auto b = model_b::rsl_coherent(0.2, 0.7, 0.4, t + 2.0 * kPi, conv);
        CHECK(a.R == doctest::Approx(b.R).epsilon(1e-12));
        CHECK(a.S == doctest::Approx(b.S).epsilon(1e-12));
        CHECK(a.Lam == doctest::Approx(b.Lam).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("number-state factor") {
    CHECK(model_b::b_n(0.1, 0, 1.3) == Complex{1.0, 0.0});
    CHECK(std::abs(model_b::b_n(0.1, 3, 0.0)) == 0.0);
    // |e^{-i pi} - 1| = 2, so |B_N(pi)| = (4g)^N / sqrt(N!).
    CHECK(std::abs(model_b::b_n(0.1, 2, kPi)) == doctest::Approx(0.16 / std::sqrt(2.0)));
    const Complex b1 = model_b::b_n(0.25, 1, 0.5);
    CHECK(b1.real() == doctest::Approx(0.5 * (std::cos(0.5) - 1.0)));
    CHECK(b1.imag() == doctest::Approx(-0.5 * std::sin(0.5)));
    CHECK_THROWS_AS(model_b::b_n(0.1, 21, 1.0), DomainError);
    CHECK_NOTHROW(model_b::b_n(0.1, 21, 1.0, 30));
    CHECK_THROWS_AS(model_b::b_n(0.1, -1, 1.0), DomainError);
  }

  TEST_CASE("normalisation") {
    Params p;
    p.lam = 0.5;
    p.prep = Number{1};
    CHECK(model_b::c_lambda(p) == doctest::Approx(1.0 / std::sqrt(2.0)));
    p.prep = Number{0};
    CHECK(model_b::c_lambda(p) == doctest::Approx(1.0));
    p.prep = Coherent{0.0, 0.0};
    CHECK(model_b::c_lambda(p) == doctest::Approx(1.0));
    p.lam = 1.0;
    p.prep = Coherent{2.0, 0.3};
    CHECK(model_b::c_lambda(p) == 1.0);
  }

  TEST_CASE("dephasing examples") {
    Params p;
    p.lam = 1.0;
    p.prep = Coherent{1.0, 0.0};
    CHECK(model_b::dephasing(p, 0.0).real() == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
    p.lam = 0.0;
    CHECK(model_b::dephasing(p, 0.0) == Complex{1.0, 0.0});
    // n = 0 reproduces the vacuum dynamics.
    Params q = p;
    q.lam = 0.7;
    q.prep = Number{0};
    for (double t : {0.4, 2.0, 6.0}) {
      const Complex a = model_b::dephasing(p, t), b = model_b::dephasing(q, t);
      CHECK(std::abs(a - b) <= 1e-14);
    }
    // Quasi-periodicity: the bath part repeats every 2 pi, eps adds a phase.
    for (double lam : {0.0, 0.3, 1.0}) {
      p.lam = lam;
      p.prep = Coherent{0.8, 0.6};
      for (double t : {0.2, 1.9, 4.4}) {
        const Complex a = model_b::dephasing(p, t);
        const Complex b = model_b::dephasing(p, t + 2.0 * kPi);
        CHECK(std::abs(b - a * std::exp(Complex{0.0, -4.0 * kPi * p.eps})) <= 1e-12);
      }
    }
  }

  TEST_CASE("coherent environment matches Fock-space propagation") {
    for (double g : {0.1, 0.3}) {
      const FockOracle oracle(g, 1.0);
      for (double lam : {0.0, 0.25, 0.5, 1.0}) {
        for (double z_abs : {0.25, 1.0, 2.0}) {
          Params p;
          p.g = g;
          p.lam = lam;
          p.prep = Coherent{z_abs, 0.0};
          const auto env = FockOracle::coherent(z_abs);
          for (double t : {0.0, 0.7, 2.1, 3.5, 6.0}) {
            const Complex exact = oracle.dephasing(lam, env, t);
            CHECK(std::abs(model_b::dephasing(p, t) - exact) <= 1e-10);
          }
        }
      }
    }
  }

  TEST_CASE("number-state modulus matches Fock-space propagation") {
    const FockOracle oracle(0.1, 1.0);
    for (int n : {1, 2, 4}) {
      for (double lam : {0.5, 1.0}) {
        Params p;
        p.lam = lam;
        p.prep = Number{n};
        for (double t : {0.5, 1.5, 3.0, 5.5}) {
          const Complex exact = oracle.dephasing(lam, FockOracle::number(n), t);
          if (lam == 1.0)
            CHECK(std::abs(model_b::dephasing(p, t)) ==
                  doctest::Approx(std::abs(exact)).epsilon(1e-10));
          // The bath-only factor B_N has the exact modulus for every n.
          const double exact_bn = std::pow(2.0 * p.g * std::abs(std::exp(Complex{0.0, t}) - 1.0), n) /
                                  std::sqrt(std::tgamma(n + 1.0));
          CHECK(std::abs(model_b::b_n(p.g, n, t)) == doctest::Approx(exact_bn).epsilon(1e-12));
        }
      }
    }
  }

  TEST_CASE("reduced state stays physical") {
    for (double lam : {0.0, 0.5, 1.0}) {
      for (double z_abs : {0.0, 1.0, 3.0}) {
        Params p;
        p.lam = lam;
        p.prep = Coherent{z_abs, 0.5};
        for (int i = 0; i <= 200; ++i) {
          const double t = 4.0 * kPi * i / 200.0;
          CHECK(std::abs(model_b::dephasing(p, t)) <= 1.0 + 1e-12);
          CHECK(validate(model_b::rho(p, t)).valid());
        }
      }
    }
  }

  TEST_CASE("distances repeat with the mode period") {
    Params p1, p2;
    p1.lam = 0.0;
    p2.lam = 0.75;
    for (double t : {0.3, 2.2, 5.1}) {
      const auto a = all_distances(model_b::rho(p1, t), model_b::rho(p2, t));
      const auto b = all_distances(model_b::rho(p1, t + 2.0 * kPi), model_b::rho(p2, t + 2.0 * kPi));
      for (std::size_t k = 0; k < 5; ++k) CHECK(std::abs(a.values()[k] - b.values()[k]) <= 1e-10);
    }
  }

  TEST_CASE("validation") {
    Params p;
    p.g = -0.1;
    CHECK_THROWS_AS(model_b::validate(p), ValidationError);
    p = Params{};
    p.prep = Number{25};
    try {
      model_b::validate(p);
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      CHECK(e.field() == "n");
    }
    p = Params{};
    p.lam = 2.0;
    CHECK_THROWS_WITH_AS(model_b::validate(p), doctest::Contains("lam out of [0,1]"), ValidationError);
    p = Params{};
    p.prep = Coherent{-1.0, 0.0};
    CHECK_THROWS_AS(model_b::validate(p), ValidationError);
    CHECK_NOTHROW(model_b::validate(Params{}));
  }
}
