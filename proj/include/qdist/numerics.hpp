#pragma once

#include <array>
#include <complex>
#include <functional>

namespace qdist {

using Complex = std::complex<double>;

namespace numerics {

/// 2x2 Hermitian matrix [[a, c], [conj(c), d]]. Only the upper triangle is stored.
struct Hermitian2 {
  double a = 0.0;
  double d = 0.0;
  Complex c{0.0, 0.0};

  double trace() const { return a + d; }
  double det() const { return a * d - std::norm(c); }
};

/// General complex 2x2 matrix, row-major. Used for products that leave the
/// Hermitian subspace (e.g. sqrt(rho1) * rho2).
struct Mat2 {
  std::array<Complex, 4> m{};

  Complex& operator()(int i, int j) { return m[2 * i + j]; }
  const Complex& operator()(int i, int j) const { return m[2 * i + j]; }

  static Mat2 from(const Hermitian2& h);
  Mat2 adjoint() const;
  Complex trace() const { return m[0] + m[3]; }
  double max_abs() const;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator+(const Mat2& x, const Mat2& y);
Mat2 operator-(const Mat2& x, const Mat2& y);
Mat2 operator*(Complex s, const Mat2& x);

/// Projects a numerically-Hermitian matrix onto the Hermitian subspace.
Hermitian2 hermitian_part(const Mat2& x);

struct Eigen2 {
  std::array<double, 2> values;                  // descending
  std::array<std::array<Complex, 2>, 2> vectors;  // vectors[k] pairs with values[k]
};

/// Euler gamma function for x > 0 (Lanczos, g = 7).
double gamma(double x);

/// Closed-form eigendecomposition of a 2x2 Hermitian matrix.
Eigen2 eig_hermitian2(const Hermitian2& m);

/// Principal square root of a positive semidefinite matrix. Eigenvalues in
/// [-1e-12, 1e-15) are taken as zero; anything more negative is a DomainError.
Hermitian2 sqrt_psd2(const Hermitian2& m);

inline constexpr double kPsdClamp = 1e-12;
// Eigenvalues this small are rounding noise around a rank-deficient matrix;
// their square roots (~3e-8) would otherwise dominate the result.
inline constexpr double kRankSnap = 1e-15;

struct QuadOptions {
  double tol = 1e-10;
  int max_depth = 60;
  long max_evals = 20'000'000;
};

/// Integral of f over (0, inf). f must decay at least exponentially; an
/// integrable algebraic singularity at the origin is allowed. Throws
/// ConvergenceError when the tolerance cannot be met within the caps.
double quad_semiinf(const std::function<double(double)>& f, QuadOptions opts = {});

}  // namespace numerics
}  // namespace qdist
