#ifndef SPINORLAB_MATRIX_FUNCTIONS_HPP
#define SPINORLAB_MATRIX_FUNCTIONS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "spinorlab/error.hpp"
#include "spinorlab/kinematics.hpp"
#include "spinorlab/matrix.hpp"

namespace spinorlab {

namespace detail {

// Padé(13) coefficients and the 1-norm bound below which the [13/13]
// approximant is accurate to unit roundoff in double precision
// (Higham, SIAM J. Matrix Anal. Appl. 26 (2005)).
inline constexpr std::array<double, 14> pade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};
inline constexpr double pade13_theta = 5.371920351148152;

template <std::size_t N>
Matrix<N> expm_pade13(const Matrix<N>& a) {
  const double norm = a.norm1();
  if (!std::isfinite(norm)) throw numerical_error("mat_exp: non-finite input");
  int s = 0;
  if (norm > pade13_theta) s = static_cast<int>(std::ceil(std::log2(norm / pade13_theta)));
  if (s > 1000) throw numerical_error("mat_exp: input norm too large for scaling and squaring");
  const Matrix<N> x = a * std::ldexp(1.0, -s);

  const auto& b = pade13;
  const Matrix<N> id = Matrix<N>::identity();
  const Matrix<N> x2 = x * x;
  const Matrix<N> x4 = x2 * x2;
  const Matrix<N> x6 = x4 * x2;
  const Matrix<N> u_inner = x6 * (b[13] * x6 + b[11] * x4 + b[9] * x2) + b[7] * x6 + b[5] * x4 +
                            b[3] * x2 + b[1] * id;
  const Matrix<N> u = x * u_inner;
  const Matrix<N> v =
      x6 * (b[12] * x6 + b[10] * x4 + b[8] * x2) + b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * id;

  Matrix<N> r = solve(v - u, v + u);
  for (int k = 0; k < s; ++k) r = r * r;
  return r;
}

}  // namespace detail

/// Scaled inverse-consistency residual ‖e^M e^{−M} − I‖ / max(1, ‖e^M‖‖e^{−M}‖).
template <std::size_t N>
double exp_residual(const Matrix<N>& em, const Matrix<N>& e_minus_m) {
  const double scale = std::max(1.0, em.norm() * e_minus_m.norm());
  return (em * e_minus_m - Matrix<N>::identity()).norm() / scale;
}

/// Principal matrix exponential by scaling and squaring with a [13/13] Padé
/// approximant. The result is verified against e^{−M}; a residual above
/// `tol.exp_residual` raises numerical_error.
template <std::size_t N>
Matrix<N> mat_exp(const Matrix<N>& m, const Tolerances& tol = default_tolerances) {
  Matrix<N> e = detail::expm_pade13(m);
  if (!e.is_finite()) throw numerical_error("mat_exp: result is not finite");
  const Matrix<N> e_inv = detail::expm_pade13(-m);
  const double res = exp_residual(e, e_inv);
  if (!(res <= tol.exp_residual))
    throw numerical_error("mat_exp: residual " + std::to_string(res) + " exceeds tolerance");
  return e;
}

/// Principal square root of a 2×2 Hermitian positive semidefinite matrix.
///
/// By Cayley–Hamilton, R = (H + √det H · I) / √(tr H + 2√det H) squares to H
/// and is Hermitian PSD whenever H is. Slightly negative determinants within
/// tolerance are clamped to zero.
inline Matrix2 herm_sqrt2(const Matrix2& h, const Tolerances& tol = default_tolerances) {
  if (!h.is_finite()) throw domain_error("herm_sqrt2: non-finite input");
  const double scale = std::max(1.0, h.norm());
  if ((h - h.adjoint()).norm() > tol.hermitian * scale)
    throw domain_error("herm_sqrt2: matrix is not Hermitian");

  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const complex b = 0.5 * (h(0, 1) + std::conj(h(1, 0)));
  const double half_trace = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(b));
  const double lambda_min = half_trace - radius;
  if (lambda_min < -tol.hermitian * scale)
    throw domain_error("herm_sqrt2: matrix has a negative eigenvalue");

  const double lambda_max = half_trace + radius;
  if (lambda_max <= 0.0) return Matrix2{};
  // det = λ_min λ_max, formed from the eigenvalues to avoid cancellation in ad − |b|².
  const double det = std::max(0.0, lambda_min) * lambda_max;
  const double s = std::sqrt(det);
  const double t = std::sqrt(a + d + 2.0 * s);
  Matrix2 r{{a + s, b}, {std::conj(b), d + s}};
  return r / complex{t};
}

}  // namespace spinorlab

#endif  // SPINORLAB_MATRIX_FUNCTIONS_HPP
