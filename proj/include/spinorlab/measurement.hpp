#ifndef SPINORLAB_MEASUREMENT_HPP
#define SPINORLAB_MEASUREMENT_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "spinorlab/dirac_algebra.hpp"
#include "spinorlab/error.hpp"
#include "spinorlab/kinematics.hpp"
#include "spinorlab/matrix.hpp"
#include "spinorlab/spinor.hpp"

namespace spinorlab {

/// Detector orientation (θ, φ) on the momentum-indexed Bloch sphere.
/// θ ∈ [0, π], φ ∈ [−π, π); φ is fixed to 0 at the poles.
struct MeasurementAxis {
  double theta = 0.0;
  double phi = 0.0;

  static MeasurementAxis make(double theta, double phi) {
    constexpr double pi = std::numbers::pi;
    if (!std::isfinite(theta) || !std::isfinite(phi))
      throw domain_error("MeasurementAxis: angles must be finite");
    if (theta < 0.0 || theta > pi) throw domain_error("MeasurementAxis: theta outside [0, pi]");
    double wrapped = std::remainder(phi, 2.0 * pi);  // [−π, π]
    if (wrapped >= pi) wrapped -= 2.0 * pi;
    if (theta == 0.0 || theta == pi) wrapped = 0.0;
    return {theta, wrapped};
  }
};

enum class Outcome { plus, minus };

/// |θ,φ,+⟩ = (cos θ/2, e^{iφ} sin θ/2), |θ,φ,−⟩ = (sin θ/2, −e^{iφ} cos θ/2).
inline Vector2 axis_ket(const MeasurementAxis& axis, Outcome sign) {
  const double c = std::cos(0.5 * axis.theta);
  const double s = std::sin(0.5 * axis.theta);
  const complex phase = std::polar(1.0, axis.phi);
  if (sign == Outcome::plus) return {c, phase * s};
  return {s, -phase * c};
}

struct MeasurementOperator {
  Outcome sign = Outcome::plus;
  Matrix4 matrix;
};

/// M± = diag(P±, P±) with P± = |θ,φ,±⟩⟨θ,φ,±|.
inline MeasurementOperator measurement_operator(const MeasurementAxis& axis, Outcome sign) {
  const Vector2 k = axis_ket(axis, sign);
  const Matrix2 p = outer(k, k);
  return {sign, block_diag(p, p)};
}

/// ψ̄Mψ for a spinor with ψ̄ψ = ±1. The value is returned as is; off the
/// aligned axis it may exceed 1.
inline double spin_expectation(const Spinor& psi, const MeasurementOperator& m,
                               const Tolerances& tol = default_tolerances) {
  if (std::abs(std::abs(pseudo_norm(psi)) - 1.0) > tol.normalization)
    throw domain_error("spin_expectation: spinor must satisfy |psi_bar psi| = 1");
  const complex v = dual(psi) * (m.matrix * psi.components);
  if (std::abs(v.imag()) > tol.imaginary * std::max(1.0, std::abs(v.real())))
    throw numerical_error("spin_expectation: expectation has an imaginary part");
  return v.real();
}

namespace detail {

inline void require_scenario_plane(double m, const FourVector& p, const Tolerances& tol,
                                   const char* where) {
  require_on_shell(m, p, tol.on_shell, where);
  if (std::abs(p[2]) > tol.momentum_match * p[0])
    throw domain_error(std::string(where) +
                       ": p_y must vanish; rotate the momentum into the x-z plane first");
}

}  // namespace detail

/// ū(p,0) M± u(p,0) in closed form for p in the x–z plane:
///   (+) {[(m+E)² − p_z²] cos²(θ/2) − p_x² sin²(θ/2) − 2p_x p_z cos(θ/2) sin(θ/2) cos φ} / (2m(m+E))
///   (−) {[(m+E)² − p_z²] sin²(θ/2) − p_x² cos²(θ/2) + 2p_x p_z cos(θ/2) sin(θ/2) cos φ} / (2m(m+E))
/// The two add up to 1 on shell.
inline double expectation_closed_form(double m, const FourVector& p, const MeasurementAxis& axis,
                                      Outcome sign = Outcome::plus,
                                      const Tolerances& tol = default_tolerances) {
  detail::require_scenario_plane(m, p, tol, "expectation_closed_form");
  const double e = p[0];
  const double px = p[1];
  const double pz = p[3];
  const double c = std::cos(0.5 * axis.theta);
  const double s = std::sin(0.5 * axis.theta);
  const double diag = (m + e) * (m + e) - pz * pz;
  const double cross = 2.0 * px * pz * c * s * std::cos(axis.phi);
  const double num = sign == Outcome::plus ? diag * c * c - px * px * s * s - cross
                                           : diag * s * s - px * px * c * c + cross;
  return num / (2.0 * m * (m + e));
}

/// Residuals (ū M₊ u − 1, ū M₋ u) of the alignment conditions, evaluated with
/// the matrix expectation.
inline std::pair<double, double> alignment_residuals(double m, const FourVector& p,
                                                     const MeasurementAxis& axis,
                                                     const Tolerances& tol = default_tolerances) {
  const Spinor u = spinor(Kind::particle, m, p, 0, tol);
  return {spin_expectation(u, measurement_operator(axis, Outcome::plus), tol) - 1.0,
          spin_expectation(u, measurement_operator(axis, Outcome::minus), tol)};
}

/// Detector axis that sees the spin-up spinor u(p, 0) as perfectly aligned:
/// ū M₊ u = 1 and ū M₋ u = 0, with φ = 0.
///
/// At φ = 0 the condition reads A cos θ + B sin θ = m(m+E) with
/// A = [(m+E)² − p_z² + p_x²]/2 and B = −p_x p_z, whose only root in [0, π] is
/// θ = atan2(B, A) + arccos(m(m+E)/√(A² + B²)). The arccos is evaluated as an
/// atan2 using A² + B² − m²(m+E)² = p_x²(A + m(m+E) + p_z²), so θ is exactly 0
/// when p_x = 0.
inline MeasurementAxis solve_axis(double m, const FourVector& p,
                                  const Tolerances& tol = default_tolerances) {
  detail::require_scenario_plane(m, p, tol, "solve_axis");
  const double e = p[0];
  const double px = p[1];
  const double pz = p[3];
  const double target = m * (m + e);
  const double a = 0.5 * ((m + e) * (m + e) - pz * pz + px * px);
  const double b = -px * pz;
  const double excess = px * px * (a + target + pz * pz);
  const double theta = std::atan2(b, a) + std::atan2(std::sqrt(excess), target);
  if (!std::isfinite(theta) || theta < 0.0 || theta > std::numbers::pi)
    throw solver_error("solve_axis: no root in [0, pi]");
  const MeasurementAxis axis = MeasurementAxis::make(theta, 0.0);
  const double residual = expectation_closed_form(m, p, axis, Outcome::plus, tol) - 1.0;
  if (std::abs(residual) > tol.normalization)
    throw solver_error("solve_axis: alignment residual above tolerance");
  return axis;
}

struct OracleOptions {
  std::size_t grid_points = 10001;  ///< samples of θ over [0, π], endpoints included
  int max_bisections = 200;
};

/// Independent check of solve_axis: scans θ ∈ [0, π] at φ = 0 for the first
/// sign change of ū M₊ u − 1 (matrix evaluation) and bisects it to machine
/// precision. A residual at rounding level already at θ = 0 (p_x = 0, a
/// tangential root) is reported as θ = 0.
inline MeasurementAxis solve_axis_oracle(double m, const FourVector& p,
                                         const OracleOptions& opts = {},
                                         const Tolerances& tol = default_tolerances) {
  detail::require_scenario_plane(m, p, tol, "solve_axis_oracle");
  if (opts.grid_points < 2) throw domain_error("solve_axis_oracle: grid needs at least 2 points");
  const Spinor u = spinor(Kind::particle, m, p, 0, tol);
  auto f = [&](double theta) {
    return spin_expectation(u, measurement_operator({theta, 0.0}, Outcome::plus), tol) - 1.0;
  };

  constexpr double pi = std::numbers::pi;
  const double f0 = f(0.0);
  if (f0 <= 64.0 * std::numeric_limits<double>::epsilon() * (p[0] / m)) return {0.0, 0.0};

  const std::size_t n = opts.grid_points;
  double lo = 0.0;
  double hi = -1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double t = pi * static_cast<double>(i) / static_cast<double>(n - 1);
    if (f(t) <= 0.0) {
      hi = t;
      break;
    }
    lo = t;
  }
  if (hi < 0.0) throw solver_error("solve_axis_oracle: no sign change bracketed");

  for (int it = 0; it < opts.max_bisections; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return MeasurementAxis::make(0.5 * (lo + hi), 0.0);
}

/// cos²(θ/2) = [2(1+cosh ω) + sinh²ω] / [(1+cosh ω)² + sinh²ω] for a particle
/// at rest seen from an observer with rapidity ω.
inline double rest_particle_cos2_half(double omega) {
  const double ch = std::cosh(omega);
  const double sh = std::sinh(omega);
  return (2.0 * (1.0 + ch) + sh * sh) / ((1.0 + ch) * (1.0 + ch) + sh * sh);
}

/// θ for the rest-particle family. Uses sin²(θ/2) = sinh²ω / [(1+cosh ω)² + sinh²ω]
/// so small ω does not lose digits to arccos near 1.
inline MeasurementAxis rest_particle_axis(double omega) {
  if (!std::isfinite(omega)) throw domain_error("rest_particle_axis: rapidity not finite");
  const double ch = std::cosh(omega);
  const double sh = std::sinh(omega);
  const double theta = 2.0 * std::atan2(std::abs(sh), std::sqrt(2.0 * (1.0 + ch) + sh * sh));
  return MeasurementAxis::make(theta, 0.0);
}

}  // namespace spinorlab

#endif  // SPINORLAB_MEASUREMENT_HPP
