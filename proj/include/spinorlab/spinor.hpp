#ifndef SPINORLAB_SPINOR_HPP
#define SPINORLAB_SPINOR_HPP

#include <cmath>
#include <optional>

#include "spinorlab/dirac_algebra.hpp"
#include "spinorlab/error.hpp"
#include "spinorlab/kinematics.hpp"
#include "spinorlab/lorentz.hpp"
#include "spinorlab/matrix.hpp"
#include "spinorlab/matrix_functions.hpp"

namespace spinorlab {

enum class Kind { particle, antiparticle };

/// A Dirac spinor at fixed momentum. `spin` is set only for the basis
/// spinors u(p, α), v(p, α).
struct Spinor {
  Vector4 components;
  Kind kind = Kind::particle;
  FourVector momentum{1.0, 0.0, 0.0, 0.0};
  double mass = 1.0;
  std::optional<int> spin;
};

/// Row spinor ψ̄ = ψ†γ⁰.
struct DualSpinor {
  Vector4 components;  ///< entries of the row

  complex operator*(const Vector4& v) const {
    complex s{};
    for (std::size_t i = 0; i < 4; ++i) s += components[i] * v[i];
    return s;
  }
  complex operator*(const Spinor& v) const { return (*this) * v.components; }

  DualSpinor operator*(const Matrix4& m) const {
    DualSpinor r;
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t i = 0; i < 4; ++i) r.components[j] += components[i] * m(i, j);
    return r;
  }
};

/// Column-times-row product ψ χ̄.
inline Matrix4 outer(const Vector4& col, const DualSpinor& row) {
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = col[i] * row.components[j];
  return m;
}

/// Two-component basis: ξ^α for particles, η^α for antiparticles
/// (η⁰ = (0, 1), η¹ = (1, 0)).
inline Vector2 spin_basis(Kind kind, int alpha) {
  if (alpha != 0 && alpha != 1) throw domain_error("spin label must be 0 or 1");
  const bool up = (kind == Kind::particle) == (alpha == 0);
  return up ? Vector2{1.0, 0.0} : Vector2{0.0, 1.0};
}

/// u(p₀, α) = (ξ^α, ξ^α)/√2 and v(p₀, α) = (η^α, −η^α)/√2.
///
/// The antiparticle factor is taken real, so v̄v = −1 rather than +1: the
/// block structure of γ⁰ makes v̄v = −2|M|² for any normalization M.
inline Spinor rest_spinor(Kind kind, int alpha, double m = 1.0) {
  if (!(m > 0.0)) throw domain_error("rest_spinor: mass must be positive");
  const Vector2 chi = spin_basis(kind, alpha);
  const double n = 1.0 / std::sqrt(2.0);
  const Vector2 lower = kind == Kind::particle ? chi : complex{-1.0} * chi;
  return {complex{n} * stack(chi, lower), kind, FourVector{m, 0.0, 0.0, 0.0}, m, alpha};
}

/// Basis spinor at momentum p from the boost blocks:
/// u = ((m + p·σ)ξ, (m + p·σ̄)ξ)/√(4m(E + m)), v analogously with (η, −η).
inline Spinor spinor(Kind kind, double m, const FourVector& p, int alpha,
                     const Tolerances& tol = default_tolerances) {
  require_on_shell(m, p, tol.on_shell, "spinor");
  const Vector2 chi = spin_basis(kind, alpha);
  const auto c = sigma_contract(p);
  const Matrix2 id = Matrix2::identity();
  const complex norm{1.0 / std::sqrt(4.0 * m * (p[0] + m))};
  Vector2 upper = (m * id + c.sigma) * chi;
  Vector2 lower = (m * id + c.sigma_bar) * chi;
  if (kind == Kind::antiparticle) lower *= -1.0;
  return {norm * stack(upper, lower), kind, p, m, alpha};
}

/// The same basis spinor built from matrix square roots:
/// u = (√(p·σ)ξ, √(p·σ̄)ξ)/√(2m), v = (√(p·σ)η, −√(p·σ̄)η)/√(2m).
inline Spinor spinor_sqrt_form(Kind kind, double m, const FourVector& p, int alpha,
                               const Tolerances& tol = default_tolerances) {
  require_on_shell(m, p, tol.on_shell, "spinor_sqrt_form");
  const Vector2 chi = spin_basis(kind, alpha);
  const auto c = sigma_contract(p);
  const complex norm{1.0 / std::sqrt(2.0 * m)};
  Vector2 upper = herm_sqrt2(c.sigma, tol) * chi;
  Vector2 lower = herm_sqrt2(c.sigma_bar, tol) * chi;
  if (kind == Kind::antiparticle) lower *= -1.0;
  return {norm * stack(upper, lower), kind, p, m, alpha};
}

inline DualSpinor dual(const Vector4& psi) {
  DualSpinor d;
  const Matrix4& g0 = gamma0();
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) d.components[j] += std::conj(psi[i]) * g0(i, j);
  return d;
}

inline DualSpinor dual(const Spinor& psi) { return dual(psi.components); }

/// ψ̄ψ, real for every spinor.
inline double pseudo_norm(const Spinor& psi) { return (dual(psi) * psi).real(); }

/// What superpose() does with coefficients whose squared moduli do not sum to 1.
enum class CoefficientPolicy { strict, normalize };

/// ψ(p) = a₀u(p, 0) + a₁u(p, 1).
inline Spinor superpose(double m, const FourVector& p, complex a0, complex a1,
                        CoefficientPolicy policy = CoefficientPolicy::strict,
                        const Tolerances& tol = default_tolerances) {
  const double weight = std::norm(a0) + std::norm(a1);
  if (!(weight > 0.0) || !std::isfinite(weight))
    throw domain_error("superpose: coefficients must not both vanish");
  if (std::abs(weight - 1.0) > tol.normalization) {
    if (policy == CoefficientPolicy::strict)
      throw domain_error("superpose: |a0|^2 + |a1|^2 must equal 1");
    const double s = 1.0 / std::sqrt(weight);
    a0 *= s;
    a1 *= s;
  }
  const Spinor u0 = spinor(Kind::particle, m, p, 0, tol);
  const Spinor u1 = spinor(Kind::particle, m, p, 1, tol);
  return {a0 * u0.components + a1 * u1.components, Kind::particle, p, m, std::nullopt};
}

/// Probability 4-current j^μ = ψ̄γ^μψ, so j⁰ = ψ†ψ. With γ^i = α_iβ the
/// spatial part is −ψ†α⃗ψ; for ψ̄ψ = 1 the current is p/m.
inline FourVector current(const Spinor& psi) {
  const auto& g = weyl_gammas();
  const DualSpinor bar = dual(psi);
  FourVector j;
  for (std::size_t mu = 0; mu < 4; ++mu) j[mu] = (bar * (g.gamma[mu] * psi.components)).real();
  return j;
}

/// ‖(slash(p) ∓ m)ψ‖ with the sign fixed by the spinor kind.
inline double dirac_residual(const Spinor& psi) {
  const double sign = psi.kind == Kind::particle ? -1.0 : 1.0;
  const Matrix4 op = slash(psi.momentum) + sign * psi.mass * Matrix4::identity();
  return (op * psi.components).norm();
}

/// ψ' = Dψ, relabelled with the momentum Λp of the matching vector map.
inline Spinor transform(const SpinorTransform& d, const Spinor& psi) {
  return {d.matrix * psi.components, psi.kind, vector_action(d)(psi.momentum), psi.mass,
          std::nullopt};
}

}  // namespace spinorlab

#endif  // SPINORLAB_SPINOR_HPP
