#ifndef SPINORLAB_DIRAC_ALGEBRA_HPP
#define SPINORLAB_DIRAC_ALGEBRA_HPP

#include <array>
#include <cstddef>

#include "spinorlab/kinematics.hpp"
#include "spinorlab/matrix.hpp"

namespace spinorlab {

/// Pauli matrices; index 0 is the identity, 1..3 are σ_x, σ_y, σ_z.
inline const Matrix2& pauli(std::size_t k) {
  static const std::array<Matrix2, 4> table = {
      Matrix2{{1.0, 0.0}, {0.0, 1.0}},
      Matrix2{{0.0, 1.0}, {1.0, 0.0}},
      Matrix2{{0.0, -I_unit}, {I_unit, 0.0}},
      Matrix2{{1.0, 0.0}, {0.0, -1.0}},
  };
  return table.at(k);
}

/// Weyl (chiral) representation of the Dirac matrices.
struct GammaSet {
  std::array<Matrix4, 4> gamma;      ///< γ^μ
  std::array<Matrix4, 3> alpha;      ///< α_1..α_3 stored at 0..2
  Matrix4 beta;
  std::array<Matrix2, 4> sigma;      ///< σ^μ = (I, σ⃗)
  std::array<Matrix2, 4> sigma_bar;  ///< σ̄^μ = (I, −σ⃗)
};

namespace detail {

inline GammaSet build_weyl_gammas() {
  GammaSet g;
  const Matrix2& id = pauli(0);
  g.beta = block_offdiag(id, id);
  for (std::size_t k = 1; k <= 3; ++k) g.alpha[k - 1] = block_diag(pauli(k), -pauli(k));
  g.sigma[0] = id;
  g.sigma_bar[0] = id;
  for (std::size_t k = 1; k <= 3; ++k) {
    g.sigma[k] = pauli(k);
    g.sigma_bar[k] = -pauli(k);
  }
  // γ⁰ = β and γ^i = α_i β; in block form γ^μ = [[0, σ^μ], [σ̄^μ, 0]].
  g.gamma[0] = g.beta;
  for (std::size_t k = 1; k <= 3; ++k) g.gamma[k] = g.alpha[k - 1] * g.beta;
  return g;
}

}  // namespace detail

inline const GammaSet& weyl_gammas() {
  static const GammaSet g = detail::build_weyl_gammas();
  return g;
}

inline const Matrix4& gamma0() { return weyl_gammas().gamma[0]; }

/// The contractions p·σ = p⁰I − p⃗·σ⃗ and p·σ̄ = p⁰I + p⃗·σ⃗.
struct SigmaContraction {
  Matrix2 sigma;
  Matrix2 sigma_bar;
};

inline SigmaContraction sigma_contract(const FourVector& p) {
  Matrix2 pp = p[0] * pauli(0);
  Matrix2 pm = p[0] * pauli(0);
  for (std::size_t k = 1; k <= 3; ++k) {
    pp -= p[k] * pauli(k);
    pm += p[k] * pauli(k);
  }
  return {pp, pm};
}

/// Feynman slash γ^μ p_μ = p⁰γ⁰ − p⃗·γ⃗.
inline Matrix4 slash(const FourVector& p) {
  const auto& g = weyl_gammas();
  Matrix4 s = p[0] * g.gamma[0];
  for (std::size_t k = 1; k <= 3; ++k) s -= p[k] * g.gamma[k];
  return s;
}

/// γ⁰ A† γ⁰; a matrix equal to its own pseudo-adjoint is pseudo-Hermitian.
inline Matrix4 pseudo_adjoint(const Matrix4& a) { return gamma0() * a.adjoint() * gamma0(); }

}  // namespace spinorlab

#endif  // SPINORLAB_DIRAC_ALGEBRA_HPP
