#ifndef SPINORLAB_LORENTZ_HPP
#define SPINORLAB_LORENTZ_HPP

#include <array>
#include <cmath>
#include <cstddef>

#include "spinorlab/dirac_algebra.hpp"
#include "spinorlab/error.hpp"
#include "spinorlab/kinematics.hpp"
#include "spinorlab/matrix.hpp"
#include "spinorlab/matrix_functions.hpp"

namespace spinorlab {

/// Lorentz algebra element S^μν in the spinor representation.
struct LorentzGenerator {
  std::size_t mu = 0;
  std::size_t nu = 1;
  Matrix4 matrix;
};

/// S^{0k} = (−i/2) diag(σ_k, −σ_k), S^{ij} = (1/2) ε_ijk diag(σ_k, σ_k),
/// S^νμ = −S^μν.
inline LorentzGenerator generator(std::size_t mu, std::size_t nu) {
  if (mu > 3 || nu > 3) throw domain_error("generator: index out of range");
  if (mu == nu) throw domain_error("generator: indices must differ");

  Matrix4 s;
  if (mu == 0 || nu == 0) {
    const std::size_t k = mu == 0 ? nu : mu;
    s = complex{0.0, -0.5} * block_diag(pauli(k), -pauli(k));
    if (nu == 0) s = -s;
  } else {
    const std::size_t k = 6 - mu - nu;
    // ε_ijk for the cyclic order (1,2,3) is +1.
    const bool cyclic = (mu % 3) + 1 == nu;
    s = (cyclic ? 0.5 : -0.5) * block_diag(pauli(k), pauli(k));
  }
  return {mu, nu, s};
}

/// Antisymmetric real parameters ω_μν of a homogeneous Lorentz transformation.
struct LorentzParameters {
  std::array<std::array<double, 4>, 4> omega{};

  /// Sets ω_μν = value and ω_νμ = −value.
  LorentzParameters& set(std::size_t mu, std::size_t nu, double value) {
    omega.at(mu).at(nu) = value;
    omega.at(nu).at(mu) = -value;
    return *this;
  }

  /// Pure boost with the given rapidity: ω_{0k} = 2η.
  static LorentzParameters boost(Rapidity eta) {
    return LorentzParameters{}.set(0, index_of(eta.axis), 2.0 * eta.value);
  }

  /// ω_ij = value for the rotation plane (i, j).
  static LorentzParameters rotation(std::size_t i, std::size_t j, double value) {
    return LorentzParameters{}.set(i, j, value);
  }
};

/// A spinor-representation transformation D. Not unitary for boosts; its
/// inverse is γ⁰D†γ⁰.
struct SpinorTransform {
  Matrix4 matrix = Matrix4::identity();
};

/// D = exp(−(i/2) Σ_{μ<ν} ω_μν S^μν).
///
/// Each independent plane enters once. With ω_{0k} = 2η this reproduces
/// exp(−i η S^{0k}), the closed-form boost of rapidity η.
inline SpinorTransform group_element(const LorentzParameters& params,
                                     const Tolerances& tol = default_tolerances) {
  const auto& w = params.omega;
  Matrix4 exponent;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    if (w[mu][mu] != 0.0) throw domain_error("group_element: ω must be antisymmetric");
    for (std::size_t nu = mu + 1; nu < 4; ++nu) {
      const double scale = std::max(1.0, std::abs(w[mu][nu]));
      if (std::abs(w[mu][nu] + w[nu][mu]) > 1e-14 * scale)
        throw domain_error("group_element: ω must be antisymmetric");
      if (w[mu][nu] != 0.0) exponent += w[mu][nu] * generator(mu, nu).matrix;
    }
  }
  exponent *= complex{0.0, -0.5};
  return {mat_exp(exponent, tol)};
}

/// Closed-form boost taking the rest frame to momentum p:
/// D = diag(m + p·σ, m + p·σ̄) / √(2m(E + m)).
inline SpinorTransform spinor_boost(double m, const FourVector& p,
                                    const Tolerances& tol = default_tolerances) {
  require_on_shell(m, p, tol.on_shell, "spinor_boost");
  const double denom = 2.0 * m * (p[0] + m);
  if (!(denom > 0.0)) throw domain_error("spinor_boost: E + m must be positive");
  const auto c = sigma_contract(p);
  const Matrix2 id = Matrix2::identity();
  return {block_diag(m * id + c.sigma, m * id + c.sigma_bar) / complex{std::sqrt(denom)}};
}

/// Closed-form boost for a particle of mass m with the given rapidity.
inline SpinorTransform spinor_boost(double m, Rapidity eta,
                                    const Tolerances& tol = default_tolerances) {
  return spinor_boost(m, momentum_from_rapidity(m, eta), tol);
}

/// D⁻¹ = γ⁰ D† γ⁰.
inline SpinorTransform inverse(const SpinorTransform& d) { return {pseudo_adjoint(d.matrix)}; }

inline SpinorTransform compose(const SpinorTransform& outer, const SpinorTransform& inner) {
  return {outer.matrix * inner.matrix};
}

/// The 4-vector map Λ induced by D, defined by D slash(q) D⁻¹ = slash(Λq):
/// Λ^μ_ν = Tr(γ^μ D slash(e_ν) D⁻¹) / 4.
inline LorentzMatrix vector_action(const SpinorTransform& d) {
  const auto& g = weyl_gammas();
  const Matrix4 d_inv = inverse(d).matrix;
  LorentzMatrix l;
  for (std::size_t nu = 0; nu < 4; ++nu) {
    FourVector e;
    e[nu] = 1.0;
    const Matrix4 image = d.matrix * slash(e) * d_inv;
    for (std::size_t mu = 0; mu < 4; ++mu) l(mu, nu) = 0.25 * (g.gamma[mu] * image).trace().real();
  }
  return l;
}

/// Real vector-representation boost with rapidity η along an axis.
struct VectorBoost {
  LorentzMatrix matrix;
  Rapidity rapidity;

  FourVector operator()(const FourVector& v) const { return matrix(v); }
};

/// L(η): cosh η on (0,0) and (k,k), −sinh η on (0,k) and (k,0). Applied to
/// a momentum, it transforms components into a frame moving with rapidity η
/// along +k.
inline VectorBoost vector_boost(Rapidity eta) {
  LorentzMatrix l = LorentzMatrix::identity();
  const std::size_t k = index_of(eta.axis);
  const double ch = std::cosh(eta.value);
  const double sh = std::sinh(eta.value);
  l(0, 0) = ch;
  l(k, k) = ch;
  l(0, k) = -sh;
  l(k, 0) = -sh;
  return {l, eta};
}

}  // namespace spinorlab

#endif  // SPINORLAB_LORENTZ_HPP
