#ifndef SPINORLAB_DENSITY_HPP
#define SPINORLAB_DENSITY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "spinorlab/dirac_algebra.hpp"
#include "spinorlab/error.hpp"
#include "spinorlab/kinematics.hpp"
#include "spinorlab/lorentz.hpp"
#include "spinorlab/matrix.hpp"
#include "spinorlab/spinor.hpp"

namespace spinorlab {

struct EnsembleMember {
  double weight = 1.0;
  Spinor state;
};

using Ensemble = std::vector<EnsembleMember>;

/// ρ(p) = Σ q_k ψ_k ψ̄_k at a single momentum. Pseudo-Hermitian (γ⁰ρ†γ⁰ = ρ)
/// rather than Hermitian, so it is stored as a general matrix.
struct DensityMatrix {
  Matrix4 rho;
  FourVector momentum{1.0, 0.0, 0.0, 0.0};
  double mass = 1.0;
};

inline bool same_momentum(const FourVector& a, const FourVector& b, double rel_tol) {
  const double scale = std::max({1.0, std::abs(a[0]), std::abs(b[0])});
  return max_abs_diff(a, b) <= rel_tol * scale;
}

/// Builds ρ from a particle ensemble sharing one momentum. Weights must be
/// nonnegative and sum to 1, and every state must satisfy ψ̄ψ = 1.
inline DensityMatrix density(const Ensemble& ens, const Tolerances& tol = default_tolerances) {
  if (ens.empty()) throw domain_error("density: empty ensemble");
  const Spinor& first = ens.front().state;
  double total = 0.0;
  Matrix4 rho;
  for (const auto& member : ens) {
    if (!(member.weight >= 0.0) || !std::isfinite(member.weight))
      throw domain_error("density: weights must be nonnegative");
    const Spinor& psi = member.state;
    if (psi.kind != Kind::particle)
      throw domain_error("density: ensembles are built from particle states");
    if (!same_momentum(psi.momentum, first.momentum, tol.momentum_match) ||
        std::abs(psi.mass - first.mass) > tol.momentum_match * first.mass)
      throw domain_error("density: all states must share one momentum");
    if (std::abs(pseudo_norm(psi) - 1.0) > tol.normalization)
      throw domain_error("density: states must satisfy psi_bar psi = 1");
    total += member.weight;
    rho += member.weight * outer(psi.components, dual(psi));
  }
  if (std::abs(total - 1.0) > tol.normalization)
    throw domain_error("density: weights must sum to 1");
  return {rho, first.momentum, first.mass};
}

/// ρ' = DρD⁻¹ at the transformed momentum.
inline DensityMatrix transform(const SpinorTransform& d, const DensityMatrix& rho) {
  return {d.matrix * rho.rho * inverse(d).matrix, vector_action(d)(rho.momentum), rho.mass};
}

/// A' = DAD⁻¹, the observable matching a transformed state.
inline Matrix4 transform_operator(const SpinorTransform& d, const Matrix4& a) {
  return d.matrix * a * inverse(d).matrix;
}

/// Tr(Aρ).
inline complex expectation(const Matrix4& a, const DensityMatrix& rho) {
  return (a * rho.rho).trace();
}

/// Momentum-dependent Pauli basis Σ^l(p) and I(p) built from u(p, α)ū(p, α).
struct SigmaBasis {
  std::array<Matrix4, 3> sigma;  ///< Σ_x, Σ_y, Σ_z
  Matrix4 identity;              ///< I(p) = Σ_α u ū
};

inline SigmaBasis sigma_ops(double m, const FourVector& p,
                            const Tolerances& tol = default_tolerances) {
  const Spinor u0 = spinor(Kind::particle, m, p, 0, tol);
  const Spinor u1 = spinor(Kind::particle, m, p, 1, tol);
  const Matrix4 u00 = outer(u0.components, dual(u0));
  const Matrix4 u01 = outer(u0.components, dual(u1));
  const Matrix4 u10 = outer(u1.components, dual(u0));
  const Matrix4 u11 = outer(u1.components, dual(u1));
  SigmaBasis b;
  b.sigma[0] = u01 + u10;
  b.sigma[1] = I_unit * (u10 - u01);
  b.sigma[2] = u00 - u11;
  b.identity = u00 + u11;
  return b;
}

struct BlochVector {
  std::array<double, 3> r{};

  double norm() const { return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]); }
};

/// r_l = Tr(ρ Σ^l(p)). The traces are real for pseudo-Hermitian ρ; only the
/// real parts are kept.
inline BlochVector bloch(const DensityMatrix& rho, const Tolerances& tol = default_tolerances) {
  const SigmaBasis b = sigma_ops(rho.mass, rho.momentum, tol);
  BlochVector v;
  for (std::size_t l = 0; l < 3; ++l) v.r[l] = expectation(b.sigma[l], rho).real();
  return v;
}

/// ρ(p) = I(p)/2 + r_l Σ^l(p)/2.
inline DensityMatrix bloch_compose(double m, const FourVector& p, const BlochVector& r,
                                   const Tolerances& tol = default_tolerances) {
  for (double c : r.r)
    if (!std::isfinite(c)) throw domain_error("bloch_compose: non-finite Bloch vector");
  if (r.norm() > 1.0 + tol.normalization) throw domain_error("bloch_compose: |r| > 1");
  const SigmaBasis b = sigma_ops(m, p, tol);
  Matrix4 rho = 0.5 * b.identity;
  for (std::size_t l = 0; l < 3; ++l) rho += (0.5 * r.r[l]) * b.sigma[l];
  return {rho, p, m};
}

/// Tr ρ^k for k = 1..kmax. These are real for pseudo-Hermitian ρ, and
/// similarity invariance makes the list Lorentz invariant.
inline std::vector<double> trace_powers(const DensityMatrix& rho, int kmax) {
  if (kmax < 1) throw domain_error("trace_powers: kmax must be at least 1");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(kmax));
  Matrix4 power = rho.rho;
  for (int k = 1; k <= kmax; ++k) {
    out.push_back(power.trace().real());
    power = power * rho.rho;
  }
  return out;
}

inline double purity(const DensityMatrix& rho) { return trace_powers(rho, 2)[1]; }

}  // namespace spinorlab

#endif  // SPINORLAB_DENSITY_HPP
