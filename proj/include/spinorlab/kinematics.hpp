#ifndef SPINORLAB_KINEMATICS_HPP
#define SPINORLAB_KINEMATICS_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <string>

#include "spinorlab/error.hpp"

namespace spinorlab {

/// Default tolerances. The identities checked here are exact, so defaults sit
/// near machine precision; everything that takes a tolerance accepts an
/// override.
struct Tolerances {
  double on_shell = 1e-9;        ///< relative |p·p − m²| / m²
  double exp_residual = 1e-13;   ///< scaled ‖e^M e^{−M} − I‖
  double hermitian = 1e-12;      ///< relative ‖H − H†‖ and negative-eigenvalue slack
  double normalization = 1e-10;  ///< ψ̄ψ, Σ|a|², Σq, |r| checks
  double imaginary = 1e-10;      ///< allowed imaginary part of real-valued functionals
  double momentum_match = 1e-12; ///< relative equality of momenta inside one ensemble
};

inline const Tolerances default_tolerances{};

/// Contravariant 4-vector (x⁰, x¹, x², x³) in natural units, metric (+,−,−,−).
struct FourVector {
  std::array<double, 4> x{};

  constexpr FourVector() = default;
  constexpr FourVector(double t, double a, double b, double c) : x{t, a, b, c} {}

  constexpr double& operator[](std::size_t mu) { return x[mu]; }
  constexpr const double& operator[](std::size_t mu) const { return x[mu]; }

  constexpr double t() const { return x[0]; }
  double spatial_norm() const { return std::sqrt(x[1] * x[1] + x[2] * x[2] + x[3] * x[3]); }

  friend constexpr FourVector operator+(FourVector a, const FourVector& b) {
    for (std::size_t i = 0; i < 4; ++i) a.x[i] += b.x[i];
    return a;
  }
  friend constexpr FourVector operator-(FourVector a, const FourVector& b) {
    for (std::size_t i = 0; i < 4; ++i) a.x[i] -= b.x[i];
    return a;
  }
  friend constexpr FourVector operator*(double s, FourVector a) {
    for (auto& v : a.x) v *= s;
    return a;
  }
  friend constexpr bool operator==(const FourVector&, const FourVector&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const FourVector& p) {
  return os << '(' << p[0] << ", " << p[1] << ", " << p[2] << ", " << p[3] << ')';
}

/// g^μν = diag(1, −1, −1, −1).
constexpr double metric(std::size_t mu, std::size_t nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

constexpr double minkowski_dot(const FourVector& a, const FourVector& b) {
  return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

/// Largest absolute component difference.
inline double max_abs_diff(const FourVector& a, const FourVector& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

enum class Axis { x = 1, y = 2, z = 3 };

constexpr std::size_t index_of(Axis a) { return static_cast<std::size_t>(a); }

/// Boost parameter along a Cartesian axis. The sign of `value` carries the
/// direction, so a boost along −x is {−ω, Axis::x}.
struct Rapidity {
  double value = 0.0;
  Axis axis = Axis::z;

  double velocity() const { return std::tanh(value); }
};

/// p = (m cosh η, m sinh η n̂) with n̂ the rapidity axis.
inline FourVector momentum_from_rapidity(double m, Rapidity eta) {
  if (!(m > 0.0) || !std::isfinite(m))
    throw domain_error("momentum_from_rapidity: mass must be positive");
  if (!std::isfinite(eta.value)) throw domain_error("momentum_from_rapidity: rapidity not finite");
  FourVector p{m * std::cosh(eta.value), 0.0, 0.0, 0.0};
  p[index_of(eta.axis)] = m * std::sinh(eta.value);
  return p;
}

/// Throws unless p·p = m² (relative tolerance) with positive energy.
inline void require_on_shell(double m, const FourVector& p, double rel_tol,
                             const char* where) {
  if (!(m > 0.0) || !std::isfinite(m))
    throw domain_error(std::string(where) + ": mass must be positive");
  for (double c : p.x)
    if (!std::isfinite(c)) throw domain_error(std::string(where) + ": momentum not finite");
  if (!(p[0] > 0.0)) throw domain_error(std::string(where) + ": energy must be positive");
  const double mismatch = std::abs(minkowski_dot(p, p) - m * m);
  if (mismatch > rel_tol * std::max(m * m, p[0] * p[0]))
    throw domain_error(std::string(where) + ": momentum is off-shell");
}

/// Real 4×4 matrix acting on contravariant 4-vectors: (Λx)^μ = Λ^μ_ν x^ν.
struct LorentzMatrix {
  std::array<std::array<double, 4>, 4> m{};

  static LorentzMatrix identity() {
    LorentzMatrix l;
    for (std::size_t i = 0; i < 4; ++i) l.m[i][i] = 1.0;
    return l;
  }

  double& operator()(std::size_t i, std::size_t j) { return m[i][j]; }
  double operator()(std::size_t i, std::size_t j) const { return m[i][j]; }

  FourVector operator()(const FourVector& v) const {
    FourVector r;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
    return r;
  }

  friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
    LorentzMatrix r;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t j = 0; j < 4; ++j) r.m[i][j] += a.m[i][k] * b.m[k][j];
    return r;
  }

  LorentzMatrix transpose() const {
    LorentzMatrix r;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  /// max |(ΛᵀgΛ − g)_μν|.
  double metric_defect() const {
    double worst = 0.0;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        double s = 0.0;
        for (std::size_t mu = 0; mu < 4; ++mu) s += m[mu][a] * metric(mu, mu) * m[mu][b];
        worst = std::max(worst, std::abs(s - metric(a, b)));
      }
    return worst;
  }
};

}  // namespace spinorlab

#endif  // SPINORLAB_KINEMATICS_HPP
