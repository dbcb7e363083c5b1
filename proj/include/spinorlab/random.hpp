#ifndef SPINORLAB_RANDOM_HPP
#define SPINORLAB_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "spinorlab/kinematics.hpp"
#include "spinorlab/lorentz.hpp"
#include "spinorlab/matrix.hpp"
#include "spinorlab/spinor.hpp"

// Random draws for the property suites. Everything is driven by an explicit
// engine so runs are reproducible from a seed.
namespace spinorlab::random {

using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Engine(seq);
}

inline double uniform(Engine& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::array<double, 3> unit_vector(Engine& rng) {
  const double z = uniform(rng, -1.0, 1.0);
  const double phi = uniform(rng, -std::numbers::pi, std::numbers::pi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

inline double mass(Engine& rng) { return uniform(rng, 0.5, 2.0); }

/// On-shell momentum with rapidity uniform in [0, max_rapidity] and isotropic direction.
inline FourVector on_shell(Engine& rng, double m, double max_rapidity) {
  const double eta = uniform(rng, 0.0, max_rapidity);
  const auto n = unit_vector(rng);
  const double sh = m * std::sinh(eta);
  return {m * std::cosh(eta), sh * n[0], sh * n[1], sh * n[2]};
}

/// On-shell momentum in the x–z plane.
inline FourVector scenario_plane(Engine& rng, double m, double max_rapidity) {
  const double eta = uniform(rng, 0.0, max_rapidity);
  const double ang = uniform(rng, -std::numbers::pi, std::numbers::pi);
  const double sh = m * std::sinh(eta);
  return {m * std::cosh(eta), sh * std::cos(ang), 0.0, sh * std::sin(ang)};
}

inline Axis axis(Engine& rng) {
  return static_cast<Axis>(std::uniform_int_distribution<int>(1, 3)(rng));
}

/// General ω: three boost rapidities in [−max_rapidity, max_rapidity] and
/// three rotation parameters in [−2π, 2π].
inline LorentzParameters lorentz_parameters(Engine& rng, double max_rapidity) {
  LorentzParameters w;
  for (std::size_t k = 1; k <= 3; ++k) w.set(0, k, 2.0 * uniform(rng, -max_rapidity, max_rapidity));
  w.set(1, 2, uniform(rng, -2.0 * std::numbers::pi, 2.0 * std::numbers::pi));
  w.set(2, 3, uniform(rng, -2.0 * std::numbers::pi, 2.0 * std::numbers::pi));
  w.set(3, 1, uniform(rng, -2.0 * std::numbers::pi, 2.0 * std::numbers::pi));
  return w;
}

inline std::pair<complex, complex> coefficients(Engine& rng) {
  std::normal_distribution<double> g;
  complex a0{g(rng), g(rng)};
  complex a1{g(rng), g(rng)};
  const double n = std::sqrt(std::norm(a0) + std::norm(a1));
  return {a0 / n, a1 / n};
}

inline Spinor particle_state(Engine& rng, double m, const FourVector& p) {
  const auto [a0, a1] = coefficients(rng);
  return superpose(m, p, a0, a1, CoefficientPolicy::normalize);
}

template <std::size_t N>
Matrix<N> matrix(Engine& rng, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  Matrix<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = complex{g(rng), g(rng)};
  return m;
}

}  // namespace spinorlab::random

#endif  // SPINORLAB_RANDOM_HPP
