#ifndef SPINORLAB_SCENARIO_HPP
#define SPINORLAB_SCENARIO_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "spinorlab/error.hpp"
#include "spinorlab/kinematics.hpp"
#include "spinorlab/lorentz.hpp"
#include "spinorlab/measurement.hpp"

namespace spinorlab {

// Earth-satellite setup: a source at rest on Earth emits particles of rapidity
// eta (momentum along -z), and a satellite moving along -x with rapidity omega
// measures their spin.
struct ScenarioConfig {
  double mass = 1.0;
  double eta = 0.0;
  double omega = 0.0;

  void validate() const {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw domain_error("scenario: mass must be positive");
    if (!std::isfinite(eta) || !std::isfinite(omega))
      throw domain_error("scenario: rapidities must be finite");
  }
};

struct SweepRow {
  double eta = 0.0;
  double omega = 0.0;
  FourVector p_prime;
  double theta = 0.0;
  double phi = 0.0;
  double cos2_half_theta = 1.0;
};

/// p' = (m cosh ω cosh η, m sinh ω cosh η, 0, −m sinh η).
inline FourVector satellite_momentum(const ScenarioConfig& cfg) {
  cfg.validate();
  const double m = cfg.mass;
  return {m * std::cosh(cfg.omega) * std::cosh(cfg.eta), m * std::sinh(cfg.omega) * std::cosh(cfg.eta),
          0.0, -m * std::sinh(cfg.eta)};
}

/// The same momentum composed from vector boosts: L(−ω, x) · L(η, z) · p₀.
inline FourVector satellite_momentum_composed(const ScenarioConfig& cfg) {
  cfg.validate();
  const FourVector rest{cfg.mass, 0.0, 0.0, 0.0};
  const VectorBoost source = vector_boost({cfg.eta, Axis::z});
  const VectorBoost satellite = vector_boost({-cfg.omega, Axis::x});
  return satellite(source(rest));
}

inline MeasurementAxis scenario_axis(const ScenarioConfig& cfg,
                                     const Tolerances& tol = default_tolerances) {
  return solve_axis(cfg.mass, satellite_momentum(cfg), tol);
}

inline SweepRow evaluate_row(double eta, double omega, double m,
                             const Tolerances& tol = default_tolerances) {
  const ScenarioConfig cfg{m, eta, omega};
  const FourVector p = satellite_momentum(cfg);
  const MeasurementAxis axis = solve_axis(m, p, tol);
  const double c = std::cos(0.5 * axis.theta);
  return {eta, omega, p, axis.theta, axis.phi, c * c};
}

/// One row per (η, ω) pair, η-major.
inline std::vector<SweepRow> sweep(const std::vector<double>& eta_grid,
                                   const std::vector<double>& omega_grid, double m = 1.0,
                                   const Tolerances& tol = default_tolerances) {
  for (double v : eta_grid)
    if (!std::isfinite(v) || v < 0.0) throw domain_error("sweep: eta grid must be finite and >= 0");
  for (double v : omega_grid)
    if (!std::isfinite(v) || v < 0.0)
      throw domain_error("sweep: omega grid must be finite and >= 0");
  std::vector<SweepRow> rows;
  rows.reserve(eta_grid.size() * omega_grid.size());
  for (double eta : eta_grid)
    for (double omega : omega_grid) rows.push_back(evaluate_row(eta, omega, m, tol));
  return rows;
}

/// `points` equally spaced values from lo to hi inclusive; a single point is lo.
inline std::vector<double> linspace(double lo, double hi, std::size_t points) {
  if (points == 0) throw domain_error("linspace: need at least one point");
  std::vector<double> v(points);
  if (points == 1) {
    v[0] = lo;
    return v;
  }
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) v[i] = lo + step * static_cast<double>(i);
  v.back() = hi;
  return v;
}

inline constexpr double default_grid_max = 3.0;
inline constexpr std::size_t default_grid_points = 61;

inline std::vector<double> default_grid() {
  return linspace(0.0, default_grid_max, default_grid_points);
}

struct RestParticleRow {
  double omega = 0.0;
  double theta = 0.0;
  double cos2_half_theta = 1.0;
};

/// Rest-particle curve θ(ω) on [0, omega_max] with `points` samples.
inline std::vector<RestParticleRow> rest_particle_curve(double omega_max, std::size_t points) {
  if (points < 2) throw domain_error("rest_particle_curve: need at least 2 points");
  if (!std::isfinite(omega_max) || omega_max < 0.0)
    throw domain_error("rest_particle_curve: omega_max must be finite and >= 0");
  std::vector<RestParticleRow> rows;
  rows.reserve(points);
  for (double omega : linspace(0.0, omega_max, points))
    rows.push_back({omega, rest_particle_axis(omega).theta, rest_particle_cos2_half(omega)});
  return rows;
}

}  // namespace spinorlab

#endif  // SPINORLAB_SCENARIO_HPP
