#ifndef SPINORLAB_SUITES_HPP
#define SPINORLAB_SUITES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "spinorlab/density.hpp"
#include "spinorlab/dirac_algebra.hpp"
#include "spinorlab/kinematics.hpp"
#include "spinorlab/lorentz.hpp"
#include "spinorlab/matrix_functions.hpp"
#include "spinorlab/measurement.hpp"
#include "spinorlab/random.hpp"
#include "spinorlab/scenario.hpp"
#include "spinorlab/spinor.hpp"

// Randomized property suites behind `spinor-lab check`. Each suite reports the
// worst residual it saw (or, for witnesses, the smallest value that must stay
// away from zero).
namespace spinorlab::suites {

enum class Bound {
  at_most,  ///< pass iff value <= tol
  above     ///< pass iff value > tol
};

struct SuiteResult {
  std::string name;
  double value = 0.0;
  Bound bound = Bound::at_most;
  std::size_t samples = 0;

  bool passed(double tol) const {
    if (!std::isfinite(value)) return false;
    return bound == Bound::at_most ? value <= tol : value > tol;
  }
};

struct CheckOptions {
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
};

// The oracle scan costs ~10^4 matrix evaluations per sample; this many samples
// keeps a default check well inside its time budget.
inline constexpr std::size_t max_oracle_samples = 100;

namespace detail {

using random::Engine;

inline double max_entry(const Matrix4& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

inline double max_entry(const Vector4& v) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(v[i]));
  return worst;
}

/// Pure boost of rapidity ≤ max_rapidity in a random direction after a random rotation.
inline SpinorTransform random_transform(Engine& rng, double max_rapidity) {
  const SpinorTransform boost = spinor_boost(1.0, random::on_shell(rng, 1.0, max_rapidity));
  LorentzParameters w;
  w.set(1, 2, random::uniform(rng, -6.0, 6.0));
  w.set(2, 3, random::uniform(rng, -6.0, 6.0));
  w.set(3, 1, random::uniform(rng, -6.0, 6.0));
  return compose(boost, group_element(w));
}

/// Random pseudo-Hermitian matrix (γ⁰A†γ⁰ = A).
inline Matrix4 random_observable(Engine& rng) {
  const Matrix4 x = random::matrix<4>(rng, 1.0);
  return 0.5 * (x + pseudo_adjoint(x));
}

inline DensityMatrix random_density(Engine& rng, double max_rapidity) {
  const double m = random::mass(rng);
  const FourVector p = random::on_shell(rng, m, max_rapidity);
  const int n = std::uniform_int_distribution<int>(1, 3)(rng);
  std::vector<double> w(static_cast<std::size_t>(n));
  double total = 0.0;
  for (auto& x : w) total += (x = random::uniform(rng, 0.05, 1.0));
  Ensemble ens;
  for (int k = 0; k < n; ++k)
    ens.push_back({w[static_cast<std::size_t>(k)] / total, random::particle_state(rng, m, p)});
  return density(ens);
}

inline MeasurementAxis random_axis(Engine& rng) {
  return MeasurementAxis::make(random::uniform(rng, 0.0, std::numbers::pi),
                               random::uniform(rng, -std::numbers::pi, std::numbers::pi));
}

}  // namespace detail

inline double clifford_residual() {
  const auto& g = weyl_gammas();
  double worst = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      const Matrix4 r = anticommutator(g.gamma[mu], g.gamma[nu]) -
                        (2.0 * metric(mu, nu)) * Matrix4::identity();
      worst = std::max(worst, detail::max_entry(r));
    }
  return worst;
}

inline double alpha_beta_residual() {
  const auto& g = weyl_gammas();
  const Matrix4 id = Matrix4::identity();
  double worst = detail::max_entry(g.beta * g.beta - id);
  for (std::size_t i = 0; i < 3; ++i) {
    worst = std::max(worst, detail::max_entry(anticommutator(g.alpha[i], g.beta)));
    for (std::size_t j = 0; j < 3; ++j) {
      const double delta = i == j ? 2.0 : 0.0;
      worst = std::max(worst, detail::max_entry(anticommutator(g.alpha[i], g.alpha[j]) - delta * id));
    }
  }
  return worst;
}

/// [S^μν, S^ρσ] = i(g^νρ S^μσ − g^μρ S^νσ − g^νσ S^μρ + g^μσ S^νρ) over all
/// index pairs; S^μμ is taken as 0.
inline double lorentz_closure_residual() {
  auto s = [](std::size_t a, std::size_t b) {
    return a == b ? Matrix4{} : generator(a, b).matrix;
  };
  double worst = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      for (std::size_t rho = 0; rho < 4; ++rho)
        for (std::size_t sg = 0; sg < 4; ++sg) {
          if (rho == sg) continue;
          const Matrix4 lhs = commutator(s(mu, nu), s(rho, sg));
          const Matrix4 rhs = I_unit * (metric(nu, rho) * s(mu, sg) - metric(mu, rho) * s(nu, sg) -
                                        metric(nu, sg) * s(mu, rho) + metric(mu, sg) * s(nu, rho));
          worst = std::max(worst, detail::max_entry(lhs - rhs));
        }
    }
  return worst;
}

inline double generator_commutator_residual() {
  const auto& g = weyl_gammas();
  double worst = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      const Matrix4 from_gammas = complex{0.0, 0.25} * commutator(g.gamma[mu], g.gamma[nu]);
      worst = std::max(worst, detail::max_entry(generator(mu, nu).matrix - from_gammas));
    }
  return worst;
}

inline std::vector<SuiteResult> run_property_suites(const CheckOptions& opts) {
  using detail::Engine;
  using detail::max_entry;
  const std::size_t n = std::max<std::size_t>(opts.trials, 1);
  std::vector<SuiteResult> out;
  std::uint64_t stream = 0;

  auto sampled = [&](const std::string& name, std::size_t samples,
                     const std::function<double(Engine&)>& draw, Bound bound = Bound::at_most) {
    Engine rng = random::make_engine(opts.seed, stream++);
    double acc = bound == Bound::at_most ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
      const double v = draw(rng);
      if (std::isnan(v)) {
        acc = v;
        break;
      }
      acc = bound == Bound::at_most ? std::max(acc, v) : std::min(acc, v);
    }
    out.push_back({name, acc, bound, samples});
  };
  auto fixed = [&](const std::string& name, double value) {
    ++stream;
    out.push_back({name, value, Bound::at_most, 1});
  };

  // Tensor core.
  sampled("herm_sqrt2_square", n, [](Engine& rng) {
    const Matrix2 x = random::matrix<2>(rng, random::uniform(rng, 0.01, 10.0));
    const Matrix2 h = x * x.adjoint();
    const Matrix2 r = herm_sqrt2(h);
    return (r * r - h).norm() / (1.0 + h.norm());
  });
  sampled("mat_exp_unitary", n, [](Engine& rng) {
    const Matrix4 x = random::matrix<4>(rng, 1.0);
    const Matrix4 e = mat_exp(0.5 * (x - x.adjoint()));
    return (e.adjoint() * e - Matrix4::identity()).norm();
  });
  sampled("momentum_on_shell", n, [](Engine& rng) {
    const double m = random::mass(rng);
    const FourVector p =
        momentum_from_rapidity(m, {random::uniform(rng, -3.0, 3.0), random::axis(rng)});
    return std::abs(minkowski_dot(p, p) - m * m) / (m * m);
  });

  // Dirac algebra.
  fixed("clifford_anticommutators", clifford_residual());
  fixed("alpha_beta_relations", alpha_beta_residual());
  sampled("sigma_contraction_product", n, [](Engine& rng) {
    const double m = random::mass(rng);
    const FourVector p = random::on_shell(rng, m, 5.0);
    const auto c = sigma_contract(p);
    return (c.sigma * c.sigma_bar - minkowski_dot(p, p) * Matrix2::identity()).norm() /
           (p[0] * p[0]);
  });

  // Lorentz representation.
  fixed("lorentz_algebra_closure", lorentz_closure_residual());
  fixed("generator_commutator_form", generator_commutator_residual());
  sampled("representation_exp_vs_closed", n, [](Engine& rng) {
    const Rapidity eta{random::uniform(rng, -3.0, 3.0), random::axis(rng)};
    return max_entry(group_element(LorentzParameters::boost(eta)).matrix -
                     spinor_boost(1.0, eta).matrix);
  });
  sampled("pseudo_unitary_inverse", n, [](Engine& rng) {
    const SpinorTransform d = detail::random_transform(rng, 3.0);
    return max_entry(inverse(d).matrix * d.matrix - Matrix4::identity());
  });
  sampled("unit_determinant", n, [](Engine& rng) {
    const SpinorTransform d = group_element(random::lorentz_parameters(rng, 1.0));
    return std::abs(determinant(d.matrix) - 1.0);
  });
  sampled(
      "non_unitarity_witness", n,
      [](Engine& rng) {
        double eta = 0.0;
        while (eta == 0.0) eta = random::uniform(rng, -3.0, 3.0);
        const SpinorTransform d = spinor_boost(1.0, Rapidity{eta, random::axis(rng)});
        return (d.matrix.adjoint() * d.matrix - Matrix4::identity()).norm();
      },
      Bound::above);
  sampled("vector_boost_metric", n, [](Engine& rng) {
    const VectorBoost l = vector_boost({random::uniform(rng, -5.0, 5.0), random::axis(rng)});
    const FourVector a{random::uniform(rng, -1, 1), random::uniform(rng, -1, 1),
                       random::uniform(rng, -1, 1), random::uniform(rng, -1, 1)};
    const FourVector b{random::uniform(rng, -1, 1), random::uniform(rng, -1, 1),
                       random::uniform(rng, -1, 1), random::uniform(rng, -1, 1)};
    const double scale = l.matrix(0, 0) * l.matrix(0, 0);
    return std::max(l.matrix.metric_defect() / scale,
                    std::abs(minkowski_dot(l(a), l(b)) - minkowski_dot(a, b)) / scale);
  });
  sampled("boost_intertwining", n, [](Engine& rng) {
    const double m = random::mass(rng);
    const Rapidity eta{random::uniform(rng, -3.0, 3.0), random::axis(rng)};
    const SpinorTransform d = spinor_boost(m, eta);
    // The active boost taking p0 to momentum_from_rapidity(m, eta).
    const VectorBoost l = vector_boost({-eta.value, eta.axis});
    const FourVector q{random::uniform(rng, -1, 1), random::uniform(rng, -1, 1),
                       random::uniform(rng, -1, 1), random::uniform(rng, -1, 1)};
    return max_entry(d.matrix * slash(q) * inverse(d).matrix - slash(l(q)));
  });

  // Spinor states.
  sampled("dirac_residual", n, [](Engine& rng) {
    const double m = random::mass(rng);
    const FourVector p = random::on_shell(rng, m, 5.0);
    double worst = 0.0;
    for (Kind k : {Kind::particle, Kind::antiparticle})
      for (int a : {0, 1}) worst = std::max(worst, dirac_residual(spinor(k, m, p, a)));
    return worst;
  });
  sampled("spinor_normalization", n, [](Engine& rng) {
    const double m = random::mass(rng);
    const FourVector p = random::on_shell(rng, m, 5.0);
    double worst = 0.0;
    for (int a : {0, 1})
      for (int b : {0, 1}) {
        const Spinor ua = spinor(Kind::particle, m, p, a);
        const Spinor ub = spinor(Kind::particle, m, p, b);
        const Spinor va = spinor(Kind::antiparticle, m, p, a);
        const Spinor vb = spinor(Kind::antiparticle, m, p, b);
        const double delta = a == b ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(dual(ua) * ub - delta));
        worst = std::max(worst, std::abs(dual(va) * vb + delta));
        worst = std::max(worst, std::abs(inner(ua.components, ub.components) - delta * p[0] / m));
      }
    return worst;
  });
  sampled("boost_vs_sqrt_construction", n, [](Engine& rng) {
    const double m = random::mass(rng);
    const FourVector p = random::on_shell(rng, m, 5.0);
    double worst = 0.0;
    for (Kind k : {Kind::particle, Kind::antiparticle})
      for (int a : {0, 1})
        worst = std::max(worst, max_entry(spinor(k, m, p, a).components -
                                          spinor_sqrt_form(k, m, p, a).components));
    return worst;
  });
  sampled("completeness", n, [](Engine& rng) {
    const double m = random::mass(rng);
    const FourVector p = random::on_shell(rng, m, 5.0);
    const SigmaBasis b = sigma_ops(m, p);
    const Matrix4 expected = (slash(p) + m * Matrix4::identity()) / complex{2.0 * m};
    return max_entry(b.identity - expected) / (p[0] / m);
  });
  sampled("norm_invariance", n, [](Engine& rng) {
    const double m = random::mass(rng);
    const Spinor psi = random::particle_state(rng, m, random::on_shell(rng, m, 3.0));
    const Spinor moved = transform(detail::random_transform(rng, 3.0), psi);
    return std::abs(pseudo_norm(moved) - pseudo_norm(psi));
  });
  sampled("transformed_dirac_residual", n, [](Engine& rng) {
    const double m = random::mass(rng);
    const Spinor psi = random::particle_state(rng, m, random::on_shell(rng, m, 2.0));
    const Spinor moved = transform(detail::random_transform(rng, 2.0), psi);
    return dirac_residual(moved) / (moved.momentum[0] / m);
  });
  sampled("expectation_covariance", n, [](Engine& rng) {
    const DensityMatrix rho = detail::random_density(rng, 3.0);
    const Matrix4 a = detail::random_observable(rng);
    const SpinorTransform d = detail::random_transform(rng, 3.0);
    return std::abs(expectation(transform_operator(d, a), transform(d, rho)) - expectation(a, rho));
  });
  sampled("trace_power_invariance", n, [](Engine& rng) {
    const DensityMatrix rho = detail::random_density(rng, 3.0);
    const auto before = trace_powers(rho, 4);
    const auto after = trace_powers(transform(detail::random_transform(rng, 3.0), rho), 4);
    double worst = 0.0;
    for (std::size_t k = 0; k < before.size(); ++k)
      worst = std::max(worst, std::abs(after[k] - before[k]));
    return worst;
  });
  sampled("purity_invariance", n, [](Engine& rng) {
    const DensityMatrix rho = detail::random_density(rng, 3.0);
    return std::abs(purity(transform(detail::random_transform(rng, 3.0), rho)) - purity(rho));
  });
  sampled("bloch_roundtrip", n, [](Engine& rng) {
    const double m = random::mass(rng);
    const FourVector p = random::on_shell(rng, m, 3.0);
    const auto dir = random::unit_vector(rng);
    const double len = random::uniform(rng, 0.0, 1.0);
    const BlochVector r{{len * dir[0], len * dir[1], len * dir[2]}};
    const BlochVector back = bloch(bloch_compose(m, p, r));
    double worst = 0.0;
    for (std::size_t l = 0; l < 3; ++l) worst = std::max(worst, std::abs(back.r[l] - r.r[l]));
    return worst;
  });

  // Spin measurement.
  sampled("measurement_sum_rule", n, [](Engine& rng) {
    const double m = random::mass(rng);
    const Spinor psi = random::particle_state(rng, m, random::on_shell(rng, m, 3.0));
    const MeasurementAxis axis = detail::random_axis(rng);
    return std::abs(spin_expectation(psi, measurement_operator(axis, Outcome::plus)) +
                    spin_expectation(psi, measurement_operator(axis, Outcome::minus)) - 1.0);
  });
  sampled("closed_form_vs_matrix", n, [](Engine& rng) {
    const double m = random::mass(rng);
    const FourVector p = random::scenario_plane(rng, m, 3.0);
    const MeasurementAxis axis = detail::random_axis(rng);
    const Spinor u = spinor(Kind::particle, m, p, 0);
    double worst = 0.0;
    for (Outcome s : {Outcome::plus, Outcome::minus})
      worst = std::max(worst, std::abs(expectation_closed_form(m, p, axis, s) -
                                       spin_expectation(u, measurement_operator(axis, s))));
    return worst;
  });
  sampled("axis_solver_residual", n, [](Engine& rng) {
    const double m = random::mass(rng);
    const FourVector p = random::scenario_plane(rng, m, 3.0);
    const auto [plus, minus] = alignment_residuals(m, p, solve_axis(m, p));
    return std::max(std::abs(plus), std::abs(minus));
  });
  sampled("axis_solver_vs_oracle", std::min(n, max_oracle_samples), [](Engine& rng) {
    const ScenarioConfig cfg{1.0, random::uniform(rng, 0.0, 3.0), random::uniform(rng, 0.05, 3.0)};
    const FourVector p = satellite_momentum(cfg);
    return std::abs(solve_axis(1.0, p).theta - solve_axis_oracle(1.0, p).theta);
  });
  sampled("rest_particle_family", n, [](Engine& rng) {
    const double omega = random::uniform(rng, 0.0, 5.0);
    const FourVector p{std::cosh(omega), std::sinh(omega), 0.0, 0.0};
    return std::abs(solve_axis(1.0, p).theta - rest_particle_axis(omega).theta);
  });

  // Scenario.
  sampled("satellite_momentum_paths", n, [](Engine& rng) {
    const ScenarioConfig cfg{random::mass(rng), random::uniform(rng, 0.0, 3.0),
                             random::uniform(rng, 0.0, 3.0)};
    const FourVector direct = satellite_momentum(cfg);
    return max_abs_diff(direct, satellite_momentum_composed(cfg)) / direct[0];
  });
  sampled("satellite_spinor_boost", n, [](Engine& rng) {
    const ScenarioConfig cfg{random::mass(rng), random::uniform(rng, 0.0, 3.0),
                             random::uniform(rng, 0.0, 3.0)};
    const FourVector p = satellite_momentum(cfg);
    const SpinorTransform d = spinor_boost(cfg.mass, p);
    double worst = 0.0;
    for (int a : {0, 1})
      worst = std::max(worst, max_entry(d.matrix * rest_spinor(Kind::particle, a, cfg.mass).components -
                                        spinor(Kind::particle, cfg.mass, p, a).components));
    return worst;
  });
  return out;
}

struct CheckReport {
  std::vector<SuiteResult> results;
  double tol = 0.0;

  bool passed() const {
    return std::all_of(results.begin(), results.end(),
                       [&](const SuiteResult& r) { return r.passed(tol); });
  }

  const SuiteResult* first_failure() const {
    for (const auto& r : results)
      if (!r.passed(tol)) return &r;
    return nullptr;
  }
};

inline CheckReport run_check(const CheckOptions& opts) {
  return {run_property_suites(opts), opts.tol};
}

/// Deterministic text report: no timings, fixed number formatting.
inline void print_report(std::ostream& os, const CheckReport& report, const CheckOptions& opts) {
  char line[160];
  std::snprintf(line, sizeof line, "spinor-lab check: seed=%llu trials=%zu tol=%.3e\n",
                static_cast<unsigned long long>(opts.seed), opts.trials, report.tol);
  os << line;
  for (const auto& r : report.results) {
    std::snprintf(line, sizeof line, "  %-30s %s=%.3e  samples=%-5zu %s\n", r.name.c_str(),
                  r.bound == Bound::at_most ? "max_residual" : "min_witness ", r.value, r.samples,
                  r.passed(report.tol) ? "PASS" : "FAIL");
    os << line;
  }
  if (const SuiteResult* f = report.first_failure())
    os << "result: FAIL (first failing suite: " << f->name << ")\n";
  else
    os << "result: PASS (" << report.results.size() << " suites)\n";
}

}  // namespace spinorlab::suites

#endif  // SPINORLAB_SUITES_HPP
