#include <cmath>

#include "catch_amalgamated.hpp"
#include "spinorlab/random.hpp"
#include "spinorlab/spinor.hpp"

using namespace spinorlab;
using Catch::Matchers::WithinAbs;

namespace {

const FourVector p_rest{1.0, 0.0, 0.0, 0.0};
const FourVector p_z{1.25, 0.0, 0.0, 0.75};
const double r2 = 1.0 / std::sqrt(2.0);

void check_components(const Vector4& got, const Vector4& want, double tol = 1e-15) {
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK_THAT(got[i].real(), WithinAbs(want[i].real(), tol));
    CHECK_THAT(got[i].imag(), WithinAbs(want[i].imag(), tol));
  }
}

}  // namespace

TEST_CASE("rest spinors", "[spinor]") {
  check_components(rest_spinor(Kind::particle, 0).components, {r2, 0, r2, 0});
  check_components(rest_spinor(Kind::particle, 1).components, {0, r2, 0, r2});
  check_components(rest_spinor(Kind::antiparticle, 0).components, {0, r2, 0, -r2});
  check_components(rest_spinor(Kind::antiparticle, 1).components, {r2, 0, -r2, 0});
  CHECK_THAT(pseudo_norm(rest_spinor(Kind::particle, 0)), WithinAbs(1.0, 1e-15));
  CHECK_THAT(pseudo_norm(rest_spinor(Kind::antiparticle, 0)), WithinAbs(-1.0, 1e-15));
  CHECK(rest_spinor(Kind::particle, 1).spin == 1);
  CHECK_THROWS_AS(rest_spinor(Kind::particle, 2), domain_error);
  CHECK_THROWS_AS(rest_spinor(Kind::particle, 0, 0.0), domain_error);
}

TEST_CASE("spinor at an arbitrary momentum", "[spinor]") {
  check_components(spinor(Kind::particle, 1.0, p_rest, 0).components, {r2, 0, r2, 0});
  check_components(spinor(Kind::particle, 1.0, p_z, 0).components, {0.5, 0, 1, 0});
  check_components(spinor(Kind::particle, 1.0, p_z, 1).components, {0, 1, 0, 0.5});
  const Spinor u = spinor(Kind::particle, 1.0, p_z, 0);
  CHECK_THAT(inner(u.components, u.components).real(), WithinAbs(1.25, 1e-15));
  CHECK_THROWS_AS(spinor(Kind::particle, 1.0, FourVector{1.25, 0, 0, 0.7}, 0), domain_error);
  CHECK_THROWS_AS(spinor(Kind::particle, 1.0, FourVector{-1.25, 0, 0, 0.75}, 0), domain_error);
}

TEST_CASE("dual spinor", "[spinor]") {
  const DualSpinor d = dual(Vector4{0.5, 0, 1, 0});
  check_components(d.components, {1, 0, 0.5, 0});
  CHECK_THAT((dual(rest_spinor(Kind::antiparticle, 0)) * rest_spinor(Kind::antiparticle, 0)).real(),
             WithinAbs(-1.0, 1e-15));
}

TEST_CASE("basis orthonormality and Dirac equation", "[spinor][property]") {
  auto rng = random::make_engine(31, 0);
  for (int t = 0; t < 1000; ++t) {
    const double m = random::mass(rng);
    const FourVector p = random::on_shell(rng, m, 5.0);
    for (int a = 0; a < 2; ++a) {
      const Spinor ua = spinor(Kind::particle, m, p, a);
      const Spinor va = spinor(Kind::antiparticle, m, p, a);
      const double scale = p[0] / m;
      REQUIRE(dirac_residual(ua) <= 1e-12 * p[0] * scale);
      REQUIRE(dirac_residual(va) <= 1e-12 * p[0] * scale);
      // √(p·σ) form agrees with the boost-block form.
      REQUIRE((spinor_sqrt_form(Kind::particle, m, p, a).components - ua.components).norm() <=
              1e-10 * std::sqrt(scale));
      REQUIRE((spinor_sqrt_form(Kind::antiparticle, m, p, a).components - va.components).norm() <=
              1e-10 * std::sqrt(scale));
      for (int b = 0; b < 2; ++b) {
        const Spinor ub = spinor(Kind::particle, m, p, b);
        const Spinor vb = spinor(Kind::antiparticle, m, p, b);
        REQUIRE(std::abs(dual(ua) * ub - (a == b ? 1.0 : 0.0)) <= 1e-10);
        REQUIRE(std::abs(dual(va) * vb + (a == b ? 1.0 : 0.0)) <= 1e-10);
        REQUIRE(std::abs(dual(ua) * vb) <= 1e-10);
        REQUIRE(std::abs(inner(ua.components, ub.components) - (a == b ? p[0] / m : 0.0)) <=
                1e-10 * scale);
      }
    }
  }
}

TEST_CASE("spinors are boosted rest spinors", "[spinor][property]") {
  auto rng = random::make_engine(32, 0);
  for (int t = 0; t < 300; ++t) {
    const double m = random::mass(rng);
    const FourVector p = random::on_shell(rng, m, 3.0);
    for (Kind k : {Kind::particle, Kind::antiparticle}) {
      const Spinor boosted = transform(spinor_boost(m, p), rest_spinor(k, 0, m));
      REQUIRE((boosted.components - spinor(k, m, p, 0).components).norm() <= 1e-10 * p[0] / m);
      REQUIRE(max_abs_diff(boosted.momentum, p) <= 1e-10 * p[0]);
      REQUIRE_FALSE(boosted.spin.has_value());
    }
  }
}

TEST_CASE("superposition", "[spinor]") {
  check_components(superpose(1.0, p_rest, 1.0, 0.0).components,
                   rest_spinor(Kind::particle, 0).components);
  const Spinor psi = superpose(1.0, p_z, r2, r2);
  check_components(psi.components, {0.5 * r2, r2, r2, 0.5 * r2});
  CHECK_THAT(pseudo_norm(psi), WithinAbs(1.0, 1e-15));
  CHECK(!psi.spin.has_value());

  CHECK_THROWS_AS(superpose(1.0, p_z, 1.0, 1.0), domain_error);
  CHECK_THROWS_AS(superpose(1.0, p_z, 0.0, 0.0), domain_error);
  CHECK_THROWS_AS(superpose(1.0, p_z, 0.0, 0.0, CoefficientPolicy::normalize), domain_error);
  const Spinor n = superpose(1.0, p_z, 2.0, 0.0, CoefficientPolicy::normalize);
  check_components(n.components, {0.5, 0, 1, 0});
}

TEST_CASE("superpositions stay normalized", "[spinor][property]") {
  auto rng = random::make_engine(33, 0);
  for (int t = 0; t < 1000; ++t) {
    const double m = random::mass(rng);
    const Spinor psi = random::particle_state(rng, m, random::on_shell(rng, m, 5.0));
    REQUIRE(std::abs(pseudo_norm(psi) - 1.0) <= 1e-10);
    REQUIRE(std::abs((dual(psi) * psi).imag()) <= 1e-10);
  }
}

TEST_CASE("probability current", "[spinor]") {
  const FourVector j_rest = current(rest_spinor(Kind::particle, 0));
  CHECK_THAT(j_rest[0], WithinAbs(1.0, 1e-15));
  for (std::size_t k = 1; k <= 3; ++k) CHECK(j_rest[k] == 0.0);
  CHECK(current(rest_spinor(Kind::particle, 1))[3] == 0.0);

  const FourVector j = current(superpose(1.0, p_z, r2, r2));
  CHECK_THAT(j[0], WithinAbs(1.25, 1e-15));

  // j^μ = p^μ/m for every state with ψ̄ψ = 1.
  auto rng = random::make_engine(34, 0);
  for (int t = 0; t < 300; ++t) {
    const double m = random::mass(rng);
    const FourVector p = random::on_shell(rng, m, 3.0);
    const FourVector jp = current(random::particle_state(rng, m, p));
    REQUIRE(max_abs_diff(jp, (1.0 / m) * p) <= 1e-10 * p[0] / m);
    REQUIRE(std::abs(minkowski_dot(jp, jp) - 1.0) <= 1e-8 * (p[0] / m) * (p[0] / m));
  }
}
