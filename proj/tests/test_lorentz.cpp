#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "spinorlab/lorentz.hpp"
#include "spinorlab/random.hpp"

using namespace spinorlab;
using Catch::Matchers::WithinAbs;

namespace {

double max_entry(const Matrix4& m) {
  double w = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) w = std::max(w, std::abs(m(i, j)));
  return w;
}

double max_entry(const LorentzMatrix& a, const LorentzMatrix& b) {
  double w = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) w = std::max(w, std::abs(a(i, j) - b(i, j)));
  return w;
}

const double ln2 = std::log(2.0);

}  // namespace

TEST_CASE("generators equal (i/4)[gamma^mu, gamma^nu]", "[lorentz]") {
  const auto& g = weyl_gammas();
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu) {
      if (mu == nu) continue;
      const Matrix4 ref = complex{0.0, 0.25} * commutator(g.gamma[mu], g.gamma[nu]);
      CHECK(max_entry(generator(mu, nu).matrix - ref) <= 1e-15);
      CHECK(max_entry(generator(mu, nu).matrix + generator(nu, mu).matrix) == 0.0);
    }
  CHECK_THROWS_AS(generator(1, 1), domain_error);
  CHECK_THROWS_AS(generator(0, 4), domain_error);
}

TEST_CASE("generators close under the Lorentz algebra", "[lorentz]") {
  auto s = [](std::size_t a, std::size_t b) {
    return a == b ? Matrix4{} : generator(a, b).matrix;
  };
  double worst = 0.0;
  for (std::size_t mu = 0; mu < 4; ++mu)
    for (std::size_t nu = 0; nu < 4; ++nu)
      for (std::size_t rho = 0; rho < 4; ++rho)
        for (std::size_t sg = 0; sg < 4; ++sg) {
          const Matrix4 lhs = commutator(s(mu, nu), s(rho, sg));
          const Matrix4 rhs = I_unit * (metric(nu, rho) * s(mu, sg) - metric(mu, rho) * s(nu, sg) -
                                        metric(nu, sg) * s(mu, rho) + metric(mu, sg) * s(nu, rho));
          worst = std::max(worst, max_entry(lhs - rhs));
        }
  CHECK(worst <= 1e-15);
}

TEST_CASE("group element reproduces the closed-form boost", "[lorentz]") {
  for (Axis ax : {Axis::x, Axis::y, Axis::z})
    for (double eta : {-3.0, -1.0, -0.25, 0.0, ln2, 2.0, 3.0}) {
      const Matrix4 d = group_element(LorentzParameters::boost({eta, ax})).matrix;
      const Matrix4 closed = spinor_boost(1.0, Rapidity{eta, ax}).matrix;
      CHECK(max_entry(d - closed) <= 1e-10);
    }
  // p = (1.25, 0, 0, 0.75): diag(1/√2, √2, √2, 1/√2).
  const Matrix4 d = spinor_boost(1.0, FourVector{1.25, 0, 0, 0.75}).matrix;
  CHECK_THAT(d(0, 0).real(), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
  CHECK_THAT(d(1, 1).real(), WithinAbs(std::sqrt(2.0), 1e-15));
  CHECK_THAT(d(2, 2).real(), WithinAbs(std::sqrt(2.0), 1e-15));
  CHECK_THAT(d(3, 3).real(), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
}

TEST_CASE("inverse is the pseudo-adjoint", "[lorentz][property]") {
  auto rng = random::make_engine(21, 0);
  for (int i = 0; i < 500; ++i) {
    const auto d = group_element(random::lorentz_parameters(rng, 3.0));
    const Matrix4 prod = d.matrix * inverse(d).matrix;
    REQUIRE(max_entry(prod - Matrix4::identity()) <= 1e-12 * std::max(1.0, d.matrix.norm()));
  }
}

TEST_CASE("boosts are not unitary", "[lorentz]") {
  const Matrix4 d = spinor_boost(1.0, Rapidity{ln2, Axis::z}).matrix;
  CHECK(max_entry(d.adjoint() * d - Matrix4::identity()) > 0.5);
  // Rotations are.
  const Matrix4 r = group_element(LorentzParameters::rotation(1, 2, 0.7)).matrix;
  CHECK(max_entry(r.adjoint() * r - Matrix4::identity()) <= 1e-15);
}

TEST_CASE("a full turn is minus the identity", "[lorentz]") {
  // ω_ij is twice the rotation angle, as ω_0k is twice the rapidity.
  const Matrix4 r = group_element(LorentzParameters::rotation(2, 3, 4.0 * std::numbers::pi)).matrix;
  CHECK(max_entry(r + Matrix4::identity()) <= 1e-14);
  const Matrix4 half = group_element(LorentzParameters::rotation(2, 3, 2.0 * std::numbers::pi)).matrix;
  const LorentzMatrix l = vector_action({half});
  CHECK_THAT(l(2, 2), WithinAbs(-1.0, 1e-14));
  CHECK_THAT(l(3, 3), WithinAbs(-1.0, 1e-14));
  CHECK_THAT(l(1, 1), WithinAbs(1.0, 1e-14));
}

TEST_CASE("collinear boosts compose additively", "[lorentz][property]") {
  auto rng = random::make_engine(22, 0);
  for (int i = 0; i < 300; ++i) {
    const Axis ax = random::axis(rng);
    const double a = random::uniform(rng, -1.5, 1.5);
    const double b = random::uniform(rng, -1.5, 1.5);
    const auto ab = compose(spinor_boost(1.0, Rapidity{a, ax}), spinor_boost(1.0, Rapidity{b, ax}));
    const auto sum = spinor_boost(1.0, Rapidity{a + b, ax});
    REQUIRE(max_entry(ab.matrix - sum.matrix) <= 1e-12 * sum.matrix.norm());
  }
}

TEST_CASE("D gamma^mu D^-1 = Lambda^mu_nu gamma^nu", "[lorentz][property]") {
  auto rng = random::make_engine(23, 0);
  const auto& g = weyl_gammas();
  for (int i = 0; i < 200; ++i) {
    const auto d = group_element(random::lorentz_parameters(rng, 2.0));
    const LorentzMatrix l = vector_action(d);
    REQUIRE(l.metric_defect() <= 1e-10 * std::pow(d.matrix.norm(), 4));
    // Vector index lowering: D⁻¹γ^μ D = Λ^μ_ν γ^ν.
    const Matrix4 d_inv = inverse(d).matrix;
    for (std::size_t mu = 0; mu < 4; ++mu) {
      Matrix4 rhs;
      for (std::size_t nu = 0; nu < 4; ++nu) rhs += l(mu, nu) * g.gamma[nu];
      REQUIRE(max_entry(d_inv * g.gamma[mu] * d.matrix - rhs) <=
              1e-10 * std::pow(d.matrix.norm(), 2));
    }
  }
}

TEST_CASE("vector action of a boost maps the rest frame onto p", "[lorentz]") {
  auto rng = random::make_engine(24, 0);
  for (int i = 0; i < 200; ++i) {
    const double m = random::mass(rng);
    const FourVector p = random::on_shell(rng, m, 3.0);
    const FourVector q = vector_action(spinor_boost(m, p))({m, 0, 0, 0});
    REQUIRE(max_abs_diff(p, q) <= 1e-10 * p[0]);
  }
}

TEST_CASE("vector_boost matrix and sign convention", "[lorentz]") {
  const auto l = vector_boost({ln2, Axis::x});
  CHECK_THAT(l.matrix(0, 0), WithinAbs(1.25, 1e-15));
  CHECK_THAT(l.matrix(0, 1), WithinAbs(-0.75, 1e-15));
  CHECK_THAT(l.matrix(1, 0), WithinAbs(-0.75, 1e-15));
  CHECK(l.matrix(2, 2) == 1.0);
  CHECK(l.matrix.metric_defect() <= 1e-15);

  // An observer moving along +x sees a resting particle move along −x.
  const FourVector q = l(FourVector{1, 0, 0, 0});
  CHECK_THAT(q[1], WithinAbs(-0.75, 1e-15));

  // The active map of a spinor boost is the passive boost with opposite rapidity.
  for (double eta : {-2.0, 0.3, 1.7}) {
    const LorentzMatrix active = vector_action(spinor_boost(1.0, Rapidity{eta, Axis::z}));
    CHECK(max_entry(active, vector_boost({-eta, Axis::z}).matrix) <= 1e-12);
  }
}

TEST_CASE("group_element rejects non-antisymmetric parameters", "[lorentz]") {
  LorentzParameters w;
  w.omega[0][1] = 1.0;
  CHECK_THROWS_AS(group_element(w), domain_error);
  LorentzParameters diag;
  diag.omega[2][2] = 0.1;
  CHECK_THROWS_AS(group_element(diag), domain_error);
  CHECK_THROWS_AS(spinor_boost(1.0, FourVector{1.0, 0.5, 0, 0}), domain_error);
}
