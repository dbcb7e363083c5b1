#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "spinorlab/dirac_algebra.hpp"
#include "spinorlab/kinematics.hpp"
#include "spinorlab/lorentz.hpp"
#include "spinorlab/matrix_functions.hpp"
#include "spinorlab/random.hpp"

using namespace spinorlab;
using Catch::Matchers::WithinAbs;

namespace {
const double ln2 = std::log(2.0);
}

TEST_CASE("minkowski_dot uses the (+,-,-,-) metric", "[tensor]") {
  CHECK(minkowski_dot({1, 0, 0, 0}, {1, 0, 0, 0}) == 1.0);
  CHECK(minkowski_dot({1, 1, 0, 0}, {1, 1, 0, 0}) == 0.0);
  CHECK_THAT(minkowski_dot({1.25, 0, 0, -0.75}, {1.25, 0, 0, -0.75}), WithinAbs(1.0, 1e-15));
  CHECK(minkowski_dot({2, 3, 5, 7}, {11, 13, 17, 19}) == 22.0 - 39.0 - 85.0 - 133.0);
}

TEST_CASE("mat_exp closed cases", "[tensor][expm]") {
  CHECK((mat_exp(Matrix4{}) - Matrix4::identity()).norm() == 0.0);

  const double pi = std::numbers::pi;
  const Matrix4 ipi = Matrix4::diagonal({complex{0, pi}, complex{0, pi}, complex{0, pi}, complex{0, pi}});
  CHECK((mat_exp(ipi) + Matrix4::identity()).norm() < 1e-14);

  // exp(−iηS^{03}) against the closed-form boost to p = (1.25, 0, 0, 0.75).
  const Matrix4 e = mat_exp(complex{0, -ln2} * generator(0, 3).matrix);
  const Matrix4 closed = spinor_boost(1.0, FourVector{1.25, 0, 0, 0.75}).matrix;
  CHECK((e - closed).norm() < 1e-14);
  CHECK_THAT(e(0, 0).real(), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
  CHECK_THAT(e(1, 1).real(), WithinAbs(std::sqrt(2.0), 1e-15));
}

TEST_CASE("mat_exp agrees with a Taylor-series oracle", "[tensor][expm]") {
  auto rng = random::make_engine(7, 0);
  for (int i = 0; i < 200; ++i) {
    const double scale = random::uniform(rng, 0.01, 3.0);
    const Matrix4 a = random::matrix<4>(rng, scale);
    const Matrix4 ref = oracle::taylor_exp(a);
    CHECK((mat_exp(a) - ref).norm() <= 1e-12 * std::max(1.0, ref.norm()));
  }
}

TEST_CASE("mat_exp of anti-Hermitian matrices is unitary", "[tensor][expm][property]") {
  auto rng = random::make_engine(11, 0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Matrix4 x = random::matrix<4>(rng, random::uniform(rng, 0.1, 5.0));
    const Matrix4 e = mat_exp(0.5 * (x - x.adjoint()));
    worst = std::max(worst, (e.adjoint() * e - Matrix4::identity()).norm());
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("mat_exp handles desk-range boost exponents", "[tensor][expm]") {
  for (double eta : {-10.0, -3.0, 3.0, 10.0}) {
    const Matrix4 e = mat_exp(complex{0, -eta} * generator(0, 1).matrix);
    const Matrix4 closed = spinor_boost(1.0, Rapidity{eta, Axis::x}).matrix;
    CHECK((e - closed).norm() <= 1e-12 * closed.norm());
  }
}

TEST_CASE("mat_exp rejects non-finite input", "[tensor][expm]") {
  Matrix4 bad;
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(mat_exp(bad), numerical_error);
}

TEST_CASE("herm_sqrt2 closed cases", "[tensor][sqrt]") {
  CHECK((herm_sqrt2(Matrix2::identity()) - Matrix2::identity()).norm() < 1e-15);
  const Matrix2 r = herm_sqrt2(Matrix2::diagonal({4.0, 9.0}));
  CHECK_THAT(r(0, 0).real(), WithinAbs(2.0, 1e-15));
  CHECK_THAT(r(1, 1).real(), WithinAbs(3.0, 1e-15));
  CHECK(std::abs(r(0, 1)) < 1e-15);

  const auto c = sigma_contract({1.25, 0, 0, 0.75});
  const Matrix2 s = herm_sqrt2(c.sigma);
  CHECK_THAT(s(0, 0).real(), WithinAbs(std::sqrt(0.5), 1e-15));
  CHECK_THAT(s(1, 1).real(), WithinAbs(std::sqrt(2.0), 1e-15));

  CHECK(herm_sqrt2(Matrix2{}).norm() == 0.0);
  // Rank one: [[1,1],[1,1]] = 2 P, √ = √2 P.
  const Matrix2 rank1 = herm_sqrt2(Matrix2{{1.0, 1.0}, {1.0, 1.0}});
  CHECK_THAT(rank1(0, 1).real(), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
}

TEST_CASE("herm_sqrt2 squares back on random PSD input", "[tensor][sqrt][property]") {
  auto rng = random::make_engine(3, 0);
  for (int i = 0; i < 1000; ++i) {
    const Matrix2 x = random::matrix<2>(rng, random::uniform(rng, 0.001, 100.0));
    const Matrix2 h = x * x.adjoint();
    const Matrix2 r = herm_sqrt2(h);
    REQUIRE((r * r - h).norm() <= 1e-12 * (1.0 + h.norm()));
    REQUIRE((r - r.adjoint()).norm() <= 1e-14 * (1.0 + r.norm()));
    REQUIRE(r(0, 0).real() >= 0.0);
    REQUIRE(r(1, 1).real() >= 0.0);
  }
}

TEST_CASE("herm_sqrt2 domain errors", "[tensor][sqrt]") {
  CHECK_THROWS_AS(herm_sqrt2(Matrix2::diagonal({1.0, -1.0})), domain_error);
  CHECK_THROWS_AS(herm_sqrt2(Matrix2{{1.0, 1.0}, {0.0, 1.0}}), domain_error);
}

TEST_CASE("momentum_from_rapidity", "[tensor][kinematics]") {
  CHECK(momentum_from_rapidity(1.0, {0.0, Axis::z}) == FourVector{1, 0, 0, 0});
  const FourVector p = momentum_from_rapidity(1.0, {ln2, Axis::z});
  CHECK_THAT(p[0], WithinAbs(1.25, 1e-15));
  CHECK_THAT(p[3], WithinAbs(0.75, 1e-15));
  CHECK(p[1] == 0.0);
  CHECK(p[2] == 0.0);
  const FourVector q = momentum_from_rapidity(2.0, {ln2, Axis::x});
  CHECK_THAT(q[0], WithinAbs(2.5, 1e-15));
  CHECK_THAT(q[1], WithinAbs(1.5, 1e-15));
  CHECK(q[3] == 0.0);
  CHECK_THROWS_AS(momentum_from_rapidity(0.0, {1.0, Axis::z}), domain_error);
  CHECK_THROWS_AS(momentum_from_rapidity(-1.0, {1.0, Axis::z}), domain_error);
}

TEST_CASE("momentum_from_rapidity stays on shell", "[tensor][kinematics][property]") {
  auto rng = random::make_engine(5, 0);
  for (int i = 0; i < 1000; ++i) {
    const double m = random::uniform(rng, 0.1, 10.0);
    const FourVector p =
        momentum_from_rapidity(m, {random::uniform(rng, -3.0, 3.0), random::axis(rng)});
    REQUIRE(std::abs(minkowski_dot(p, p) - m * m) <= 1e-12 * m * m);
  }
}

TEST_CASE("require_on_shell", "[tensor][kinematics]") {
  CHECK_NOTHROW(require_on_shell(1.0, {1.25, 0, 0, 0.75}, 1e-9, "t"));
  CHECK_THROWS_AS(require_on_shell(1.0, {1.3, 0, 0, 0.75}, 1e-9, "t"), domain_error);
  CHECK_THROWS_AS(require_on_shell(1.0, {-1.25, 0, 0, 0.75}, 1e-9, "t"), domain_error);
}

TEST_CASE("solve and determinant", "[tensor]") {
  auto rng = random::make_engine(9, 0);
  for (int i = 0; i < 50; ++i) {
    const Matrix4 a = random::matrix<4>(rng, 1.0) + 3.0 * Matrix4::identity();
    const Matrix4 b = random::matrix<4>(rng, 1.0);
    CHECK((a * solve(a, b) - b).norm() < 1e-12);
  }
  CHECK(std::abs(determinant(Matrix4::diagonal({1.0, 2.0, 3.0, 4.0})) - 24.0) < 1e-13);
  CHECK_THROWS_AS(solve(Matrix4{}, Matrix4::identity()), numerical_error);
}
