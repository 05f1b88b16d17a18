#include "relwave/algebra.hpp"
#include "relwave/modes.hpp"
#include "relwave/rng.hpp"

#include <doctest.h>

using namespace relwave;

TEST_SUITE("modes") {

TEST_CASE("wave vector dispersion and rejection rules") {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Vector3d k = rng.wavevector(0.1, 5.0);
    const double m = rng.uniform(0.0, 3.0);
    const WaveVector wv = make_wave_vector(k, m);
    CHECK(std::abs(wv.omega * wv.omega - (k.squaredNorm() + m * m)) <=
          1e-15 * (k.squaredNorm() + m * m));
    CHECK(wv.omega >= m);
  }
  // massless dispersion is exact, both sides take the same square root
  const Eigen::Vector3d k(0.3, -1.2, 0.4);
  CHECK(make_wave_vector(k, 0.0).omega == k.norm());

  CHECK_THROWS_AS(make_wave_vector(Eigen::Vector3d::Zero(), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_wave_vector(k, -1.0), std::invalid_argument);
}

TEST_CASE("helicity basis at k parallel to z") {
  const WaveVector wv = make_wave_vector({0.0, 0.0, 1.0}, 0.0);
  const BasisQuad q = helicity_basis(wv);

  Eigen::Vector4cd e3;
  e3 << 0.0, 0.0, 1.0, 0.0;
  CHECK((q.v[2] - e3).norm() == 0.0);

  Eigen::Vector4cd e1;
  e1 << -iu, -1.0, 0.0, 0.0;
  e1 /= std::sqrt(2.0);
  CHECK((q.v[0] - e1).norm() <= 1e-16);
  CHECK((q.v[1] - e1.conjugate()).norm() <= 1e-16);

  // only |k| = 0 is rejected; the basis ignores any mass on the wave vector
  CHECK_THROWS_AS(make_wave_vector(Eigen::Vector3d::Zero(), 0.0), std::invalid_argument);
}

TEST_CASE("helicity eigenstructure: e1 carries -1, e2 carries +1, e3 carries 0") {
  const auto spin = spin1_generators();
  Rng rng(29);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Vector3d k = rng.wavevector(0.2, 3.0);
    const BasisQuad q = helicity_basis(make_wave_vector(k, 0.0));
    cmat sk = cmat::Zero(3, 3);
    for (int j = 0; j < 3; ++j) sk += (k(j) / k.norm()) * spin[j];
    const Eigen::Vector3cd e1 = q.v[0].head<3>();
    const Eigen::Vector3cd e2 = q.v[1].head<3>();
    const Eigen::Vector3cd e3 = q.v[2].head<3>();
    CHECK((sk * e1 + e1).norm() <= 1e-13);
    CHECK((sk * e2 - e2).norm() <= 1e-13);
    CHECK((sk * e3).norm() <= 1e-13);
  }
}

TEST_CASE("helicity basis is orthonormal and complete") {
  Rng rng(37);
  for (int i = 0; i < 50; ++i) {
    const BasisQuad q = helicity_basis(make_wave_vector(rng.wavevector(0.2, 3.0), 0.0));
    Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
    for (int a = 0; a < 4; ++a) {
      for (int c = 0; c < 4; ++c) {
        CHECK(std::abs(q.v[a].dot(q.v[c]) - (a == c ? 1.0 : 0.0)) <= 1e-13);
      }
      sum += q.v[a] * q.v[a].adjoint();
    }
    CHECK((sum - Eigen::Matrix4cd::Identity()).norm() <= 1e-13);
  }
}

TEST_CASE("helicity basis is continuous across the axis special case") {
  for (const double kz : {1.0, -1.0, 0.7}) {
    const Eigen::Vector3cd limit = helicity_e1({0.0, 0.0, kz});
    const Eigen::Vector3cd near = helicity_e1({1e-6, 0.0, kz});
    CHECK((limit - near).norm() <= 1e-5);
  }
}

TEST_CASE("dirac spinors: rest frame, normalization, eigenstructure") {
  const Eigen::Vector4cd v1 = dirac_v_minus(Eigen::Vector3d::Zero(), 1.0, 1);
  Eigen::Vector4cd d1;
  d1 << 1.0, 0.0, 0.0, 0.0;
  CHECK((v1 - d1).norm() <= 1e-15);

  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Vector3d k = rng.wavevector(0.2, 3.0);
    const double m = rng.uniform(0.0, 2.0) + 1e-3;
    const WaveVector wv = make_wave_vector(k, m);
    for (int r = 1; r <= 2; ++r) {
      CHECK(std::abs(dirac_v_minus(k, m, r).squaredNorm() - 1.0) <= 1e-13);
    }
    for (int r = 3; r <= 4; ++r) {
      CHECK(std::abs(dirac_v_plus(k, m, r).squaredNorm() - 1.0) <= 1e-13);
    }
    const cmat h = dirac_hamiltonian(k, m);
    const BasisQuad q = dirac_spinors(wv);
    const double sign[4] = {1.0, 1.0, -1.0, -1.0};
    for (int a = 0; a < 4; ++a) {
      CHECK((h * q.v[a] - sign[a] * wv.omega * q.v[a]).norm() <= 1e-12);
    }
  }
}

TEST_CASE("dirac spinor quad is orthonormal-complete; the same-argument pair is not") {
  Rng rng(43);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Vector3d k = rng.wavevector(0.2, 3.0);
    const double m = rng.uniform(0.0, 2.0) + 1e-3;
    const BasisQuad q = dirac_spinors(make_wave_vector(k, m));
    Eigen::Matrix4cd sum = Eigen::Matrix4cd::Zero();
    for (int a = 0; a < 4; ++a) {
      for (int c = 0; c < 4; ++c) {
        CHECK(std::abs(q.v[a].dot(q.v[c]) - (a == c ? 1.0 : 0.0)) <= 1e-13);
      }
      sum += q.v[a] * q.v[a].adjoint();
    }
    CHECK((sum - Eigen::Matrix4cd::Identity()).norm() <= 1e-13);

    // v^-_1(k) and v^+_3(k) overlap by 2 N^2 (omega + m) k3; the quad uses
    // v^+ at -k precisely to cancel it
    const double omega = std::sqrt(k.squaredNorm() + m * m);
    const double n2 = 1.0 / (2.0 * omega * (omega + m));
    const cplx overlap = dirac_v_minus(k, m, 1).dot(dirac_v_plus(k, m, 3));
    CHECK(std::abs(overlap - 2.0 * n2 * (omega + m) * k.z()) <= 1e-13);
  }
}

TEST_CASE("dirac spinor preconditions") {
  CHECK_THROWS_AS(dirac_v_minus(Eigen::Vector3d::Zero(), 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(dirac_v_minus({1.0, 0.0, 0.0}, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(dirac_v_plus({1.0, 0.0, 0.0}, 1.0, 1), std::invalid_argument);
  CHECK_NOTHROW(dirac_v_minus({1.0, 0.0, 0.0}, 0.0, 1));
}

TEST_CASE("cartesian orts") {
  const BasisQuad q = cartesian_orts();
  Eigen::Vector4cd d1;
  d1 << 1.0, 0.0, 0.0, 0.0;
  CHECK((q.v[0] - d1).norm() == 0.0);
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) CHECK(q.v[a].dot(q.v[c]) == (a == c ? cplx(1.0) : cplx(0.0)));
}

}  // TEST_SUITE
