#include "relwave/rng.hpp"
#include "relwave/transforms.hpp"

#include <doctest.h>

using namespace relwave;

namespace {

const std::vector<SpacetimePoint>& samples20() {
  static const auto s = halton_samples(20);
  return s;
}

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("U is unitary with U^-1 = U^dagger") {
  const auto u = build_U();
  const auto uinv = build_U_inv();
  const auto id = RealLinearOperator::identity(4);
  CHECK(rl_distance(rl_compose(u, uinv), id) <= 1e-14);
  CHECK(rl_distance(rl_compose(uinv, u), id) <= 1e-14);
  CHECK(rl_is_unitary(u, 1e-13));
  CHECK(rl_distance(rl_adjoint(u), uinv) <= 1e-15);
  CHECK(rl_distance(rl_compose(u, rl_adjoint(u)), id) <= 1e-12);
}

TEST_CASE("U maps the electromagnetic packing row by row") {
  // E3 = 1, everything else zero: psi = (E3 + iH0, ...) = d1
  cvec cal_e = cvec::Zero(4);
  cal_e(2) = 1.0;
  cvec d1 = cvec::Zero(4);
  d1(0) = 1.0;
  CHECK((rl_apply(build_U(), cal_e) - d1).norm() == 0.0);

  // full row check against the defining field combinations on random data
  Rng rng(61);
  for (int i = 0; i < 10; ++i) {
    EMField f;
    f.E = rng.vec3(-1.0, 1.0);
    f.H = rng.vec3(-1.0, 1.0);
    f.E0 = rng.uniform(-1.0, 1.0);
    f.H0 = rng.uniform(-1.0, 1.0);
    const cvec psi = rl_apply(build_U(), pack_em(f));
    Eigen::Vector4cd expected;
    expected << cplx(f.E.z(), f.H0), cplx(f.E.x(), f.E.y()), cplx(f.E0, f.H.z()),
        cplx(-f.H.y(), f.H.x());
    CHECK((psi - expected).norm() <= 1e-15);
    // and back
    CHECK((rl_apply(build_U_inv(), psi) - pack_em(f)).norm() <= 1e-15);
  }
}

TEST_CASE("tilde gamma set: conjugation identity, Clifford relations, hermiticity") {
  const auto tilde = gamma_tilde();
  const auto gs = gamma_standard();
  const auto u = build_U();
  const auto uinv = build_U_inv();
  for (int mu = 0; mu < 4; ++mu) {
    const auto conj = rl_compose(rl_compose(u, RealLinearOperator::linear(gs.gamma[mu])), uinv);
    CHECK(rl_distance(conj, tilde[mu]) <= 1e-13);
    CHECK(tilde[mu].A.isZero(0.0));  // pure conjugation-valued
  }
  const auto rep = verify_gamma_set(tilde);
  CHECK(rep.anticommutator <= 1e-14);
  CHECK(rep.hermiticity_time <= 1e-14);
  CHECK(rep.hermiticity_space <= 1e-14);
}

TEST_CASE("U carries generalized Maxwell solutions to massless Dirac solutions and back") {
  Rng rng(62);
  const SolutionSpec zero = make_spec(SpecKind::GenMaxwell, 0.0, {});
  CHECK(map_maxwell_to_dirac(zero, samples20()).dirac_residual == 0.0);

  for (int i = 0; i < 5; ++i) {
    const SolutionSpec spec = random_spec(SpecKind::GenMaxwell, 0.0, 5, rng);
    const auto res = map_maxwell_to_dirac(spec, samples20());
    CHECK(res.dirac_residual <= 1e-10 * res.psi.activity_scale());

    const PlaneWaveField back = apply_pointwise(build_U_inv(), res.psi);
    const PlaneWaveField orig = field_from_spec(spec);
    CHECK(max_field_distance(back, orig, samples20()) <= 1e-13 * orig.activity_scale());
  }

  // massless Dirac solutions come back as generalized Maxwell solutions
  for (int i = 0; i < 5; ++i) {
    const SolutionSpec spec = random_spec(SpecKind::Dirac, 0.0, 5, rng);
    const PlaneWaveField cal_e = apply_pointwise(build_U_inv(), field_from_spec(spec));
    const auto rep = gen_maxwell_residual_field(cal_e, samples20());
    CHECK(rep.max_residual() <= 1e-10 * cal_e.activity_scale());
  }
}

TEST_CASE("eight spinorizations: frozen value, zero field, PGI bijection") {
  EMField f;
  f.E = {0.0, 0.0, 1.0};
  const auto psi = eight_spinorizations(f);
  Eigen::Vector4cd d1;
  d1 << 1.0, 0.0, 0.0, 0.0;
  CHECK((psi[0] - d1).norm() == 0.0);

  const auto zeros = eight_spinorizations(EMField{});
  for (const auto& p : zeros) CHECK(p.norm() == 0.0);

  Rng rng(63);
  const auto match = spinorization_pgi_match(6, rng);
  CHECK(match.is_bijection);
  CHECK(match.worst_match <= 1e-13);
}

TEST_CASE("medium columns: frozen value, swap flags, PGI bijection") {
  const auto cols = sallhofer_columns({0.0, 0.0, 1.0}, Eigen::Vector3d::Zero());
  Eigen::Vector4cd expected;
  expected << iu, 0.0, 0.0, 0.0;
  CHECK((cols.psi[0] - expected).norm() == 0.0);
  const std::array<bool, 8> flags = {false, false, true, true, true, true, false, false};
  CHECK(cols.needs_eps_mu_swap == flags);

  const auto zeros = sallhofer_columns(Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero());
  for (const auto& p : zeros.psi) CHECK(p.norm() == 0.0);

  Rng rng(64);
  const auto match = sallhofer_pgi_match(6, rng);
  CHECK(match.is_bijection);
  CHECK(match.worst_match <= 1e-13);
}

TEST_CASE("medium plane waves solve the medium Maxwell system") {
  Rng rng(65);
  for (const auto& [eps, mu] : {std::pair{1.0, 1.0}, std::pair{1.4, 0.8}}) {
    Eigen::Vector3cd pol;
    for (int j = 0; j < 3; ++j) pol(j) = rng.complex_in_disk(1.0);
    const EMPlaneWave w = medium_plane_wave(rng.wavevector(0.5, 1.5), pol, eps, mu);
    const std::vector<EMPlaneWave> field = {w};
    for (const auto& p : samples20()) {
      const auto r = maxwell_residuals(eval_em(field, p.t, p.x), eps, mu);
      for (const double v : r) CHECK(std::abs(v) <= 1e-13 * em_activity_scale(field));
    }
  }
  CHECK_THROWS_AS(medium_plane_wave(Eigen::Vector3d::Zero(), Eigen::Vector3cd::Ones(), 1.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("all eight columns solve the medium equation in vacuum") {
  Rng rng(66);
  std::vector<EMPlaneWave> waves;
  for (int i = 0; i < 3; ++i) {
    Eigen::Vector3cd pol;
    for (int j = 0; j < 3; ++j) pol(j) = rng.complex_in_disk(1.0);
    waves.push_back(medium_plane_wave(rng.wavevector(0.4, 1.6), pol, 1.0, 1.0));
  }
  const double scale = em_activity_scale(waves);
  for (int col = 1; col <= 8; ++col) {
    CHECK(sallhofer_residual(waves, 1.0, 1.0, col, false, samples20()) <= 1e-10 * scale);
  }
  const std::vector<EMPlaneWave> empty;
  CHECK(sallhofer_residual(empty, 1.0, 1.0, 1, false, samples20()) == 0.0);
  CHECK_THROWS_AS(sallhofer_residual(waves, 1.0, 1.0, 9, false, samples20()),
                  std::invalid_argument);
}

TEST_CASE("columns 3..6 need the eps/mu interchange in a genuine medium") {
  Rng rng(67);
  const double eps = 1.3, mu = 0.7;
  std::vector<EMPlaneWave> waves;
  Eigen::Vector3cd pol;
  for (int j = 0; j < 3; ++j) pol(j) = rng.complex_in_disk(1.0);
  waves.push_back(medium_plane_wave(rng.wavevector(0.5, 1.5), pol, eps, mu));
  const double scale = em_activity_scale(waves);

  CHECK(sallhofer_residual(waves, eps, mu, 1, false, samples20()) <= 1e-10 * scale);
  CHECK(sallhofer_residual(waves, eps, mu, 3, true, samples20()) <= 1e-10 * scale);
  CHECK(sallhofer_residual(waves, eps, mu, 3, false, samples20()) > 1e-3 * scale);
  CHECK(sallhofer_residual(waves, eps, mu, 7, false, samples20()) <= 1e-10 * scale);
}

TEST_CASE("the swap flags predict exactly which columns need the interchange") {
  Rng rng(74);
  const double eps = 1.25, mu = 0.85;
  std::vector<EMPlaneWave> waves;
  Eigen::Vector3cd pol;
  for (int j = 0; j < 3; ++j) pol(j) = rng.complex_in_disk(1.0);
  waves.push_back(medium_plane_wave(rng.wavevector(0.5, 1.5), pol, eps, mu));
  const double scale = em_activity_scale(waves);
  const auto flags = sallhofer_columns(Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero())
                         .needs_eps_mu_swap;
  for (int col = 1; col <= 8; ++col) {
    const bool swap = flags[static_cast<size_t>(col - 1)];
    CHECK(sallhofer_residual(waves, eps, mu, col, swap, samples20()) <= 1e-10 * scale);
    CHECK(sallhofer_residual(waves, eps, mu, col, !swap, samples20()) > 1e-3 * scale);
  }
}

TEST_CASE("the eightfold matchings land on a fixed permutation of the symmetry set") {
  // indices into {g2C, ig2C, g4g2C, ig4g2C, g4, ig4, i, I}
  Rng rng(75);
  const auto spin = spinorization_pgi_match(5, rng);
  const std::array<int, 8> spin_expected = {7, 6, 2, 3, 5, 0, 4, 1};
  CHECK(spin.matched_op == spin_expected);

  const auto cols = sallhofer_pgi_match(5, rng);
  const std::array<int, 8> cols_expected = {7, 6, 4, 5, 0, 1, 2, 3};
  CHECK(cols.matched_op == cols_expected);
}

TEST_CASE("column-1 residual parts are the Maxwell equations") {
  Rng rng(68);
  std::vector<EMPlaneWave> junk(2);
  for (EMPlaneWave& w : junk) {
    w.omega = rng.uniform(0.5, 1.5);
    w.k = rng.wavevector(0.4, 1.6);
    for (int j = 0; j < 3; ++j) {
      w.E0(j) = rng.complex_in_disk(1.0);
      w.H0(j) = rng.complex_in_disk(1.0);
    }
  }
  const double eps = 1.2, mu = 0.9;
  for (const auto& p : samples20()) {
    const auto direct = maxwell_residuals(eval_em(junk, p.t, p.x), eps, mu);
    const auto from_col = maxwell_residuals_from_column1(junk, eps, mu, p.t, p.x);
    for (int i = 0; i < 8; ++i) {
      CHECK(std::abs(direct[static_cast<size_t>(i)] - from_col[static_cast<size_t>(i)]) <=
            1e-13 * em_activity_scale(junk));
    }
  }
}

TEST_CASE("medium profile: amplitude-equation agreement and limits") {
  MediumProfile medium;  // Z = 1, omega = 1, m = 1, Coulomb
  Rng rng(69);
  std::vector<Eigen::Vector3d> pts;
  while (pts.size() < 100) {
    const Eigen::Vector3d x = rng.vec3(-2.0, 2.0);
    if (x.norm() >= 1e-3) pts.push_back(x);
  }
  CHECK(medium_amplitude_equivalence(medium, pts) <= 1e-14);

  MediumProfile free_space;
  free_space.coulomb = false;
  free_space.mass = 0.5;
  free_space.omega_tilde = 2.0;
  const Eigen::Vector3d x(0.1, 0.2, -0.3);
  CHECK(free_space.eps(x) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(free_space.mu(x) == doctest::Approx(0.75).epsilon(1e-15));

  MediumProfile massless;
  massless.mass = 0.0;
  CHECK(massless.eps(x) == massless.mu(x));

  CHECK_THROWS_AS(medium.eps(Eigen::Vector3d::Zero()), std::domain_error);
}

TEST_CASE("medium residual with a position-dependent profile") {
  Rng rng(73);
  Eigen::Vector3cd pol;
  for (int j = 0; j < 3; ++j) pol(j) = rng.complex_in_disk(1.0);
  const std::vector<EMPlaneWave> waves = {
      medium_plane_wave(rng.wavevector(0.5, 1.5), pol, 1.0, 1.0)};
  MediumProfile medium;  // Coulomb, Z = 1

  // a vacuum plane wave is not a solution in the Coulomb medium: the
  // residual is finite and nonzero away from the singularity
  std::vector<SpacetimePoint> pts;
  for (const auto& p : samples20()) {
    SpacetimePoint q = p;
    q.x += Eigen::Vector3d(1.0, 1.0, 1.0);  // keep away from the origin
    pts.push_back(q);
  }
  const double r = sallhofer_residual(waves, medium, 1, false, pts);
  CHECK(std::isfinite(r));
  CHECK(r > 1e-3);

  // a sample at the Coulomb singularity is rejected
  const std::vector<SpacetimePoint> singular = {{0.0, Eigen::Vector3d::Zero()}};
  CHECK_THROWS_AS(sallhofer_residual(waves, medium, 1, false, singular), std::domain_error);
}

TEST_CASE("extended FW map: rest frame, solution match, round trip, unitarity") {
  const double m = 1.0;
  const SolutionSpec rest = make_spec(SpecKind::SF, m, {{Eigen::Vector3d::Zero(), 1, 1.0}});
  const PlaneWaveField mapped = apply_V_field(field_from_spec(rest), m);
  for (const auto& p : samples20()) {
    Eigen::Vector4cd expected = Eigen::Vector4cd::Zero();
    expected(0) = std::pow(2.0 * M_PI, -1.5) * std::polar(1.0, -m * p.t);
    CHECK((mapped(p.t, p.x) - expected).norm() <= 1e-15);
  }

  Rng rng(70);
  for (int i = 0; i < 5; ++i) {
    const SolutionSpec sf = random_spec(SpecKind::SF, m, 8, rng);
    const PlaneWaveField lhs = apply_V_field(field_from_spec(sf), m);
    const PlaneWaveField rhs = field_from_spec(apply_V(sf));
    CHECK(max_field_distance(lhs, rhs, samples20()) <= 1e-11 * rhs.activity_scale());

    const PlaneWaveField back = apply_V_inv_field(lhs, m);
    CHECK(max_field_distance(back, field_from_spec(sf), samples20()) <=
          1e-13 * rhs.activity_scale());

    const SolutionSpec round = apply_V_inv(apply_V(sf));
    CHECK(round.kind == SpecKind::SF);
    REQUIRE(round.modes.size() == sf.modes.size());
    for (size_t j = 0; j < sf.modes.size(); ++j) {
      CHECK(std::abs(round.modes[j].amplitude - sf.modes[j].amplitude) <= 1e-13);
    }
  }

  // mode-level unitarity: the squared amplitude mass carried by the mode list
  const SolutionSpec sf = random_spec(SpecKind::SF, m, 8, rng);
  const PlaneWaveField f = field_from_spec(sf);
  auto norm2 = [](const PlaneWaveField& g) {
    double s = 0.0;
    for (const PwMode& mm : g.modes) s += mm.w.squaredNorm();
    return s;
  };
  CHECK(norm2(apply_V_field(f, m)) == doctest::Approx(norm2(f)).epsilon(1e-13));

  CHECK_THROWS_AS(apply_V(make_spec(SpecKind::SF, 0.0, {{Eigen::Vector3d::UnitZ(), 1, 1.0}})),
                  std::domain_error);
  CHECK_THROWS_AS(apply_V(random_spec(SpecKind::Dirac, 1.0, 2, rng)), std::invalid_argument);
}

TEST_CASE("intertwining identity holds per mode and degrades linearly in a mass defect") {
  const double m = 1.0;
  // rest-frame cancellation: constant-in-space mode on the first ort
  PlaneWaveField rest;
  Eigen::Vector4cd d1 = Eigen::Vector4cd::Zero();
  d1(0) = 1.0;
  rest.modes.push_back({m, Eigen::Vector3d::Zero(), d1});
  CHECK(max_field_norm(fw_intertwining_rhs(rest, m), samples20()) <= 1e-15);
  CHECK(max_field_norm(fw_intertwining_lhs(rest, m), samples20()) <= 1e-14);

  Rng rng(72);
  CHECK(check_fw_intertwining(50, m, rng) <= 1e-11);

  PlaneWaveField f;
  Eigen::Vector4cd w;
  for (int i = 0; i < 4; ++i) w(i) = rng.complex_in_disk(1.0);
  f.modes.push_back({rng.uniform(-2.0, 2.0), rng.wavevector(0.4, 1.5), w});
  auto defect = [&](double d) {
    return max_field_distance(fw_intertwining_lhs(f, m + d), fw_intertwining_rhs(f, m), samples20());
  };
  const double r1 = defect(1e-4);
  const double r2 = defect(2e-4);
  CHECK(r2 / r1 == doctest::Approx(2.0).epsilon(0.05));
}

}  // TEST_SUITE
