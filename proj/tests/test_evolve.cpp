#include "relwave/evolve.hpp"
#include "relwave/modes.hpp"
#include "relwave/rng.hpp"
#include "relwave/transforms.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace relwave;

namespace {

FieldGrid random_grid(int dims, int n, double box, int components, Rng& rng) {
  FieldGrid g = make_grid(dims, n, box, components);
  for (cplx& v : g.values) v = rng.complex_in_disk(1.0);
  return g;
}

}  // namespace

TEST_SUITE("evolve") {

TEST_CASE("grid construction and wavenumbers") {
  CHECK_THROWS_AS(make_grid(2, 16, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1, 48, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1, 16, -1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1, 16, 1.0, 0), std::invalid_argument);

  const double L = 2.0 * M_PI;
  CHECK(lattice_wavenumber(0, 8, L) == 0.0);
  CHECK(lattice_wavenumber(1, 8, L) == doctest::Approx(1.0));
  CHECK(lattice_wavenumber(7, 8, L) == doctest::Approx(-1.0));
  CHECK(lattice_wavenumber(4, 8, L) == doctest::Approx(-4.0));
}

TEST_CASE("fft round trip") {
  Rng rng(81);
  for (const int dims : {1, 3}) {
    const int n = dims == 1 ? 256 : 16;
    const FieldGrid g = random_grid(dims, n, 2.0 * M_PI, 2, rng);
    FieldGrid h = g;
    fft_forward(h);
    fft_inverse(h);
    CHECK(grid_max_diff(g, h) <= 1e-12 * grid_max_abs(g));
  }
}

TEST_CASE("sf evolution: identity at t=0, single-mode phase, semigroup, norm") {
  Rng rng(82);
  const double L = 2.0 * M_PI;
  const FieldGrid g = random_grid(1, 128, L, 2, rng);

  CHECK(grid_max_diff(evolve_sf_grid(g, 1.0, 0.0), g) == 0.0);

  // single lattice mode advances by exactly e^{-i omega t}
  FieldGrid single = make_grid(1, 64, L, 1);
  const double k = lattice_wavenumber(3, 64, L);
  for (int ix = 0; ix < 64; ++ix) {
    single.at(0, ix) = std::polar(1.0, k * (L * ix / 64.0));
  }
  const double m = 0.7, t = 1.3;
  const double omega = std::sqrt(k * k + m * m);
  const FieldGrid evolved = evolve_sf_grid(single, m, t);
  double worst = 0.0;
  for (int ix = 0; ix < 64; ++ix) {
    worst = std::max(worst,
                     std::abs(evolved.at(0, ix) - single.at(0, ix) * std::polar(1.0, -omega * t)));
  }
  CHECK(worst <= 1e-12);

  const FieldGrid two = evolve_sf_grid(evolve_sf_grid(g, 1.0, 0.4), 1.0, 0.9);
  const FieldGrid one = evolve_sf_grid(g, 1.0, 1.3);
  CHECK(grid_max_diff(two, one) <= 1e-11 * grid_max_abs(g));

  CHECK(std::abs(grid_norm2(evolve_sf_grid(g, 1.0, 2.1)) - grid_norm2(g)) <=
        1e-11 * grid_norm2(g));
}

TEST_CASE("sf evolution acts per component") {
  Rng rng(83);
  const FieldGrid g = random_grid(1, 64, 2.0 * M_PI, 5, rng);
  const FieldGrid whole = evolve_sf_grid(g, 0.9, 0.8);
  for (int c = 0; c < 5; ++c) {
    FieldGrid single = make_grid(1, 64, 2.0 * M_PI, 1);
    for (int ix = 0; ix < 64; ++ix) single.at(0, ix) = g.at(c, ix);
    const FieldGrid evolved = evolve_sf_grid(single, 0.9, 0.8);
    double worst = 0.0;
    for (int ix = 0; ix < 64; ++ix) worst = std::max(worst, std::abs(evolved.at(0, ix) - whole.at(c, ix)));
    CHECK(worst <= 1e-13);
  }
}

TEST_CASE("dirac evolution: rest frame, unitarity, grid agrees with the analytic solution") {
  const double m = 1.0, t = 1.1;
  FieldGrid rest = make_grid(1, 16, 2.0 * M_PI, 4);
  for (int ix = 0; ix < 16; ++ix) rest.at(0, ix) = 1.0;
  const FieldGrid evolved = evolve_dirac_grid(rest, m, t);
  double worst = 0.0;
  for (int ix = 0; ix < 16; ++ix) {
    worst = std::max(worst, std::abs(evolved.at(0, ix) - std::polar(1.0, -m * t)));
    for (int c = 1; c < 4; ++c) worst = std::max(worst, std::abs(evolved.at(c, ix)));
  }
  CHECK(worst <= 1e-13);

  Rng rng(84);
  const FieldGrid g = random_grid(3, 16, 2.0 * M_PI, 4, rng);
  CHECK(std::abs(grid_norm2(evolve_dirac_grid(g, m, t)) - grid_norm2(g)) <= 1e-11 * grid_norm2(g));

  for (const double mass : {0.0, 1.0}) {
    const SolutionSpec spec = random_lattice_spec(SpecKind::Dirac, mass, 3, 16, 2.0 * M_PI, 4, rng);
    const PlaneWaveField f = field_from_spec(spec);
    const FieldGrid start = grid_from_field(f, 3, 16, 2.0 * M_PI, 0.0);
    const FieldGrid end = evolve_dirac_grid(start, mass, t);
    const FieldGrid expected = grid_from_field(f, 3, 16, 2.0 * M_PI, t);
    CHECK(grid_max_diff(end, expected) <= 1e-10 * grid_max_abs(expected));
  }
}

TEST_CASE("mode propagator is unitary: cos(wt) I - i sin(wt)/w H with H^2 = w^2 I") {
  Rng rng(91);
  for (int i = 0; i < 30; ++i) {
    const Eigen::Vector3d k = rng.wavevector(0.1, 4.0);
    const double m = rng.uniform(0.0, 2.0);
    const double t = rng.uniform(-3.0, 3.0);
    const cmat h = dirac_hamiltonian(k, m);
    const double omega = std::sqrt(k.squaredNorm() + m * m);
    CHECK((h * h - omega * omega * cmat::Identity(4, 4)).norm() <= 1e-13 * omega * omega);
    const cmat p = std::cos(omega * t) * cmat::Identity(4, 4) -
                   iu * (std::sin(omega * t) / omega) * h;
    CHECK((p * p.adjoint() - cmat::Identity(4, 4)).norm() <= 1e-13);
  }
}

TEST_CASE("gen-maxwell evolution: u-route equals projector route and matches analytic solutions") {
  Rng rng(85);
  const double t = 0.9;
  const FieldGrid g = random_grid(3, 16, 2.0 * M_PI, 4, rng);

  CHECK(grid_max_diff(evolve_gen_maxwell_grid(g, 0.0), g) == 0.0);
  // the two realizations agree wherever the conjugation route is faithful,
  // i.e. away from the Nyquist plane
  const FieldGrid clean = zero_nyquist(g);
  CHECK(grid_max_diff(evolve_gen_maxwell_via_u(clean, t), evolve_gen_maxwell_grid(clean, t)) <=
        1e-11 * grid_max_abs(clean));
  // with Nyquist content the pointwise conjugation aliases and the routes
  // genuinely part ways; this pins the choice of the projector realization
  CHECK(grid_max_diff(evolve_gen_maxwell_via_u(g, t), evolve_gen_maxwell_grid(g, t)) > 1e-3);
  CHECK(std::abs(grid_norm2(evolve_gen_maxwell_grid(g, t)) - grid_norm2(g)) <=
        1e-11 * grid_norm2(g));

  const SolutionSpec spec = random_lattice_spec(SpecKind::GenMaxwell, 0.0, 3, 16, 2.0 * M_PI, 4, rng);
  const PlaneWaveField f = field_from_spec(spec);
  const FieldGrid start = grid_from_field(f, 3, 16, 2.0 * M_PI, 0.0);
  const FieldGrid end = evolve_gen_maxwell_grid(start, t);
  const FieldGrid expected = grid_from_field(f, 3, 16, 2.0 * M_PI, t);
  CHECK(grid_max_diff(end, expected) <= 1e-10 * grid_max_abs(expected));
}

TEST_CASE("source-free initial data stays source-free") {
  Rng rng(86);
  const int n = 16;
  FieldGrid g = random_grid(3, n, 2.0 * M_PI, 4, rng);
  fft_forward(g);
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy)
      for (int ix = 0; ix < n; ++ix) {
        const Eigen::Vector3d k(lattice_wavenumber(ix, n, 2.0 * M_PI),
                                lattice_wavenumber(iy, n, 2.0 * M_PI),
                                lattice_wavenumber(iz, n, 2.0 * M_PI));
        Eigen::Vector3cd v(g.at(0, ix, iy, iz), g.at(1, ix, iy, iz), g.at(2, ix, iy, iz));
        if (k.squaredNorm() > 0.0) {
          const Eigen::Vector3d khat = k.normalized();
          v -= khat.cast<cplx>() * khat.cast<cplx>().dot(v);
        } else {
          v.setZero();
        }
        for (int c = 0; c < 3; ++c) g.at(c, ix, iy, iz) = v(c);
        g.at(3, ix, iy, iz) = 0.0;
      }
  fft_inverse(g);
  const FieldGrid evolved = evolve_gen_maxwell_grid(g, 1.0);
  double scalar = 0.0;
  const std::size_t npts = g.points();
  for (std::size_t p = 0; p < npts; ++p) scalar = std::max(scalar, std::abs(evolved.values[3 * npts + p]));
  CHECK(scalar <= 1e-11 * grid_max_abs(g));
}

TEST_CASE("finite-difference derivative converges at second order") {
  Rng rng(87);
  const FieldGrid g = evolve_sf_grid(random_grid(1, 256, 2.0 * M_PI, 1, rng), 1.0, 0.7);
  const FieldGrid gen = apply_sf_generator(g, 1.0);
  auto err = [&](double h) {
    const FieldGrid fp = evolve_sf_grid(g, 1.0, h);
    const FieldGrid fm = evolve_sf_grid(g, 1.0, -h);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      worst = std::max(worst, std::abs((fp.values[i] - fm.values[i]) / (2.0 * h) - gen.values[i]));
    }
    return worst;
  };
  const double ratio = err(0.01) / err(0.005);
  CHECK(ratio >= 3.5);
  CHECK(ratio <= 4.5);
}

TEST_CASE("commuting diagrams close at t = 1") {
  Rng rng(88);
  const FieldGrid g = zero_nyquist(random_grid(3, 16, 2.0 * M_PI, 4, rng));
  CHECK(commuting_diagram_u(g, 0.0) <= 1e-15);
  CHECK(commuting_diagram_v(g, 1.0, 0.0) <= 1e-13);
  CHECK(commuting_diagram_u(g, 1.0) <= 1e-10 * grid_max_abs(g));
  CHECK(commuting_diagram_v(g, 1.0, 1.0) <= 1e-10 * grid_max_abs(g));
}

TEST_CASE("V on the grid matches the analytic mode-space map") {
  Rng rng(89);
  const double m = 1.0;
  const SolutionSpec sf = random_lattice_spec(SpecKind::SF, m, 3, 16, 2.0 * M_PI, 4, rng);
  const PlaneWaveField f = field_from_spec(sf);
  const FieldGrid start = grid_from_field(f, 3, 16, 2.0 * M_PI, 0.0);
  const FieldGrid mapped = apply_V_grid(start, m);
  const FieldGrid expected = grid_from_field(apply_V_field(f, m), 3, 16, 2.0 * M_PI, 0.0);
  CHECK(grid_max_diff(mapped, expected) <= 1e-11 * grid_max_abs(expected));

  const FieldGrid back = apply_V_inv_grid(mapped, m);
  CHECK(grid_max_diff(back, start) <= 1e-11 * grid_max_abs(start));
}

TEST_CASE("dump write/read round trip and error paths") {
  Rng rng(90);
  const FieldGrid g = random_grid(1, 32, 4.0, 3, rng);
  const auto path = std::filesystem::temp_directory_path() / "relwave_test_dump.bin";
  write_dump(g, 0.25, path.string());

  std::ifstream in(path, std::ios::binary);
  std::string magic;
  in >> magic;
  CHECK(magic == "RELWAVE1");
  in.close();

  double t = 0.0;
  const FieldGrid h = read_dump(path.string(), &t);
  CHECK(t == 0.25);
  CHECK(h.dims == g.dims);
  CHECK(h.n == g.n);
  CHECK(h.box == g.box);
  CHECK(h.components == g.components);
  CHECK(grid_max_diff(g, h) == 0.0);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(read_dump("/nonexistent/relwave.bin", nullptr), std::runtime_error);
  CHECK_THROWS_AS(write_dump(g, 0.0, "/nonexistent-dir/relwave.bin"), std::runtime_error);
}

}  // TEST_SUITE
