#pragma once

// Spectral time evolution on periodic grids. Each evolution is the exact
// mode-wise unitary exponential; there is no time stepper. Grid modes carry
// the spatial factor e^{+ik.x} with k on the FFT lattice 2 pi j / L,
// j in [-n/2, n/2).

#include "relwave/linalg.hpp"
#include "relwave/rng.hpp"
#include "relwave/solutions.hpp"

#include <string>
#include <vector>

namespace relwave {

struct FieldGrid {
  int dims = 1;        // 1 or 3
  int n = 0;           // points per axis, power of two
  double box = 0.0;    // physical edge length
  int components = 1;
  std::vector<cplx> values;  // component-major, x-fastest

  std::size_t points() const;
  std::size_t index(int c, int ix, int iy = 0, int iz = 0) const;
  cplx& at(int c, int ix, int iy = 0, int iz = 0);
  const cplx& at(int c, int ix, int iy = 0, int iz = 0) const;
};

FieldGrid make_grid(int dims, int n, double box, int components);

double lattice_wavenumber(int j, int n, double box);

// In-place DFT per component; inverse carries the 1/N normalization so a
// round trip is the identity up to rounding.
void fft_forward(FieldGrid& g);
void fft_inverse(FieldGrid& g);

double grid_norm2(const FieldGrid& g);         // sum |v|^2
double grid_max_abs(const FieldGrid& g);
double grid_max_diff(const FieldGrid& a, const FieldGrid& b);

// Phase advance e^{-i omega(k) t} per mode and component; components evolve
// independently, any component count.
FieldGrid evolve_sf_grid(const FieldGrid& g, double mass, double t);

// exp(-i H(k) t) = cos(omega t) I - i sin(omega t)/omega H(k) per mode.
FieldGrid evolve_dirac_grid(const FieldGrid& g, double mass, double t);

// Massless evolution of the complex electromagnetic packing, assembled from
// the helicity projectors of the first-order system; exact for every lattice
// mode.
FieldGrid evolve_gen_maxwell_grid(const FieldGrid& g, double t);
// The same evolution realized as conjugation by U of the massless Dirac
// propagator. Pointwise conjugation aliases the Nyquist bin (the lattice
// cannot separate +-k there), so this route agrees with the projector route
// only on grids with empty Nyquist bins; it is the independent cross-check.
FieldGrid evolve_gen_maxwell_via_u(const FieldGrid& g, double t);

// Zeroes every Fourier bin with an index on the Nyquist plane.
FieldGrid zero_nyquist(const FieldGrid& g);

// Spectral generators d/dt, for the finite-difference consistency checks.
FieldGrid apply_sf_generator(const FieldGrid& g, double mass);      // -i omega(k)
FieldGrid apply_dirac_generator(const FieldGrid& g, double mass);   // -i H(k)

FieldGrid apply_rl_pointwise(const RealLinearOperator& op, const FieldGrid& g);

// Extended FW operator on a grid: diag(1,1,C,C) pointwise, then the
// momentum-space factor per mode.
FieldGrid apply_V_grid(const FieldGrid& g, double mass);
FieldGrid apply_V_inv_grid(const FieldGrid& g, double mass);

// Max pointwise difference between map(evolve(f)) and evolve(map(f)).
double commuting_diagram_u(const FieldGrid& cal_e, double t);
double commuting_diagram_v(const FieldGrid& f, double mass, double t);

// Sample an analytic mode sum onto a grid at time t (4 components).
FieldGrid grid_from_field(const PlaneWaveField& f, int dims, int n, double box, double t);

// Random spec whose wavevectors sit exactly on the FFT lattice, so grid
// evolution and analytic evaluation agree to rounding.
SolutionSpec random_lattice_spec(SpecKind kind, double mass, int dims, int n, double box,
                                 int n_modes, Rng& rng);

// Field dump: "RELWAVE1 dims n L components t" then little-endian (re, im)
// float64 pairs in component-major, x-fastest order.
void write_dump(const FieldGrid& g, double t, const std::string& path);
FieldGrid read_dump(const std::string& path, double* t_out = nullptr);

}  // namespace relwave
