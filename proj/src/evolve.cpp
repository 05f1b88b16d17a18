#include "relwave/evolve.hpp"

#include "relwave/modes.hpp"
#include "relwave/transforms.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>

namespace relwave {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void run_fft(cplx* data, int dims, int n, int sign) {
  const std::size_t count = (dims == 1) ? static_cast<std::size_t>(n)
                                        : static_cast<std::size_t>(n) * n * n;
  // fftw_malloc keeps the buffer alignment (and so the chosen codelets)
  // identical across runs
  auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * count));
  std::memcpy(static_cast<void*>(buf), static_cast<const void*>(data), sizeof(cplx) * count);
  fftw_plan plan = (dims == 1)
                       ? fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE)
                       : fftw_plan_dft_3d(n, n, n, buf, buf, sign, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  std::memcpy(static_cast<void*>(data), static_cast<const void*>(buf), sizeof(cplx) * count);
  fftw_free(buf);
}

}  // namespace

std::size_t FieldGrid::points() const {
  return (dims == 1) ? static_cast<std::size_t>(n) : static_cast<std::size_t>(n) * n * n;
}

std::size_t FieldGrid::index(int c, int ix, int iy, int iz) const {
  const std::size_t pt = (dims == 1)
                             ? static_cast<std::size_t>(ix)
                             : (static_cast<std::size_t>(iz) * n + iy) * n + ix;
  return static_cast<std::size_t>(c) * points() + pt;
}

cplx& FieldGrid::at(int c, int ix, int iy, int iz) { return values[index(c, ix, iy, iz)]; }
const cplx& FieldGrid::at(int c, int ix, int iy, int iz) const {
  return values[index(c, ix, iy, iz)];
}

FieldGrid make_grid(int dims, int n, double box, int components) {
  if (dims != 1 && dims != 3) throw std::invalid_argument("FieldGrid: dims must be 1 or 3");
  if (!is_power_of_two(n)) throw std::invalid_argument("FieldGrid: n must be a power of two");
  if (!(box > 0.0)) throw std::invalid_argument("FieldGrid: box must be positive");
  if (components < 1) throw std::invalid_argument("FieldGrid: need at least one component");
  FieldGrid g{dims, n, box, components, {}};
  g.values.assign(static_cast<std::size_t>(components) * g.points(), cplx(0.0, 0.0));
  return g;
}

double lattice_wavenumber(int j, int n, double box) {
  const int jj = (j < n / 2) ? j : j - n;
  return 2.0 * M_PI * jj / box;
}

void fft_forward(FieldGrid& g) {
  for (int c = 0; c < g.components; ++c) run_fft(&g.values[g.index(c, 0)], g.dims, g.n, FFTW_FORWARD);
}

void fft_inverse(FieldGrid& g) {
  const double scale = 1.0 / static_cast<double>(g.points());
  for (int c = 0; c < g.components; ++c) {
    run_fft(&g.values[g.index(c, 0)], g.dims, g.n, FFTW_BACKWARD);
  }
  for (cplx& v : g.values) v *= scale;
}

double grid_norm2(const FieldGrid& g) {
  double s = 0.0;
  for (const cplx& v : g.values) s += std::norm(v);
  return s;
}

double grid_max_abs(const FieldGrid& g) {
  double s = 0.0;
  for (const cplx& v : g.values) s = std::max(s, std::abs(v));
  return s;
}

double grid_max_diff(const FieldGrid& a, const FieldGrid& b) {
  if (a.values.size() != b.values.size()) {
    throw std::invalid_argument("grid_max_diff: shape mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) s = std::max(s, std::abs(a.values[i] - b.values[i]));
  return s;
}

namespace {

// Applies op(k, coeffs) to the Fourier coefficients of every lattice mode,
// with coeffs the component vector at that mode.
template <typename Op>
FieldGrid modewise(const FieldGrid& g, Op&& op) {
  FieldGrid out = g;
  fft_forward(out);
  cvec coeffs(out.components);
  const int nz = (out.dims == 1) ? 1 : out.n;
  const int ny = nz;
  for (int iz = 0; iz < nz; ++iz) {
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < out.n; ++ix) {
        Eigen::Vector3d k(lattice_wavenumber(ix, out.n, out.box), 0.0, 0.0);
        if (out.dims == 3) {
          k.y() = lattice_wavenumber(iy, out.n, out.box);
          k.z() = lattice_wavenumber(iz, out.n, out.box);
        }
        for (int c = 0; c < out.components; ++c) coeffs(c) = out.at(c, ix, iy, iz);
        op(k, coeffs);
        for (int c = 0; c < out.components; ++c) out.at(c, ix, iy, iz) = coeffs(c);
      }
    }
  }
  fft_inverse(out);
  return out;
}

Eigen::Matrix4cd dirac_propagator(const Eigen::Vector3d& k, double mass, double t) {
  const double omega = std::sqrt(k.squaredNorm() + mass * mass);
  const double s = (omega == 0.0) ? t : std::sin(omega * t) / omega;
  const cmat h = dirac_hamiltonian(k, mass);
  return std::cos(omega * t) * Eigen::Matrix4cd::Identity() - iu * s * h;
}

Eigen::Matrix4cd gen_maxwell_propagator(const Eigen::Vector3d& k, double t) {
  if (k.squaredNorm() == 0.0) return Eigen::Matrix4cd::Identity();
  const double omega = k.norm();
  const BasisQuad q = helicity_basis(make_wave_vector(k, 0.0));
  const Eigen::Vector4cd up = (q.v[2] + q.v[3]) / std::sqrt(2.0);
  const Eigen::Vector4cd un = (q.v[2] - q.v[3]) / std::sqrt(2.0);
  const cplx minus = std::exp(-iu * omega * t);
  const cplx plus = std::exp(iu * omega * t);
  // e1 and (e3 + e4)/sqrt(2) advance with e^{-i omega t}; their partners with
  // the opposite phase
  return minus * (q.v[0] * q.v[0].adjoint() + up * up.adjoint()) +
         plus * (q.v[1] * q.v[1].adjoint() + un * un.adjoint());
}

void require_components(const FieldGrid& g, int need, const char* what) {
  if (g.components != need) {
    throw std::invalid_argument(std::string(what) + ": needs a 4-component grid");
  }
}

}  // namespace

FieldGrid evolve_sf_grid(const FieldGrid& g, double mass, double t) {
  if (t == 0.0) return g;
  return modewise(g, [&](const Eigen::Vector3d& k, cvec& coeffs) {
    const double omega = std::sqrt(k.squaredNorm() + mass * mass);
    coeffs *= std::exp(-iu * omega * t);
  });
}

FieldGrid evolve_dirac_grid(const FieldGrid& g, double mass, double t) {
  require_components(g, 4, "evolve_dirac_grid");
  if (t == 0.0) return g;
  return modewise(g, [&](const Eigen::Vector3d& k, cvec& coeffs) {
    coeffs = dirac_propagator(k, mass, t) * coeffs;
  });
}

FieldGrid evolve_gen_maxwell_grid(const FieldGrid& g, double t) {
  require_components(g, 4, "evolve_gen_maxwell_grid");
  if (t == 0.0) return g;
  return modewise(g, [&](const Eigen::Vector3d& k, cvec& coeffs) {
    coeffs = gen_maxwell_propagator(k, t) * coeffs;
  });
}

FieldGrid evolve_gen_maxwell_via_u(const FieldGrid& g, double t) {
  require_components(g, 4, "evolve_gen_maxwell_via_u");
  if (t == 0.0) return g;
  const FieldGrid psi = apply_rl_pointwise(build_U(), g);
  return apply_rl_pointwise(build_U_inv(), evolve_dirac_grid(psi, 0.0, t));
}

FieldGrid zero_nyquist(const FieldGrid& g) {
  FieldGrid out = g;
  fft_forward(out);
  const int half = out.n / 2;
  const int nz = (out.dims == 1) ? 1 : out.n;
  for (int iz = 0; iz < nz; ++iz) {
    for (int iy = 0; iy < nz; ++iy) {
      for (int ix = 0; ix < out.n; ++ix) {
        const bool nyq = ix == half || (out.dims == 3 && (iy == half || iz == half));
        if (!nyq) continue;
        for (int c = 0; c < out.components; ++c) out.at(c, ix, iy, iz) = 0.0;
      }
    }
  }
  fft_inverse(out);
  return out;
}

FieldGrid apply_sf_generator(const FieldGrid& g, double mass) {
  return modewise(g, [&](const Eigen::Vector3d& k, cvec& coeffs) {
    const double omega = std::sqrt(k.squaredNorm() + mass * mass);
    coeffs *= -iu * omega;
  });
}

FieldGrid apply_dirac_generator(const FieldGrid& g, double mass) {
  require_components(g, 4, "apply_dirac_generator");
  return modewise(g, [&](const Eigen::Vector3d& k, cvec& coeffs) {
    coeffs = -iu * (dirac_hamiltonian(k, mass) * coeffs);
  });
}

FieldGrid apply_rl_pointwise(const RealLinearOperator& op, const FieldGrid& g) {
  if (op.dim() != g.components) {
    throw std::invalid_argument("apply_rl_pointwise: operator/component mismatch");
  }
  FieldGrid out = g;
  const std::size_t npts = g.points();
  cvec v(g.components);
  for (std::size_t p = 0; p < npts; ++p) {
    for (int c = 0; c < g.components; ++c) v(c) = g.values[static_cast<std::size_t>(c) * npts + p];
    const cvec w = rl_apply(op, v);
    for (int c = 0; c < g.components; ++c) out.values[static_cast<std::size_t>(c) * npts + p] = w(c);
  }
  return out;
}

namespace {

FieldGrid conj_lower_block(const FieldGrid& g) {
  FieldGrid out = g;
  const std::size_t npts = g.points();
  for (int c = 2; c < 4; ++c) {
    for (std::size_t p = 0; p < npts; ++p) {
      cplx& v = out.values[static_cast<std::size_t>(c) * npts + p];
      v = std::conj(v);
    }
  }
  return out;
}

FieldGrid v_factor_grid(const FieldGrid& g, double mass, int deriv_sign) {
  static const GammaSet gs = gamma_standard();
  return modewise(g, [&](const Eigen::Vector3d& k, cvec& coeffs) {
    const double omega = std::sqrt(k.squaredNorm() + mass * mass);
    cmat m = (omega + mass) * cmat::Identity(4, 4);
    for (int l = 0; l < 3; ++l) m -= static_cast<double>(deriv_sign) * k(l) * gs.gamma[l + 1];
    coeffs = (m * coeffs) / std::sqrt(2.0 * omega * (omega + mass));
  });
}

}  // namespace

FieldGrid apply_V_grid(const FieldGrid& g, double mass) {
  require_components(g, 4, "apply_V_grid");
  if (mass <= 0.0) throw std::domain_error("apply_V_grid: mass must be positive");
  return v_factor_grid(conj_lower_block(g), mass, +1);
}

FieldGrid apply_V_inv_grid(const FieldGrid& g, double mass) {
  require_components(g, 4, "apply_V_inv_grid");
  if (mass <= 0.0) throw std::domain_error("apply_V_inv_grid: mass must be positive");
  return conj_lower_block(v_factor_grid(g, mass, -1));
}

double commuting_diagram_u(const FieldGrid& cal_e, double t) {
  const FieldGrid path1 = apply_rl_pointwise(build_U(), evolve_gen_maxwell_grid(cal_e, t));
  const FieldGrid path2 = evolve_dirac_grid(apply_rl_pointwise(build_U(), cal_e), 0.0, t);
  return grid_max_diff(path1, path2);
}

double commuting_diagram_v(const FieldGrid& f, double mass, double t) {
  const FieldGrid path1 = apply_V_grid(evolve_sf_grid(f, mass, t), mass);
  const FieldGrid path2 = evolve_dirac_grid(apply_V_grid(f, mass), mass, t);
  return grid_max_diff(path1, path2);
}

FieldGrid grid_from_field(const PlaneWaveField& f, int dims, int n, double box, double t) {
  FieldGrid g = make_grid(dims, n, box, 4);
  const double h = box / n;
  const int nz = (dims == 1) ? 1 : n;
  const int ny = nz;
  for (int iz = 0; iz < nz; ++iz) {
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < n; ++ix) {
        const Eigen::Vector3d x(ix * h, (dims == 3) ? iy * h : 0.0, (dims == 3) ? iz * h : 0.0);
        const Eigen::Vector4cd v = f(t, x);
        for (int c = 0; c < 4; ++c) g.at(c, ix, iy, iz) = v(c);
      }
    }
  }
  return g;
}

SolutionSpec random_lattice_spec(SpecKind kind, double mass, int dims, int n, double box,
                                 int n_modes, Rng& rng) {
  const int jmax = std::max(1, n / 8);
  std::vector<Mode> modes;
  modes.reserve(static_cast<size_t>(n_modes));
  for (int i = 0; i < n_modes; ++i) {
    Eigen::Vector3i j = Eigen::Vector3i::Zero();
    do {
      j.x() = rng.index(2 * jmax + 1) - jmax;
      if (dims == 3) {
        j.y() = rng.index(2 * jmax + 1) - jmax;
        j.z() = rng.index(2 * jmax + 1) - jmax;
      }
    } while (mass == 0.0 && j.squaredNorm() == 0);
    Mode m;
    m.k = 2.0 * M_PI / box * j.cast<double>();
    m.branch = 1 + rng.index(4);
    m.amplitude = rng.complex_in_disk(1.0) + cplx(0.25, 0.25);
    modes.push_back(m);
  }
  return make_spec(kind, mass, std::move(modes));
}

void write_dump(const FieldGrid& g, double t, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_dump: cannot open " + path);
  char header[160];
  std::snprintf(header, sizeof(header), "RELWAVE1 %d %d %.17g %d %.17g\n", g.dims, g.n, g.box,
                g.components, t);
  out << header;
  out.write(reinterpret_cast<const char*>(g.values.data()),
            static_cast<std::streamsize>(g.values.size() * sizeof(cplx)));
  if (!out) throw std::runtime_error("write_dump: short write to " + path);
}

FieldGrid read_dump(const std::string& path, double* t_out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_dump: cannot open " + path);
  std::string magic;
  int dims = 0, n = 0, components = 0;
  double box = 0.0, t = 0.0;
  in >> magic >> dims >> n >> box >> components >> t;
  if (magic != "RELWAVE1") throw std::runtime_error("read_dump: bad magic in " + path);
  in.ignore(1);  // newline
  FieldGrid g = make_grid(dims, n, box, components);
  in.read(reinterpret_cast<char*>(g.values.data()),
          static_cast<std::streamsize>(g.values.size() * sizeof(cplx)));
  if (!in) throw std::runtime_error("read_dump: truncated data in " + path);
  if (t_out) *t_out = t;
  return g;
}

}  // namespace relwave
