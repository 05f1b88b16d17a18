#include "relwave/transforms.hpp"

#include <cmath>

namespace relwave {

namespace {

// Entry c*C+ contributes (A += c/2, B += c/2); c*C- contributes (A -= c/2, B += c/2).
struct RlBuilder {
  cmat A = cmat::Zero(4, 4);
  cmat B = cmat::Zero(4, 4);
  void c_plus(int i, int j, cplx c) {
    A(i, j) += 0.5 * c;
    B(i, j) += 0.5 * c;
  }
  void c_minus(int i, int j, cplx c) {
    A(i, j) -= 0.5 * c;
    B(i, j) += 0.5 * c;
  }
  RealLinearOperator done() const { return {A, B}; }
};

RealLinearOperator v_block_conjugation() {
  cmat a = cmat::Zero(4, 4), b = cmat::Zero(4, 4);
  a(0, 0) = a(1, 1) = 1.0;
  b(2, 2) = b(3, 3) = 1.0;
  return {a, b};
}

// Per-mode matrix of (+-i gamma^l d_l + omega^ + m)/sqrt(2 omega^(omega^ + m));
// on a mode with spatial factor e^{+ik.x} the derivative symbol is +ik_l.
cmat v_factor_matrix(const Eigen::Vector3d& k, double mass, int deriv_sign) {
  static const GammaSet gs = gamma_standard();
  const double omega = std::sqrt(k.squaredNorm() + mass * mass);
  const double norm = 1.0 / std::sqrt(2.0 * omega * (omega + mass));
  cmat m = (omega + mass) * cmat::Identity(4, 4);
  for (int l = 0; l < 3; ++l) {
    m -= static_cast<double>(deriv_sign) * k(l) * gs.gamma[l + 1];
  }
  return norm * m;
}

PlaneWaveField apply_mode_matrix(const PlaneWaveField& f, double mass, int deriv_sign) {
  PlaneWaveField out;
  out.modes.reserve(f.modes.size());
  for (const PwMode& m : f.modes) {
    out.modes.push_back({m.freq, m.k, v_factor_matrix(m.k, mass, deriv_sign) * m.w});
  }
  return out;
}

}  // namespace

RealLinearOperator build_U() {
  RlBuilder u;
  u.c_plus(0, 2, 1.0);
  u.c_minus(0, 3, 1.0);
  u.c_plus(1, 0, 1.0);
  u.c_plus(1, 1, iu);
  u.c_minus(2, 2, 1.0);
  u.c_plus(2, 3, 1.0);
  u.c_minus(3, 0, 1.0);
  u.c_minus(3, 1, iu);
  return u.done();
}

RealLinearOperator build_U_inv() {
  RlBuilder u;
  u.c_plus(0, 1, 1.0);
  u.c_minus(0, 3, 1.0);
  u.c_minus(1, 1, iu);
  u.c_plus(1, 3, iu);
  u.c_plus(2, 0, 1.0);
  u.c_minus(2, 2, 1.0);
  u.c_minus(3, 0, 1.0);
  u.c_plus(3, 2, 1.0);
  return u.done();
}

std::array<RealLinearOperator, 4> gamma_tilde() {
  cmat m0(4, 4), m1(4, 4), m2(4, 4), m3(4, 4);
  m0 << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1;
  m1 << 0, 0, 0, 1, 0, 0, -iu, 0, 0, iu, 0, 0, -1, 0, 0, 0;
  m2 << 0, 0, iu, 0, 0, 0, 0, 1, -iu, 0, 0, 0, 0, -1, 0, 0;
  m3 << 0, -iu, 0, 0, iu, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0;
  return {RealLinearOperator::antilinear(m0), RealLinearOperator::antilinear(m1),
          RealLinearOperator::antilinear(m2), RealLinearOperator::antilinear(m3)};
}

MaxwellToDiracResult map_maxwell_to_dirac(const SolutionSpec& spec,
                                          std::span<const SpacetimePoint> samples) {
  if (spec.kind != SpecKind::GenMaxwell) {
    throw std::invalid_argument("map_maxwell_to_dirac: wrong spec kind");
  }
  MaxwellToDiracResult res{apply_pointwise(build_U(), field_from_spec(spec)), 0.0};
  res.dirac_residual = max_field_norm(dirac_residual(res.psi, 0.0), samples);
  return res;
}

std::array<Eigen::Vector4cd, 8> eight_spinorizations(const EMField& f) {
  const double e1 = f.E.x(), e2 = f.E.y(), e3 = f.E.z();
  const double h1 = f.H.x(), h2 = f.H.y(), h3 = f.H.z();
  const double e0 = f.E0, h0 = f.H0;
  std::array<Eigen::Vector4cd, 8> psi;
  psi[0] << cplx(e3, h0), cplx(e1, e2), cplx(e0, h3), cplx(-h2, h1);
  psi[1] << cplx(-h0, e3), cplx(-e2, e1), cplx(-h3, e0), cplx(-h1, -h2);
  psi[2] << cplx(e2, e1), cplx(-h0, -e3), cplx(-h1, h2), cplx(h3, e0);
  psi[3] << cplx(-e1, e2), cplx(e3, -h0), cplx(-h2, -h1), cplx(-e0, h3);
  psi[4] << cplx(-h3, e0), cplx(-h1, -h2), cplx(-h0, e3), cplx(-e2, e1);
  psi[5] << cplx(-h1, h2), cplx(h3, e0), cplx(e2, e1), cplx(-h0, -e3);
  psi[6] << cplx(e0, h3), cplx(-h2, h1), cplx(e3, h0), cplx(e1, e2);
  psi[7] << cplx(-h2, -h1), cplx(-e0, h3), cplx(-e1, e2), cplx(e3, -h0);
  return psi;
}

SallhoferColumns sallhofer_columns(const Eigen::Vector3d& E, const Eigen::Vector3d& H) {
  const cplx ep(E.x(), E.y()), em(E.x(), -E.y());
  const cplx hp(H.x(), H.y()), hm(H.x(), -H.y());
  const double e3 = E.z(), h3 = H.z();
  SallhoferColumns out;
  out.psi[0] << iu * e3, iu * ep, h3, hp;
  out.psi[1] << -e3, -ep, iu * h3, iu * hp;
  out.psi[2] << h3, hp, iu * e3, iu * ep;
  out.psi[3] << iu * h3, iu * hp, -e3, -ep;
  out.psi[4] << -iu * hm, iu * h3, em, -e3;
  out.psi[5] << hm, -h3, iu * em, -iu * e3;
  out.psi[6] << em, -e3, -iu * hm, iu * h3;
  out.psi[7] << iu * em, -iu * e3, hm, -h3;
  out.needs_eps_mu_swap = {false, false, true, true, true, true, false, false};
  return out;
}

double MediumProfile::phi(const Eigen::Vector3d& x) const {
  if (!coulomb) return phi0;
  const double r = x.norm();
  if (r <= min_radius) {
    throw std::domain_error("MediumProfile: sample at the Coulomb singularity rejected");
  }
  return -Z * e2 / r;
}

EMPlaneWave medium_plane_wave(const Eigen::Vector3d& k, const Eigen::Vector3cd& polarization,
                              double eps, double mu) {
  if (k.squaredNorm() == 0.0 || eps * mu <= 0.0) {
    throw std::invalid_argument("medium_plane_wave: need |k| > 0 and eps*mu > 0");
  }
  EMPlaneWave w;
  w.k = k;
  w.omega = k.norm() / std::sqrt(eps * mu);
  const Eigen::Vector3d khat = k.normalized();
  w.E0 = polarization - (khat.cast<cplx>().dot(polarization)) * khat.cast<cplx>();
  if (w.E0.norm() < 1e-12) {
    throw std::invalid_argument("medium_plane_wave: polarization parallel to k");
  }
  // bilinear cross product; Eigen's cross() conjugates complex operands
  Eigen::Vector3cd k_cross_e;
  k_cross_e << k.y() * w.E0.z() - k.z() * w.E0.y(), k.z() * w.E0.x() - k.x() * w.E0.z(),
      k.x() * w.E0.y() - k.y() * w.E0.x();
  w.H0 = k_cross_e / (mu * w.omega);
  return w;
}

EMSample eval_em(std::span<const EMPlaneWave> modes, double t, const Eigen::Vector3d& x) {
  EMSample s{Eigen::Vector3d::Zero(), Eigen::Vector3d::Zero(), {}, {}};
  for (auto& d : s.dE) d.setZero();
  for (auto& d : s.dH) d.setZero();
  for (const EMPlaneWave& m : modes) {
    const double theta = m.omega * t - m.k.dot(x);
    const cplx phase(std::cos(theta), -std::sin(theta));
    const auto re = [&](const Eigen::Vector3cd& v, cplx factor) -> Eigen::Vector3d {
      return (v * (factor * phase)).real();
    };
    s.E += re(m.E0, 1.0);
    s.H += re(m.H0, 1.0);
    s.dE[0] += re(m.E0, -iu * m.omega);
    s.dH[0] += re(m.H0, -iu * m.omega);
    for (int j = 0; j < 3; ++j) {
      s.dE[j + 1] += re(m.E0, iu * m.k(j));
      s.dH[j + 1] += re(m.H0, iu * m.k(j));
    }
  }
  return s;
}

double em_activity_scale(std::span<const EMPlaneWave> modes) {
  double s = 0.0;
  for (const EMPlaneWave& m : modes) {
    s += (1.0 + m.omega + m.k.norm()) * (m.E0.norm() + m.H0.norm());
  }
  return s;
}

namespace {

Eigen::Vector4cd column_from_fields(int column, const Eigen::Vector3d& E,
                                    const Eigen::Vector3d& H) {
  return sallhofer_columns(E, H).psi[static_cast<size_t>(column - 1)];
}

Eigen::Vector4cd medium_residual_at(std::span<const EMPlaneWave> field, double eps_at, double mu_at,
                                    int column, bool swap_eps_mu, double t,
                                    const Eigen::Vector3d& x) {
  if (column < 1 || column > 8) {
    throw std::invalid_argument("sallhofer_residual: column index must be 1..8");
  }
  const EMSample s = eval_em(field, t, x);
  if (swap_eps_mu) std::swap(eps_at, mu_at);

  const auto sigma = pauli_matrices();
  Eigen::Vector4cd r = Eigen::Vector4cd::Zero();
  for (int j = 0; j < 3; ++j) {
    const Eigen::Vector4cd dpsi = column_from_fields(column, s.dE[j + 1], s.dH[j + 1]);
    // alpha_j = offdiag(sigma_j, sigma_j)
    r.head<2>() += sigma[j] * dpsi.tail<2>();
    r.tail<2>() += sigma[j] * dpsi.head<2>();
  }
  const Eigen::Vector4cd dtpsi = column_from_fields(column, s.dE[0], s.dH[0]);
  r.head<2>() -= eps_at * dtpsi.head<2>();
  r.tail<2>() -= mu_at * dtpsi.tail<2>();
  return r;
}

}  // namespace

double sallhofer_residual(std::span<const EMPlaneWave> field, double eps, double mu, int column,
                          bool swap_eps_mu, std::span<const SpacetimePoint> samples) {
  double worst = 0.0;
  for (const SpacetimePoint& p : samples) {
    worst = std::max(worst, medium_residual_at(field, eps, mu, column, swap_eps_mu, p.t, p.x).norm());
  }
  return worst;
}

double sallhofer_residual(std::span<const EMPlaneWave> field, const MediumProfile& medium,
                          int column, bool swap_eps_mu, std::span<const SpacetimePoint> samples) {
  double worst = 0.0;
  for (const SpacetimePoint& p : samples) {
    const double eps = medium.eps(p.x);
    const double mu = medium.mu(p.x);
    worst = std::max(worst, medium_residual_at(field, eps, mu, column, swap_eps_mu, p.t, p.x).norm());
  }
  return worst;
}

std::array<double, 8> maxwell_residuals(const EMSample& s, double eps, double mu) {
  std::array<double, 8> r{};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, l = (i + 2) % 3;
    const double curl_h = s.dH[j + 1](l) - s.dH[l + 1](j);
    const double curl_e = s.dE[j + 1](l) - s.dE[l + 1](j);
    r[static_cast<size_t>(i)] = curl_h - eps * s.dE[0](i);
    r[static_cast<size_t>(3 + i)] = curl_e + mu * s.dH[0](i);
  }
  r[6] = s.dE[1](0) + s.dE[2](1) + s.dE[3](2);
  r[7] = s.dH[1](0) + s.dH[2](1) + s.dH[3](2);
  return r;
}

std::array<double, 8> maxwell_residuals_from_column1(std::span<const EMPlaneWave> field, double eps,
                                                     double mu, double t,
                                                     const Eigen::Vector3d& x) {
  const Eigen::Vector4cd r = medium_residual_at(field, eps, mu, 1, false, t, x);
  // column 1 packs the medium system as
  //   r1 = divH + i (curlH - eps dE)_3,  r2 = i (curlH - eps dE)_+,
  //   r3 = i divE - (curlE + mu dH)_3,   r4 = -(curlE + mu dH)_+
  std::array<double, 8> out{};
  out[0] = r(1).imag();   // (curlH - eps dE)_1
  out[1] = -r(1).real();  // (curlH - eps dE)_2
  out[2] = r(0).imag();   // (curlH - eps dE)_3
  out[3] = -r(3).real();  // (curlE + mu dH)_1
  out[4] = -r(3).imag();  // (curlE + mu dH)_2
  out[5] = -r(2).real();  // (curlE + mu dH)_3
  out[6] = r(2).imag();   // divE
  out[7] = r(0).real();   // divH
  return out;
}

double medium_amplitude_equivalence(const MediumProfile& medium,
                                    std::span<const Eigen::Vector3d> points) {
  double worst = 0.0;
  for (const Eigen::Vector3d& x : points) {
    // medium amplitude-equation potential block
    Eigen::Vector4d lhs;
    lhs << medium.eps(x), medium.eps(x), medium.mu(x), medium.mu(x);
    // Dirac amplitude-equation potential block, written from Phi directly
    const double phi = medium.phi(x);
    const double top = 1.0 - (phi - medium.mass) / medium.omega_tilde;
    const double bottom = 1.0 - (phi + medium.mass) / medium.omega_tilde;
    Eigen::Vector4d rhs;
    rhs << top, top, bottom, bottom;
    worst = std::max(worst, (medium.omega_tilde * (lhs - rhs)).cwiseAbs().maxCoeff());
  }
  return worst;
}

SolutionSpec apply_V(const SolutionSpec& sf_spec) {
  if (sf_spec.kind != SpecKind::SF) {
    throw std::invalid_argument("apply_V: expects the quantum-mechanical spec kind");
  }
  if (sf_spec.mass <= 0.0) {
    throw std::domain_error("apply_V: operator symbol degenerates at m = 0");
  }
  return make_spec(SpecKind::Dirac, sf_spec.mass, sf_spec.modes);
}

SolutionSpec apply_V_inv(const SolutionSpec& dirac_spec) {
  if (dirac_spec.kind != SpecKind::Dirac) {
    throw std::invalid_argument("apply_V_inv: expects the Dirac spec kind");
  }
  if (dirac_spec.mass <= 0.0) {
    throw std::domain_error("apply_V_inv: operator symbol degenerates at m = 0");
  }
  return make_spec(SpecKind::SF, dirac_spec.mass, dirac_spec.modes);
}

PlaneWaveField apply_V_field(const PlaneWaveField& f, double mass) {
  if (mass <= 0.0) throw std::domain_error("apply_V_field: mass must be positive");
  return apply_mode_matrix(apply_pointwise(v_block_conjugation(), f), mass, +1);
}

PlaneWaveField apply_V_inv_field(const PlaneWaveField& f, double mass) {
  if (mass <= 0.0) throw std::domain_error("apply_V_inv_field: mass must be positive");
  return apply_pointwise(v_block_conjugation(), apply_mode_matrix(f, mass, -1));
}

namespace {

PlaneWaveField sf_generator_applied(const PlaneWaveField& f, double mass) {
  // (d0 + i omega^) acting per mode
  PlaneWaveField out;
  out.modes.reserve(f.modes.size());
  for (const PwMode& m : f.modes) {
    const double omega = std::sqrt(m.k.squaredNorm() + mass * mass);
    out.modes.push_back({m.freq, m.k, (-iu * m.freq + iu * omega) * m.w});
  }
  return out;
}

}  // namespace

PlaneWaveField fw_intertwining_lhs(const PlaneWaveField& f, double mass) {
  return apply_V_field(sf_generator_applied(apply_V_inv_field(f, mass), mass), mass);
}

PlaneWaveField fw_intertwining_rhs(const PlaneWaveField& f, double mass) {
  PlaneWaveField out;
  out.modes.reserve(f.modes.size());
  for (const PwMode& m : f.modes) {
    const cmat h = dirac_hamiltonian(m.k, mass);
    out.modes.push_back({m.freq, m.k, -iu * m.freq * m.w + iu * (h * m.w)});
  }
  return out;
}

double check_fw_intertwining(int trials, double mass, Rng& rng) {
  const auto samples = halton_samples(12);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    PlaneWaveField f;
    Eigen::Vector4cd w;
    for (int i = 0; i < 4; ++i) w(i) = rng.complex_in_disk(1.0);
    // off-shell frequency on purpose; the identity holds for any mode
    f.modes.push_back({rng.uniform(-3.0, 3.0), rng.wavevector(0.3, 2.0), w});
    const PlaneWaveField lhs = fw_intertwining_lhs(f, mass);
    const PlaneWaveField rhs = fw_intertwining_rhs(f, mass);
    const double scale = std::max(rhs.activity_scale(), 1e-300);
    worst = std::max(worst, max_field_distance(lhs, rhs, samples) / scale);
  }
  return worst;
}

namespace {

PgiMatchReport match_family(const std::vector<std::array<Eigen::Vector4cd, 8>>& family_probes,
                            const std::vector<Eigen::Vector4cd>& base_probes) {
  const auto ops = pgi_operators(gamma_standard());
  PgiMatchReport rep;
  std::array<bool, 8> used{};
  rep.worst_match = 0.0;
  for (int c = 0; c < 8; ++c) {
    int best = -1;
    double best_err = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 8; ++j) {
      double err = 0.0;
      for (size_t p = 0; p < base_probes.size(); ++p) {
        err = std::max(err, (family_probes[p][static_cast<size_t>(c)] -
                             rl_apply(ops[static_cast<size_t>(j)], base_probes[p]))
                                .norm());
      }
      if (err < best_err) {
        best_err = err;
        best = j;
      }
    }
    rep.matched_op[static_cast<size_t>(c)] = best;
    rep.worst_match = std::max(rep.worst_match, best_err);
    used[static_cast<size_t>(best)] = true;
  }
  rep.is_bijection = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
  return rep;
}

}  // namespace

PgiMatchReport spinorization_pgi_match(int probes, Rng& rng) {
  std::vector<std::array<Eigen::Vector4cd, 8>> family;
  std::vector<Eigen::Vector4cd> base;
  for (int p = 0; p < probes; ++p) {
    EMField f;
    f.E = rng.vec3(-1.0, 1.0);
    f.H = rng.vec3(-1.0, 1.0);
    f.E0 = rng.uniform(-1.0, 1.0);
    f.H0 = rng.uniform(-1.0, 1.0);
    const auto psi = eight_spinorizations(f);
    family.push_back(psi);
    base.push_back(psi[0]);
  }
  return match_family(family, base);
}

PgiMatchReport sallhofer_pgi_match(int probes, Rng& rng) {
  std::vector<std::array<Eigen::Vector4cd, 8>> family;
  std::vector<Eigen::Vector4cd> base;
  for (int p = 0; p < probes; ++p) {
    const Eigen::Vector3d E = rng.vec3(-1.0, 1.0);
    const Eigen::Vector3d H = rng.vec3(-1.0, 1.0);
    const auto cols = sallhofer_columns(E, H);
    family.push_back(cols.psi);
    base.push_back(cols.psi[0]);
  }
  return match_family(family, base);
}

}  // namespace relwave
