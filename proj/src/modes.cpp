#include "relwave/modes.hpp"

#include "relwave/algebra.hpp"

#include <cmath>

namespace relwave {

WaveVector make_wave_vector(const Eigen::Vector3d& k, double mass) {
  if (!k.allFinite() || !std::isfinite(mass)) {
    throw std::invalid_argument("WaveVector: non-finite input");
  }
  if (mass < 0.0) {
    throw std::invalid_argument("WaveVector: negative mass");
  }
  if (mass == 0.0 && k.squaredNorm() == 0.0) {
    throw std::invalid_argument("WaveVector: massless zero mode has no frequency");
  }
  return {k, mass, std::sqrt(k.squaredNorm() + mass * mass)};
}

Eigen::Vector3cd helicity_e1(const Eigen::Vector3d& k) {
  const double kperp2 = k.x() * k.x() + k.y() * k.y();
  const double omega = k.norm();
  if (omega == 0.0) {
    throw std::invalid_argument("helicity_e1: zero wavevector");
  }
  Eigen::Vector3cd e1;
  if (kperp2 == 0.0) {
    // directional limit along k1
    const double s = (k.z() > 0.0) ? 1.0 : -1.0;
    e1 << -iu * s, -1.0, 0.0;
    e1 /= std::sqrt(2.0);
    return e1;
  }
  const double norm = omega * std::sqrt(2.0 * kperp2);
  e1 << cplx(omega * k.y(), -k.x() * k.z()), cplx(-omega * k.x(), -k.y() * k.z()),
      cplx(0.0, kperp2);
  return e1 / norm;
}

BasisQuad helicity_basis(const WaveVector& wv) {
  if (wv.k.squaredNorm() == 0.0) {
    throw std::invalid_argument("helicity_basis: undefined at k = 0");
  }
  const double omega = wv.k.norm();
  const Eigen::Vector3cd e1 = helicity_e1(wv.k);
  BasisQuad q{QuadKind::Helicity, {}};
  q.v[0] << e1(0), e1(1), e1(2), 0.0;
  q.v[1] = q.v[0].conjugate();
  q.v[2] << wv.k.x() / omega, wv.k.y() / omega, wv.k.z() / omega, 0.0;
  q.v[3] << 0.0, 0.0, 0.0, 1.0;
  return q;
}

namespace {

void check_spinor_args(const Eigen::Vector3d& k, double mass, int r, int lo, int hi) {
  if (mass < 0.0 || (mass == 0.0 && k.squaredNorm() == 0.0)) {
    throw std::invalid_argument("dirac spinor: need m > 0, or m = 0 with |k| > 0");
  }
  if (r < lo || r > hi) {
    throw std::invalid_argument("dirac spinor: branch index out of range");
  }
}

}  // namespace

Eigen::Vector4cd dirac_v_minus(const Eigen::Vector3d& k, double mass, int r) {
  check_spinor_args(k, mass, r, 1, 2);
  const double omega = std::sqrt(k.squaredNorm() + mass * mass);
  const double w = omega + mass;
  const double n = 1.0 / std::sqrt(2.0 * omega * w);
  const cplx kp(k.x(), k.y());
  const cplx km(k.x(), -k.y());
  Eigen::Vector4cd v;
  if (r == 1) {
    v << w, 0.0, k.z(), kp;
  } else {
    v << 0.0, w, km, -k.z();
  }
  return n * v;
}

Eigen::Vector4cd dirac_v_plus(const Eigen::Vector3d& k, double mass, int r) {
  check_spinor_args(k, mass, r, 3, 4);
  const double omega = std::sqrt(k.squaredNorm() + mass * mass);
  const double w = omega + mass;
  const double n = 1.0 / std::sqrt(2.0 * omega * w);
  const cplx kp(k.x(), k.y());
  const cplx km(k.x(), -k.y());
  Eigen::Vector4cd v;
  if (r == 3) {
    v << k.z(), kp, w, 0.0;
  } else {
    v << km, -k.z(), 0.0, w;
  }
  return n * v;
}

BasisQuad dirac_spinors(const WaveVector& wv) {
  BasisQuad q{QuadKind::DiracSpinor, {}};
  q.v[0] = dirac_v_minus(wv.k, wv.mass, 1);
  q.v[1] = dirac_v_minus(wv.k, wv.mass, 2);
  q.v[2] = dirac_v_plus(-wv.k, wv.mass, 3);
  q.v[3] = dirac_v_plus(-wv.k, wv.mass, 4);
  return q;
}

BasisQuad cartesian_orts() {
  BasisQuad q{QuadKind::CartesianOrt, {}};
  for (int a = 0; a < 4; ++a) {
    q.v[a] = Eigen::Vector4cd::Zero();
    q.v[a](a) = 1.0;
  }
  return q;
}

cmat dirac_hamiltonian(const Eigen::Vector3d& k, double mass) {
  struct Parts {
    cmat beta;
    std::array<cmat, 3> alpha;
  };
  static const Parts parts = [] {
    const GammaSet gs = gamma_standard();
    Parts p{gs.gamma[0], {}};
    for (int j = 0; j < 3; ++j) p.alpha[j] = gs.gamma[0] * gs.gamma[j + 1];
    return p;
  }();
  cmat h = mass * parts.beta;
  for (int j = 0; j < 3; ++j) h += k(j) * parts.alpha[j];
  return h;
}

}  // namespace relwave
