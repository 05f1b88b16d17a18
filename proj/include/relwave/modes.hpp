#pragma once

// Momentum-space building blocks: dispersion, the spin-1 helicity basis used
// to expand the generalized Maxwell solution, the Dirac spinor basis, and
// the Cartesian orts of the quantum-mechanical doublet.

#include "relwave/linalg.hpp"

#include <array>

namespace relwave {

struct WaveVector {
  Eigen::Vector3d k;
  double mass = 0.0;
  double omega = 0.0;  // sqrt(k^2 + m^2)
};

// Throws on mass < 0 and on the massless zero mode (omega = 0).
WaveVector make_wave_vector(const Eigen::Vector3d& k, double mass);

enum class QuadKind { Helicity, DiracSpinor, CartesianOrt };

struct BasisQuad {
  QuadKind kind;
  std::array<Eigen::Vector4cd, 4> v;
};

// 3-component helicity eigenvector with (S.k^) e1 = -e1; e2 = conj(e1) carries
// +1 and k/omega carries 0. The k || z degenerate case takes the directional
// limit along k1.
Eigen::Vector3cd helicity_e1(const Eigen::Vector3d& k);

// {e1, e2, e3, e4} with the scalar slot last. Requires |k| > 0.
BasisQuad helicity_basis(const WaveVector& wv);

// Dirac spinors, r in {1,2} for v^-(k) and r in {3,4} for v^+(k),
// normalized by 1/sqrt(2 omega (omega + m)).
Eigen::Vector4cd dirac_v_minus(const Eigen::Vector3d& k, double mass, int r);
Eigen::Vector4cd dirac_v_plus(const Eigen::Vector3d& k, double mass, int r);

// Orthonormal eigenbasis of H(k) = alpha.k + beta m at spatial momentum k:
// {v^-_1(k), v^-_2(k), v^+_3(-k), v^+_4(-k)} with eigenvalues
// (+omega, +omega, -omega, -omega). These are the four spinors that meet at
// one spatial Fourier component of the general solution.
BasisQuad dirac_spinors(const WaveVector& wv);

BasisQuad cartesian_orts();

// alpha.k + beta m in the standard representation.
cmat dirac_hamiltonian(const Eigen::Vector3d& k, double mass);

}  // namespace relwave
