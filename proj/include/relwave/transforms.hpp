#pragma once

// The correspondence maps: the unitary real-linear operator U between the
// generalized Maxwell system and the massless Dirac equation, the eight
// spinorizations and eight medium columns with their Pauli-Gursey-Ibragimov
// matching, the inner-atomic medium link, and the extended
// Foldy-Wouthuysen operator V between the quantum-mechanical doublet
// equation and the Dirac equation.

#include "relwave/algebra.hpp"
#include "relwave/linalg.hpp"
#include "relwave/solutions.hpp"

#include <span>
#include <vector>

namespace relwave {

RealLinearOperator build_U();
RealLinearOperator build_U_inv();

// Conjugation-valued gamma set of the cal_e representation; equals
// U^-1 gamma^mu U (checked in the suites).
std::array<RealLinearOperator, 4> gamma_tilde();

struct MaxwellToDiracResult {
  PlaneWaveField psi;
  double dirac_residual = 0.0;  // absolute massless equation residual
};
MaxwellToDiracResult map_maxwell_to_dirac(const SolutionSpec& spec,
                                          std::span<const SpacetimePoint> samples);

std::array<Eigen::Vector4cd, 8> eight_spinorizations(const EMField& f);

struct SallhoferColumns {
  std::array<Eigen::Vector4cd, 8> psi;
  // columns 3..6 satisfy the medium equation only with eps and mu interchanged
  std::array<bool, 8> needs_eps_mu_swap;
};
SallhoferColumns sallhofer_columns(const Eigen::Vector3d& E, const Eigen::Vector3d& H);

// Inner-atomic medium: eps = 1 - (Phi - m)/omega, mu = 1 - (Phi + m)/omega
// with Phi = -Z e^2/|x| (hbar = c = 1).
struct MediumProfile {
  double Z = 1.0;
  double e2 = 1.0;
  double mass = 1.0;
  double omega_tilde = 1.0;
  bool coulomb = true;   // when false, Phi is the constant phi0
  double phi0 = 0.0;
  double min_radius = 1e-12;

  double phi(const Eigen::Vector3d& x) const;
  double eps(const Eigen::Vector3d& x) const { return 1.0 - (phi(x) - mass) / omega_tilde; }
  double mu(const Eigen::Vector3d& x) const { return 1.0 - (phi(x) + mass) / omega_tilde; }
};

// Real plane-wave mode in a homogeneous medium; fields are
// Re[E0 e^{-i(omega t - k.x)}], Re[H0 e^{-i(omega t - k.x)}].
struct EMPlaneWave {
  double omega = 0.0;
  Eigen::Vector3d k = Eigen::Vector3d::Zero();
  Eigen::Vector3cd E0 = Eigen::Vector3cd::Zero();
  Eigen::Vector3cd H0 = Eigen::Vector3cd::Zero();
};

// Solves the medium Maxwell system: omega = |k|/sqrt(eps mu), transverse E,
// H = k x E / (mu omega).
EMPlaneWave medium_plane_wave(const Eigen::Vector3d& k, const Eigen::Vector3cd& polarization,
                              double eps, double mu);

struct EMSample {
  Eigen::Vector3d E, H;
  std::array<Eigen::Vector3d, 4> dE, dH;  // index 0 is d/dt, 1..3 are d/dx^j
};
EMSample eval_em(std::span<const EMPlaneWave> modes, double t, const Eigen::Vector3d& x);
double em_activity_scale(std::span<const EMPlaneWave> modes);

// Max norm over samples of [alpha.grad - diag(eps I2, mu I2) d/dt] psi^col.
double sallhofer_residual(std::span<const EMPlaneWave> field, double eps, double mu, int column,
                          bool swap_eps_mu, std::span<const SpacetimePoint> samples);
double sallhofer_residual(std::span<const EMPlaneWave> field, const MediumProfile& medium,
                          int column, bool swap_eps_mu, std::span<const SpacetimePoint> samples);

// The medium equations split by component: {curlH - eps dE/dt (3),
// curlE + mu dH/dt (3), divE, divH}.
std::array<double, 8> maxwell_residuals(const EMSample& s, double eps, double mu);
// The same eight numbers recovered from the real/imaginary parts of the
// column-1 residual of the medium equation.
std::array<double, 8> maxwell_residuals_from_column1(std::span<const EMPlaneWave> field, double eps,
                                                     double mu, double t, const Eigen::Vector3d& x);

// Max over points of the difference between the medium amplitude-equation
// symbol and the Dirac amplitude-equation symbol; only the diagonal
// potential blocks can differ, the derivative parts are shared.
double medium_amplitude_equivalence(const MediumProfile& medium,
                                    std::span<const Eigen::Vector3d> points);

// Mode-wise extended FW map: amplitudes carry over unchanged. Throws on
// mass <= 0, where the operator symbol degenerates.
SolutionSpec apply_V(const SolutionSpec& sf_spec);
SolutionSpec apply_V_inv(const SolutionSpec& dirac_spec);

// The honest pseudo-differential action, used to validate apply_V: the
// conjugation block flips mode frequency/wavevector, the differential factor
// is the per-mode matrix N [(omega + m) I -+ k.gamma].
PlaneWaveField apply_V_field(const PlaneWaveField& f, double mass);
PlaneWaveField apply_V_inv_field(const PlaneWaveField& f, double mass);

// Both sides of the intertwining identity that carries the doublet evolution
// generator into the Dirac one, analytic per mode.
PlaneWaveField fw_intertwining_lhs(const PlaneWaveField& f, double mass);  // V (d0 + i omega^) V^-1
PlaneWaveField fw_intertwining_rhs(const PlaneWaveField& f, double mass);  // d0 + i (alpha.p + beta m)
// Worst relative pointwise difference over random single off-shell modes.
double check_fw_intertwining(int trials, double mass, Rng& rng);

struct PgiMatchReport {
  std::array<int, 8> matched_op{};
  double worst_match = 0.0;
  bool is_bijection = false;
};

// Matches each member of an eight-fold family to the PGI operator that
// produces it from the family's first member, by exhaustive search over
// random real field probes.
PgiMatchReport spinorization_pgi_match(int probes, Rng& rng);
PgiMatchReport sallhofer_pgi_match(int probes, Rng& rng);

}  // namespace relwave
