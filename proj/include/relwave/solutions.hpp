#pragma once

// General solutions as finite plane-wave mode sums, and equation residuals
// evaluated with exact per-mode derivatives. The momentum integrals become
// sums over a mode list; quadrature weights live inside the amplitudes and
// the continuum prefactors are kept verbatim so amplitudes match across the
// quantum-mechanical, Dirac and electromagnetic pictures.

#include "relwave/linalg.hpp"
#include "relwave/modes.hpp"
#include "relwave/rng.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace relwave {

enum class SpecKind { SF, Dirac, GenMaxwell };

const char* to_string(SpecKind k);

struct Mode {
  Eigen::Vector3d k;
  int branch = 1;  // 1..4
  cplx amplitude{0.0, 0.0};
};

struct SolutionSpec {
  SpecKind kind = SpecKind::SF;
  double mass = 0.0;
  std::vector<Mode> modes;
};

// Validates branch labels, finiteness, the kind/mass pairing (GenMaxwell is
// massless) and the massless |k| > 0 requirement.
SolutionSpec make_spec(SpecKind kind, double mass, std::vector<Mode> modes);

SolutionSpec random_spec(SpecKind kind, double mass, int n_modes, Rng& rng);

struct SpacetimePoint {
  double t = 0.0;
  Eigen::Vector3d x = Eigen::Vector3d::Zero();
};

// Deterministic quasi-random samples in [0, scale]^4 (Halton, bases 2/3/5/7).
std::vector<SpacetimePoint> halton_samples(int count, double scale = 1.0);

// One term w e^{-i (freq t - k.x)}. Negative freq encodes the e^{+ikx}
// branches: conj(w e^{-i(om t - k.x)}) = conj(w) e^{-i((-om) t - (-k).x)}.
struct PwMode {
  double freq = 0.0;
  Eigen::Vector3d k = Eigen::Vector3d::Zero();
  Eigen::Vector4cd w = Eigen::Vector4cd::Zero();
};

struct PlaneWaveField {
  std::vector<PwMode> modes;

  Eigen::Vector4cd operator()(double t, const Eigen::Vector3d& x) const;
  // mu = 0 is d/dt, mu = 1..3 are d/dx^j
  Eigen::Vector4cd derivative(int mu, double t, const Eigen::Vector3d& x) const;
  // sum_m |w|(1 + |freq| + |k|), an upper bound on first-order operator output
  double activity_scale() const;
};

PlaneWaveField operator+(const PlaneWaveField& a, const PlaneWaveField& b);

double max_field_norm(const PlaneWaveField& f, std::span<const SpacetimePoint> samples);
double max_field_distance(const PlaneWaveField& a, const PlaneWaveField& b,
                          std::span<const SpacetimePoint> samples);

// Pointwise action of a real-linear operator: the antilinear part flips
// each mode's frequency and wavevector while conjugating its amplitude.
PlaneWaveField apply_pointwise(const RealLinearOperator& op, const PlaneWaveField& f);

// The mu-derivative of f as an exact mode sum.
PlaneWaveField derivative_field(const PlaneWaveField& f, int mu);

PlaneWaveField field_from_spec(const SolutionSpec& spec);

Eigen::Vector4cd eval_sf(const SolutionSpec& spec, double t, const Eigen::Vector3d& x);
Eigen::Vector4cd eval_dirac(const SolutionSpec& spec, double t, const Eigen::Vector3d& x);
Eigen::Vector4cd eval_cal_e(const SolutionSpec& spec, double t, const Eigen::Vector3d& x);

struct EMField {
  Eigen::Vector3d E = Eigen::Vector3d::Zero();
  Eigen::Vector3d H = Eigen::Vector3d::Zero();
  double E0 = 0.0;
  double H0 = 0.0;
};

// Complex packing (E1 - iH1, E2 - iH2, E3 - iH3, E0 - iH0); round-trips exactly.
Eigen::Vector4cd pack_em(const EMField& f);
EMField unpack_em(const Eigen::Vector4cd& cal_e);

EMField eval_gen_maxwell(const SolutionSpec& spec, double t, const Eigen::Vector3d& x);

// Equation residuals, exact per mode. Absolute values; callers divide by
// activity_scale() where a relative statement is wanted.
PlaneWaveField sf_residual(const PlaneWaveField& f, double mass);
PlaneWaveField dirac_residual(const PlaneWaveField& f, double mass);

double residual_sf(const SolutionSpec& spec, std::span<const SpacetimePoint> samples);
double residual_dirac(const SolutionSpec& spec, std::span<const SpacetimePoint> samples);

struct GenMaxwellResidualReport {
  double curl_div_form = 0.0;   // real curl/grad/div system
  double covariant_form = 0.0;  // antisymmetrized vector form with the Levi-Civita symbol
  double tensor_form = 0.0;     // tensor-scalar form
  double spin_form = 0.0;       // (i d0 + S.p) form
  double max_residual() const;
};

GenMaxwellResidualReport gen_maxwell_residual_field(const PlaneWaveField& cal_e,
                                                    std::span<const SpacetimePoint> samples);
GenMaxwellResidualReport residual_gen_maxwell(const SolutionSpec& spec,
                                              std::span<const SpacetimePoint> samples);

// Gradient-like sources carried by the scalar pair: (j_e, rho_e, j_mag, rho_mag).
struct GradientSources {
  Eigen::Vector3d j_e, j_mag;
  double rho_e = 0.0, rho_mag = 0.0;
};
GradientSources gradient_sources(const PlaneWaveField& cal_e, double t, const Eigen::Vector3d& x);

// Rank-4 alternating symbol with eps_{0123} = +1.
class LeviCivita4 {
 public:
  static const LeviCivita4& instance();
  int operator()(int mu, int nu, int rho, int sigma) const {
    return eps_[((mu * 4 + nu) * 4 + rho) * 4 + sigma];
  }

 private:
  LeviCivita4();
  std::array<int, 256> eps_{};
};

// The complex field tensor built from the vector part of cal_e.
Eigen::Matrix4cd tensor_E(const Eigen::Vector4cd& cal_e);

// Free-field Lagrangian density evaluated at a point from psi and its four
// derivatives; adds the e psibar gamma^mu psi A_mu coupling when A is given.
cplx lagrangian_density(const Eigen::Vector4cd& psi, const std::array<Eigen::Vector4cd, 4>& dpsi,
                        double mass, const std::optional<std::array<double, 4>>& A = std::nullopt,
                        double charge_e = 1.0);

// Line-oriented text format: "mass <v>", "kind <SF|DIRAC|GENMAXWELL>", then
// one "branch kx ky kz re(amp) im(amp)" line per mode.
std::string spec_to_text(const SolutionSpec& spec);
SolutionSpec spec_from_text(const std::string& text);

}  // namespace relwave
