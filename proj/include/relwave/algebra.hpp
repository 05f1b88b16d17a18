#pragma once

// Concrete matrix representations: Pauli matrices, the standard Pauli-Dirac
// gammas, the chirality matrix, spin-1 generators, and the
// particle-antiparticle doublet spin operators, together with the identity
// checks stated about them (Clifford anticommutators, hermiticity pattern,
// Klein-Gordon factorization, massless-equation invariance of the eight
// Pauli-Gursey-Ibragimov operators).

#include "relwave/linalg.hpp"
#include "relwave/rng.hpp"

#include <array>
#include <string>

namespace relwave {

std::array<cmat, 3> pauli_matrices();

struct GammaSet {
  std::array<cmat, 4> gamma;
  std::array<double, 4> metric{1.0, -1.0, -1.0, -1.0};
};

GammaSet gamma_standard();

// Chirality matrix i g0 g1 g2 g3. The suite pins this choice: it is the one
// for which all eight PGI operators commute with the massless equation.
cmat gamma4(const GammaSet& gs = gamma_standard());

struct GammaIdentityReport {
  double anticommutator = 0.0;   // max_{mu,nu} |{g_mu, g_nu} - 2 g^{mu nu} I|_F
  double hermiticity_time = 0.0; // |g0^dagger - s0 g0|_F
  double hermiticity_space = 0.0;// max_k |gk^dagger - sk gk|_F
  double max_residual() const;
};

// The hermiticity pattern gives the expected sign s_mu in g_mu^dagger = s_mu g_mu;
// the standard representation has (+1, -1, -1, -1).
inline constexpr std::array<int, 4> kStandardHermiticity = {+1, -1, -1, -1};

GammaIdentityReport verify_gamma_set(const GammaSet& gs,
                                     const std::array<int, 4>& hermiticity = kStandardHermiticity);
// Same checks for conjugation-valued sets (products taken with rl_compose).
GammaIdentityReport verify_gamma_set(const std::array<RealLinearOperator, 4>& gs,
                                     const std::array<double, 4>& metric = {1.0, -1.0, -1.0, -1.0},
                                     const std::array<int, 4>& hermiticity = kStandardHermiticity);

// |(g.p + m)(g.p - m) - (p.p - m^2) I|_F for contravariant p; vanishes for
// every p and m.
double kg_factorization_residual(const std::array<double, 4>& p, double m);

std::array<cmat, 3> spin1_generators();

struct DoubletSpinSet {
  cmat g;                                 // charge-sign operator, -g0
  std::array<RealLinearOperator, 3> s;    // RCQM doublet spin, lower block -C sigma C
  std::array<cmat, 3> s_fw;               // FW spin, diag(sigma, sigma)/2
  RealLinearOperator v;                   // diag(1, 1, C, C), v = v^-1
};

DoubletSpinSet doublet_spin_set();

// Residual of the conjugation link between the two spins. The link holds for
// the anti-Hermitian forms, i.e. v (i s_fw) v = i s.
double doublet_v_link_residual(const DoubletSpinSet& ds);

// {g2 C, i g2 C, g2 g4 C, i g2 g4 C, g4, i g4, i, I}; the first four antilinear.
std::array<RealLinearOperator, 8> pgi_operators(const GammaSet& gs);
// Same set with an explicit chirality candidate; used by the negative control
// that pins the gamma4 choice.
std::array<RealLinearOperator, 8> pgi_operators(const GammaSet& gs, const cmat& g4);
const std::array<std::string, 8>& pgi_operator_names();

struct PgiInvarianceReport {
  std::array<double, 8> max_residual{};  // relative massless equation residual per operator
  double worst() const;
};

// Applies each operator pointwise to `trials` random massless plane-wave
// solutions and reports the worst massless equation residual per operator.
PgiInvarianceReport pgi_invariance_check(const std::array<RealLinearOperator, 8>& ops,
                                         int trials, int modes_per_trial, Rng& rng);

}  // namespace relwave
