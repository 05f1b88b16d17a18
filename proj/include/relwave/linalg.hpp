#pragma once

// Complex linear algebra layer. Matrices and vectors are Eigen types; the
// one domain concept added here is the real-linear operator: a pair (A, B)
// acting as x -> A x + B conj(x). Linear maps have B = 0, antilinear maps
// have A = 0, and the pair closes under composition, which is what lets
// conjugation-mixing operators (U, the tilde gammas, diag(1,1,C,C)) live in
// the same calculus as ordinary matrices.

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace relwave {

using cplx = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;

inline constexpr cplx iu{0.0, 1.0};

bool all_finite(const cmat& m);

// Throws std::invalid_argument if m has a NaN/Inf entry. Every domain-type
// constructor funnels through this so downstream residuals stay meaningful.
void require_finite(const cmat& m, const char* what);

struct RealLinearOperator {
  cmat A;  // linear part
  cmat B;  // antilinear part, applied to conj(x)

  RealLinearOperator(cmat a, cmat b);

  static RealLinearOperator linear(const cmat& a);
  static RealLinearOperator antilinear(const cmat& b);
  static RealLinearOperator identity(Eigen::Index n);
  // C: x -> conj(x), i.e. (A, B) = (0, I)
  static RealLinearOperator conjugation(Eigen::Index n);

  Eigen::Index dim() const { return A.rows(); }
};

cvec rl_apply(const RealLinearOperator& op, const cvec& x);

// Operator whose action is second_applied(first_applied(x)).
RealLinearOperator rl_compose(const RealLinearOperator& first_applied,
                              const RealLinearOperator& second_applied);

// (A, B)^dagger = (A^dagger, B^T); for a pure antilinear M C this is C M^dagger.
RealLinearOperator rl_adjoint(const RealLinearOperator& op);

RealLinearOperator operator+(const RealLinearOperator& a, const RealLinearOperator& b);
RealLinearOperator operator-(const RealLinearOperator& a, const RealLinearOperator& b);
RealLinearOperator operator*(cplx scale, const RealLinearOperator& op);

// Frobenius norm of the pair: sqrt(|A|_F^2 + |B|_F^2).
double rl_norm(const RealLinearOperator& op);
double rl_distance(const RealLinearOperator& a, const RealLinearOperator& b);

// max(|op adj(op) - Id|, |adj(op) op - Id|) <= tol. Throws on tol <= 0.
// The overload without a tolerance uses 1e-12 times the operand norm.
bool rl_is_unitary(const RealLinearOperator& op, double tol);
bool rl_is_unitary(const RealLinearOperator& op);
double rl_unitarity_residual(const RealLinearOperator& op);

}  // namespace relwave
