#include "relwave/linalg.hpp"

namespace relwave {

bool all_finite(const cmat& m) {
  return m.allFinite();
}

void require_finite(const cmat& m, const char* what) {
  if (!all_finite(m)) {
    throw std::invalid_argument(std::string(what) + ": non-finite entry");
  }
}

RealLinearOperator::RealLinearOperator(cmat a, cmat b) : A(std::move(a)), B(std::move(b)) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows()) {
    throw std::invalid_argument("RealLinearOperator: parts must be square and of equal dimension");
  }
  require_finite(A, "RealLinearOperator linear part");
  require_finite(B, "RealLinearOperator antilinear part");
}

RealLinearOperator RealLinearOperator::linear(const cmat& a) {
  return {a, cmat::Zero(a.rows(), a.cols())};
}

RealLinearOperator RealLinearOperator::antilinear(const cmat& b) {
  return {cmat::Zero(b.rows(), b.cols()), b};
}

RealLinearOperator RealLinearOperator::identity(Eigen::Index n) {
  return {cmat::Identity(n, n), cmat::Zero(n, n)};
}

RealLinearOperator RealLinearOperator::conjugation(Eigen::Index n) {
  return {cmat::Zero(n, n), cmat::Identity(n, n)};
}

cvec rl_apply(const RealLinearOperator& op, const cvec& x) {
  if (x.size() != op.dim()) {
    throw std::invalid_argument("rl_apply: dimension mismatch");
  }
  return op.A * x + op.B * x.conjugate();
}

RealLinearOperator rl_compose(const RealLinearOperator& first_applied,
                              const RealLinearOperator& second_applied) {
  if (first_applied.dim() != second_applied.dim()) {
    throw std::invalid_argument("rl_compose: dimension mismatch");
  }
  const cmat& A2 = first_applied.A;
  const cmat& B2 = first_applied.B;
  const cmat& A1 = second_applied.A;
  const cmat& B1 = second_applied.B;
  // second(first(x)) = (A1 A2 + B1 conj(B2)) x + (A1 B2 + B1 conj(A2)) conj(x)
  return {A1 * A2 + B1 * B2.conjugate(), A1 * B2 + B1 * A2.conjugate()};
}

RealLinearOperator rl_adjoint(const RealLinearOperator& op) {
  return {op.A.adjoint(), op.B.transpose()};
}

RealLinearOperator operator+(const RealLinearOperator& a, const RealLinearOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("RealLinearOperator +: dimension mismatch");
  return {a.A + b.A, a.B + b.B};
}

RealLinearOperator operator-(const RealLinearOperator& a, const RealLinearOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("RealLinearOperator -: dimension mismatch");
  return {a.A - b.A, a.B - b.B};
}

RealLinearOperator operator*(cplx scale, const RealLinearOperator& op) {
  return {scale * op.A, scale * op.B};
}

double rl_norm(const RealLinearOperator& op) {
  return std::sqrt(op.A.squaredNorm() + op.B.squaredNorm());
}

double rl_distance(const RealLinearOperator& a, const RealLinearOperator& b) {
  return rl_norm(a - b);
}

double rl_unitarity_residual(const RealLinearOperator& op) {
  const auto id = RealLinearOperator::identity(op.dim());
  const double r1 = rl_distance(rl_compose(rl_adjoint(op), op), id);
  const double r2 = rl_distance(rl_compose(op, rl_adjoint(op)), id);
  return std::max(r1, r2);
}

bool rl_is_unitary(const RealLinearOperator& op, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("rl_is_unitary: tolerance must be positive");
  }
  return rl_unitarity_residual(op) <= tol;
}

bool rl_is_unitary(const RealLinearOperator& op) {
  return rl_is_unitary(op, 1e-12 * std::max(1.0, rl_norm(op)));
}

}  // namespace relwave
