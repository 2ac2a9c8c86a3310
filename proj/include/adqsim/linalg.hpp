#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace adqsim {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("linear solve hit a singular matrix") {}
};

// Kronecker product. Composite index convention: i = i_a * dim(b) + i_b, the
// first factor is the slow index. Every basis-index <-> occupation-tuple
// mapping downstream relies on this ordering.
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

inline CVector kron(const CVector& a, const CVector& b) {
  return Eigen::kroneckerProduct(a, b);
}

// Dense LU solve of a*x = rhs. Inputs are untouched and every call factorizes
// from scratch, so concurrent calls are safe.
inline CVector solve(const CMatrix& a, const CVector& rhs) {
  Eigen::PartialPivLU<CMatrix> lu(a);
  CVector x = lu.solve(rhs);
  if (!x.allFinite()) throw SingularMatrix();
  return x;
}

inline bool is_hermitian(const CMatrix& a, double rel_tol = 1e-12) {
  const double scale = a.cwiseAbs().maxCoeff();
  if (scale == 0.0) return true;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

}  // namespace adqsim
