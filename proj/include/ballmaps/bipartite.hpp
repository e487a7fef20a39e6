#pragma once

// Bipartite helpers shared by the witness and verification modules.
// Convention: subsystem A is the slow (block) index, so a bipartite operator
// on C^nA (x) C^nB is an (nA*nB) x (nA*nB) matrix of nA x nA blocks of size nB.

#include "ballmaps/hermitian.hpp"

namespace ballmaps {

/// Matrix unit e_ij = |i><j| (0-based indices).
inline Matrix matrix_unit(int n, int i, int j) {
  Matrix e = Matrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

/// Projector onto the maximally entangled vector sum_i |ii> / sqrt(n).
inline Matrix maximally_entangled(int n) {
  Matrix p = Matrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(i * n + i, j * n + j) = 1.0 / n;
  return p;
}

/// Choi matrix (id (x) phi)(sum_ij e_ij (x) e_ij) = sum_ij e_ij (x) phi(e_ij),
/// the unnormalized convention: equals n * (id (x) phi) P+_n.
inline Matrix choi_matrix(const LinearMap& phi, int n) {
  Matrix c(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c.block(i * n, j * n, n, n) = phi(matrix_unit(n, i, j));
  return c;
}

/// Partial transpose on subsystem B.
inline Matrix partial_transpose(const Matrix& m, int dim_a, int dim_b) {
  if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b)
    throw std::invalid_argument("partial_transpose: dimension mismatch");
  Matrix out(m.rows(), m.cols());
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      out.block(i * dim_b, j * dim_b, dim_b, dim_b) =
          m.block(i * dim_b, j * dim_b, dim_b, dim_b).transpose();
  return out;
}

inline double min_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace ballmaps
