#pragma once

// Entanglement witnesses W = n (id (x) phi) P+_n from the Choi-Jamiolkowski
// construction, the coefficient structure (a_i, b_i, c_i) of the n = 3 family,
// and state detection Tr(W rho).

#include "ballmaps/bipartite.hpp"
#include "ballmaps/choi.hpp"
#include "ballmaps/hermitian.hpp"

#include <optional>

namespace ballmaps {

struct Witness {
  int dim_a = 0;
  int dim_b = 0;
  Matrix matrix;
  double min_eigenvalue = 0.0;
  std::optional<double> block_positivity_lower_bound;
  std::string source;

  /// Entanglement-witness status: not positive semidefinite, yet nonnegative
  /// on product states as far as the block-positivity scan could tell.
  bool is_entanglement_witness(double eigen_tol = kEigenTol,
                               double block_tol = kCertificateTol) const {
    return min_eigenvalue < -eigen_tol && block_positivity_lower_bound &&
           *block_positivity_lower_bound >= -block_tol;
  }
};

/// W = n (id (x) phi) P+_n = sum_ij e_ij (x) phi(e_ij).
inline Witness from_map(const LinearMap& phi, int n,
                        std::string source = "map") {
  Witness w;
  w.dim_a = n;
  w.dim_b = n;
  w.matrix = make_hermitian(choi_matrix(phi, n), 1e-10);
  w.min_eigenvalue = min_eigenvalue(w.matrix);
  w.source = std::move(source);
  return w;
}

inline Witness family_witness(const SpectralState& state, double alpha) {
  return from_map(family_map(state, alpha).as_linear_map(), 3,
                  "family alpha=" + std::to_string(alpha));
}

struct FamilyCoefficients {
  std::array<double, 3> a{};
  std::array<double, 3> b{};
  std::array<double, 3> c{};
  double mu_max = 0.0;

  /// The three sums a_i + b_{i+1} + c_{i+2} (indices mod 3), each 1/mu_max.
  std::array<double, 3> sums() const {
    std::array<double, 3> s{};
    for (int i = 0; i < 3; ++i) s[i] = a[i] + b[(i + 1) % 3] + c[(i + 2) % 3];
    return s;
  }
};

/// Coefficients read off the assembled witness diagonal: within block i the
/// diagonal carries mu_max * (.., a_i at slot i, b_i at slot i+1, c_i at slot
/// i+2 ..) cyclically.
inline FamilyCoefficients coefficients(const SpectralState& state,
                                       double alpha) {
  require_qutrit(state, "coefficients");
  // Assemble in the eigenbasis frame so the diagonal slots line up with the
  // printed layout regardless of the state's eigenvectors.
  const ChoiFamilyMap phi = family_map(state, alpha);
  const LinearMap eigenframe{3, [phi](const Matrix& a) {
    const Matrix& u = phi.state.eigenvectors;
    return Matrix(u.adjoint() * phi.apply(u * a * u.adjoint()) * u);
  }};
  const Matrix w = choi_matrix(eigenframe, 3);
  FamilyCoefficients fc;
  fc.mu_max = phi.mu;
  for (int i = 0; i < 3; ++i) {
    fc.a[i] = w(3 * i + i, 3 * i + i).real() / fc.mu_max;
    fc.b[i] = w(3 * i + (i + 1) % 3, 3 * i + (i + 1) % 3).real() / fc.mu_max;
    fc.c[i] = w(3 * i + (i + 2) % 3, 3 * i + (i + 2) % 3).real() / fc.mu_max;
  }
  return fc;
}

/// Tr(W rho); a negative value certifies entanglement when W has witness
/// status. Validates that rho is a state of the right dimension.
inline double detect(const Witness& w, const Matrix& rho,
                     double tol = kEigenTol) {
  if (rho.rows() != w.dim_a * w.dim_b || rho.cols() != rho.rows())
    throw std::invalid_argument("detect: dimension mismatch");
  const Matrix h = make_hermitian(rho);
  if (std::abs(h.trace().real() - 1.0) > tol)
    throw std::invalid_argument("detect: rho is not trace one");
  if (min_eigenvalue(h) < -tol)
    throw std::invalid_argument("detect: rho is not positive semidefinite");
  return (w.matrix * h).trace().real();
}

/// The 3x3 block [[a1,-1,-1],[-1,a2,-1],[-1,-1,a3]] controlling positivity of
/// the family witness, and whether it has a negative eigenvalue (equivalently
/// whether W[alpha] is a true witness).
inline std::pair<Eigen::Matrix3d, bool> negativity_submatrix(
    const SpectralState& state, double alpha, double tol = kEigenTol) {
  const FamilyCoefficients fc = coefficients(state, alpha);
  Eigen::Matrix3d m;
  m << fc.a[0], -1, -1,
       -1, fc.a[1], -1,
       -1, -1, fc.a[2];
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m, Eigen::EigenvaluesOnly);
  return {m, es.eigenvalues()(0) < -tol};
}

}  // namespace ballmaps
