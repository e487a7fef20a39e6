#pragma once

// The n = 3 closed-form family phi_mumax[alpha]: coefficient functions
// eta_i(alpha), xi_i, the matrix Lambda = mu_max Lambda0 + Lambda1, and the
// recovery of the classic Choi map.
//
// Conventions, fixed by cross-checking against the composed-map formula:
//  * Lambda0 is circulant with first row (eta_1, eta_2, eta_3); Lambda1 has
//    constant rows xi_i. Column sums of Lambda are 1 (Lambda^T stochastic).
//  * The map acts by e_ii -> sum_j Lambda_ji e_jj and e_ij -> -mu_max e_ij,
//    i.e. the action matrix on the diagonal is Lambda^T. This is the unique
//    trace-preserving reading and agrees entrywise with compose() using the
//    plane rotation family_rotation(alpha) at the same alpha.
//  * choi_angle() = -pi/3 is the angle whose Lambda matrix equals the printed
//    Lambda_Choi; the classic Choi map itself is the family member at
//    -choi_angle() = +pi/3 (the two are transpose partners).

#include "ballmaps/hermitian.hpp"
#include "ballmaps/maps.hpp"

#include <array>

namespace ballmaps {

inline constexpr double kPi = 3.14159265358979323846;

/// Angle at which lambda_matrix(I/3, angle) equals the classic circulant
/// coefficient matrix 1/2 [[1,1,0],[0,1,1],[1,0,1]] entrywise.
inline double choi_angle() { return -kPi / 3.0; }

inline std::array<double, 3> eta(double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  const double r3 = std::sqrt(3.0);
  return {(2.0 / 3.0) * c, -(c + r3 * s) / 3.0, (-c + r3 * s) / 3.0};
}

inline void require_qutrit(const SpectralState& state, const char* where) {
  if (state.dim != 3)
    throw std::invalid_argument(std::string(where) +
                                ": the closed-form family requires n = 3");
}

inline std::array<double, 3> xi(const SpectralState& state, double alpha) {
  require_qutrit(state, "xi");
  const auto e = eta(alpha);
  const double l1 = state.lambda(0);
  const double l2 = state.lambda(1);
  const double l3 = state.lambda_n;
  const double m = mu_max(state);
  return {l1 + l3 / 3.0 - m * (l1 * e[0] + l2 * e[1]),
          l2 + l3 / 3.0 - m * (l1 * e[2] + l2 * e[0]),
          l3 / 3.0 - m * (l1 * e[1] + l2 * e[2])};
}

/// Universal circulant part, a function of alpha alone.
inline Eigen::Matrix3d lambda0(double alpha) {
  const auto e = eta(alpha);
  Eigen::Matrix3d l;
  l << e[0], e[1], e[2],
       e[2], e[0], e[1],
       e[1], e[2], e[0];
  return l;
}

inline Eigen::Matrix3d lambda_matrix(const SpectralState& state, double alpha) {
  require_qutrit(state, "lambda_matrix");
  const auto x = xi(state, alpha);
  Eigen::Matrix3d l1;
  l1 << x[0], x[0], x[0],
        x[1], x[1], x[1],
        x[2], x[2], x[2];
  return mu_max(state) * lambda0(alpha) + l1;
}

inline Eigen::Matrix3d lambda_choi() {
  Eigen::Matrix3d l;
  l << 1, 1, 0,
       0, 1, 1,
       1, 0, 1;
  return 0.5 * l;
}

// ---------------------------------------------------------------------------
// ChoiFamilyMap: closed-form evaluation in the eigenbasis of the state.
// ---------------------------------------------------------------------------

class ChoiFamilyMap {
 public:
  SpectralState state;
  double alpha = 0.0;
  double mu = 0.0;  // mu_max of the state
  std::array<double, 3> eta_coeff{};
  std::array<double, 3> xi_coeff{};
  Eigen::Matrix3d lambda;

  Matrix apply(const Matrix& a) const {
    if (a.rows() != 3 || a.cols() != 3)
      throw std::invalid_argument("ChoiFamilyMap: dimension mismatch");
    const Matrix& u = state.eigenvectors;
    const Matrix at = u.adjoint() * a * u;  // eigenbasis components
    Matrix out = -mu * at;
    // e_ii -> sum_j Lambda_ji e_jj, extended complex-linearly
    const Eigen::Vector3cd nd = lambda.cast<Complex>() * at.diagonal();
    for (int i = 0; i < 3; ++i) out(i, i) = nd(i);
    return u * out * u.adjoint();
  }

  LinearMap as_linear_map() const {
    return LinearMap{3, [m = *this](const Matrix& a) { return m.apply(a); }};
  }
};

inline ChoiFamilyMap family_map(const SpectralState& state, double alpha) {
  require_qutrit(state, "family_map");
  return {state, alpha, mu_max(state), eta(alpha), xi(state, alpha),
          lambda_matrix(state, alpha)};
}

/// The fixed classic Choi map: e_ii -> sum_j LambdaChoi_ij e_jj in the
/// computational basis, e_ij -> -1/2 e_ij. Coincides with the family member
/// at alpha = -choi_angle() for the maximally mixed state, with the
/// coefficients pinned to their exact rational values.
inline ChoiFamilyMap classic_choi() {
  return {SpectralState::maximally_mixed(3),
          -choi_angle(),
          0.5,
          {1.0 / 3.0, -2.0 / 3.0, 1.0 / 3.0},
          {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
          // apply() multiplies the diagonal by this matrix, realizing the
          // action matrix LambdaChoi.
          lambda_choi().transpose()};
}

/// The O(8) element of the family in the canonical Gell-Mann ordering
/// (d1, d2, u12, u13, u23, v12, v13, v23): a rotation by alpha in the
/// (d1, d2) plane and a sign flip of every off-diagonal coordinate.
inline AffineMap family_rotation(double alpha) {
  RealMatrix t = -RealMatrix::Identity(8, 8);
  t(0, 0) = std::cos(alpha);
  t(0, 1) = -std::sin(alpha);
  t(1, 0) = std::sin(alpha);
  t(1, 1) = std::cos(alpha);
  return AffineMap::validated(t, RealVector::Zero(8), /*samples=*/256);
}

}  // namespace ballmaps
