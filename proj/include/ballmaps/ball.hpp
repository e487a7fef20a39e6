#pragma once

// Ball geometry of the state simplex: the largest Hilbert-Schmidt ball
// around a faithful state that stays inside the simplex of its
// eigenprojectors, its radius r_max = lambda_n / sqrt(n(n-1)), and the
// tangency point on the face carrying the smallest eigenvalue.

#include "ballmaps/hermitian.hpp"
#include "ballmaps/random.hpp"

namespace ballmaps {

/// r_max = lambda_n / sqrt(n (n-1)).
inline double r_max(const SpectralState& state) {
  const int n = state.dim;
  return state.lambda_n / std::sqrt(static_cast<double>(n) * (n - 1));
}

/// Tangency point on face F_n: alpha*_i = lambda_i + lambda_n / (n-1).
inline RealVector tangency_point(const SpectralState& state) {
  return state.lambda.array() + state.lambda_n / (state.dim - 1);
}

/// Squared distance from the state to the face point rho_alpha:
/// D(alpha) = sum_i (alpha_i - lambda_i)^2 - lambda_n^2 / n.
inline double face_distance(const SpectralState& state, const RealVector& alpha,
                            double tol = kIdentityTol) {
  const int n = state.dim;
  if (alpha.size() != n - 1)
    throw std::invalid_argument("face_distance: alpha must have length n-1");
  if (alpha.minCoeff() < -tol || std::abs(alpha.sum() - 1.0) > tol)
    throw std::invalid_argument("face_distance: alpha is not on the simplex");
  return (alpha - state.lambda).squaredNorm() -
         state.lambda_n * state.lambda_n / n;
}

/// Membership in the Hilbert-Schmidt ball B(rho, r).
inline bool ball_contains(const SpectralState& state, double r, const Matrix& x,
                          double tol = kIdentityTol) {
  if (x.rows() != state.dim || x.cols() != state.dim)
    throw std::invalid_argument("ball_contains: dimension mismatch");
  return hs_norm(state.rho - x) <= r + tol;
}

/// Numerical membership in the set of states: PSD up to tol and unit trace.
inline bool in_simplex_psd(const Matrix& x, double tol = kEigenTol) {
  const Matrix h = make_hermitian(x);
  if (std::abs(h.trace().real() - 1.0) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0) >= -tol;
}

struct SimplexBall {
  SpectralState state;
  double radius = 0.0;
  RealVector tangency;
};

inline SimplexBall simplex_ball(const SpectralState& state) {
  return {state, r_max(state), tangency_point(state)};
}

/// Uniform sample from B(rho, r) within the trace-1 hyperplane: Gaussian
/// direction over the full traceless coordinate space, radius r u^{1/(n^2-1)}.
inline Matrix sample_in_ball(const SpectralState& state,
                             const GellMannBasis& basis, double r, Rng& rng) {
  const int m = basis.size();
  const RealVector dir = random_real_unit(m, rng);
  const double radius = r * std::pow(rng.uniform(), 1.0 / m);
  return state.rho + from_coords(radius * dir, basis);
}

/// Same, restricted to the diagonal section span{P_i} of dimension n-1
/// (the d_l coordinates); these points land in the affine hull of the simplex.
inline Matrix sample_in_ball_diagonal(const SpectralState& state,
                                      const GellMannBasis& basis, double r,
                                      Rng& rng) {
  const int n = state.dim;
  const RealVector dir = random_real_unit(n - 1, rng);
  const double radius = r * std::pow(rng.uniform(), 1.0 / (n - 1));
  RealVector coords = RealVector::Zero(basis.size());
  coords.head(n - 1) = radius * dir;
  return state.rho + from_coords(coords, basis);
}

/// Barycentric coordinates of a diagonal-section point w.r.t. the projectors:
/// p_i = <u_i| x |u_i>. Membership in the simplex means all p_i >= 0 (and the
/// off-diagonal part vanishes, which holds by construction for
/// sample_in_ball_diagonal points).
inline RealVector simplex_coordinates(const SpectralState& state,
                                      const Matrix& x) {
  RealVector p(state.dim);
  for (int i = 0; i < state.dim; ++i)
    p(i) = hs_inner(state.projectors[i], x);
  return p;
}

}  // namespace ballmaps
