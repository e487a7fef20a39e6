#pragma once

// Positive trace-preserving maps built from the ball geometry:
//   phi_mu(a) = mu a + (1-mu) rho tr a, positive whenever |mu| <= mu_max,
// and the composition with affine self-maps (T, t) of the unit ball acting on
// the shifted Bloch coordinates:
//   phi_mu[T,t](a) = rho tr a + <f, T(a' - x tr a) + r_max t tr a>,
// the unique linear extension of the action on states.

#include "ballmaps/ball.hpp"
#include "ballmaps/hermitian.hpp"
#include "ballmaps/random.hpp"

namespace ballmaps {

/// phi_mu(a) = mu a + (1 - mu) rho tr a. Complex-linear, trace preserving,
/// leaves rho fixed.
inline Matrix phi_mu(const SpectralState& state, double mu, const Matrix& a) {
  if (a.rows() != state.dim || a.cols() != state.dim)
    throw std::invalid_argument("phi_mu: dimension mismatch");
  return mu * a + (1.0 - mu) * a.trace() * state.rho;
}

/// mu_max = r_max / sqrt(1 + lambda_1^2 + ... + lambda_{n-1}^2 - lambda_n^2/n).
inline double mu_max(const SpectralState& state) {
  const double denom = std::sqrt(1.0 + state.lambda.squaredNorm() -
                                 state.lambda_n * state.lambda_n / state.dim);
  return r_max(state) / denom;
}

// ---------------------------------------------------------------------------
// AffineMap: (T, t) with T x + t mapping the closed unit ball into itself.
// ---------------------------------------------------------------------------

class AffineMap {
 public:
  RealMatrix T;
  RealVector t;

  int dim() const { return static_cast<int>(t.size()); }

  RealVector operator()(const RealVector& x) const { return T * x + t; }

  static AffineMap identity(int m) {
    return AffineMap(RealMatrix::Identity(m, m), RealVector::Zero(m));
  }

  /// General constructor with a sampled unit-ball-preservation check:
  /// ||T x + t|| <= 1 + tol over `samples` unit vectors x (the maximum of a
  /// convex function over the ball is attained on the sphere).
  static AffineMap validated(const RealMatrix& T, const RealVector& t,
                             int samples = 10'000, double tol = kEigenTol,
                             std::uint64_t seed = 0x41464643u) {
    if (T.rows() != T.cols() || T.rows() != t.size())
      throw std::invalid_argument("AffineMap: shape mismatch");
    const int m = static_cast<int>(t.size());
    Rng rng(seed);
    for (int k = 0; k < samples; ++k) {
      const RealVector x = random_real_unit(m, rng);
      if ((T * x + t).norm() > 1.0 + tol)
        throw std::invalid_argument(
            "AffineMap: map does not preserve the unit ball");
    }
    return AffineMap(T, t);
  }

  /// Extremal element of Aff_m: T = R1 diag(s,...,s, s k) R2, t = R1 c with
  /// s = sqrt(1 - d^2 (1 - k^2)) and c = (0,...,0, d (1 - k^2)).
  /// Ball preservation holds analytically, no sampling needed.
  static AffineMap extremal(int m, const RealMatrix& r1, const RealMatrix& r2,
                            double kappa, double delta,
                            double orth_tol = kEigenTol) {
    if (m < 1) throw std::invalid_argument("AffineMap: dim must be >= 1");
    if (kappa < 0.0 || kappa > 1.0)
      throw std::invalid_argument("AffineMap: kappa must lie in [0, 1]");
    if (delta <= 0.0 || delta > 1.0)
      throw std::invalid_argument("AffineMap: delta must lie in (0, 1]");
    require_orthogonal(r1, m, orth_tol);
    require_orthogonal(r2, m, orth_tol);
    const double s = std::sqrt(1.0 - delta * delta * (1.0 - kappa * kappa));
    RealVector diag = RealVector::Constant(m, s);
    diag(m - 1) = s * kappa;
    RealVector c = RealVector::Zero(m);
    c(m - 1) = delta * (1.0 - kappa * kappa);
    return AffineMap(r1 * diag.asDiagonal() * r2, r1 * c);
  }

 private:
  AffineMap(RealMatrix T_, RealVector t_) : T(std::move(T_)), t(std::move(t_)) {}

  static void require_orthogonal(const RealMatrix& r, int m, double tol) {
    if (r.rows() != m || r.cols() != m)
      throw std::invalid_argument("AffineMap: rotation shape mismatch");
    const double dev =
        (r.transpose() * r - RealMatrix::Identity(m, m)).cwiseAbs().maxCoeff();
    if (dev > tol)
      throw std::invalid_argument("AffineMap: matrix is not orthogonal");
  }
};

// ---------------------------------------------------------------------------
// BallMap: the composed map phi_mu[T, t].
// ---------------------------------------------------------------------------

class BallMap {
 public:
  SpectralState state;
  GellMannBasis basis;
  AffineMap affine;
  double mu = 0.0;
  double mu_max_value = 0.0;
  double r_max_value = 0.0;
  RealVector x_tilde;  // Bloch coordinates of rho
  bool certified_positive = false;

  static BallMap compose(const SpectralState& state, double mu,
                         AffineMap affine) {
    const int m = state.dim * state.dim - 1;
    if (affine.dim() != m)
      throw std::invalid_argument(
          "BallMap: affine part must act on n^2-1 coordinates");
    BallMap bm{state, GellMannBasis::adapted(state), std::move(affine)};
    bm.mu = mu;
    bm.mu_max_value = ballmaps::mu_max(state);
    bm.r_max_value = ballmaps::r_max(state);
    bm.x_tilde = to_bloch(state.rho, bm.basis).coords;
    bm.certified_positive = std::abs(mu) <= bm.mu_max_value * (1.0 + 1e-12);
    return bm;
  }

  /// phi_mu with no affine part.
  static BallMap plain(const SpectralState& state, double mu) {
    return compose(state, mu, AffineMap::identity(state.dim * state.dim - 1));
  }

  Matrix apply_hermitian(const Matrix& a) const {
    const double tra = a.trace().real();
    const Matrix ap = phi_mu(state, mu, a);
    const RealVector coords = to_bloch(ap, basis).coords;
    const RealVector mapped =
        affine.T * (coords - x_tilde * tra) + (r_max_value * tra) * affine.t;
    return tra * state.rho + from_coords(mapped, basis);
  }

  /// Extension to all of M_n(C) by complex linearity, splitting
  /// a = a1 + i a2 with Hermitian a1, a2.
  Matrix apply(const Matrix& a) const {
    if (a.rows() != state.dim || a.cols() != state.dim)
      throw std::invalid_argument("BallMap: dimension mismatch");
    const Matrix a1 = 0.5 * (a + a.adjoint());
    const Matrix a2 = Complex(0, -0.5) * (a - a.adjoint());
    return apply_hermitian(a1) + Complex(0, 1) * apply_hermitian(a2);
  }

  LinearMap as_linear_map() const {
    return LinearMap{state.dim, [m = *this](const Matrix& a) { return m.apply(a); }};
  }

 private:
  BallMap(SpectralState s, GellMannBasis b, AffineMap a)
      : state(std::move(s)), basis(std::move(b)), affine(std::move(a)) {}
};

}  // namespace ballmaps
