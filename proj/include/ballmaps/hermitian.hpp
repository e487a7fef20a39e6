#pragma once

// Core of the real Hilbert space H_n of n x n Hermitian matrices:
// Hilbert-Schmidt scalar product, spectral decomposition of faithful states,
// generalized Gell-Mann bases adapted to an eigenbasis, and Bloch coordinates.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ballmaps {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Centralized default tolerances. Callers may override per call where a
// function takes an explicit tolerance parameter.
inline constexpr double kHermitianTol = 1e-12;    // builder symmetrization guard
inline constexpr double kEigenTol = 1e-10;        // eigenvalue-based decisions
inline constexpr double kCertificateTol = 1e-8;   // sampled certificates
inline constexpr double kFaithfulTol = 1e-14;     // strict positivity of spectra
inline constexpr double kIdentityTol = 1e-12;     // closed-form identities

inline bool is_hermitian(const Matrix& a, double tol = kHermitianTol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

/// Symmetrize (a + a')/2 after checking the deviation stays within `tol`.
/// Larger deviation is an error, not a silent repair.
inline Matrix make_hermitian(const Matrix& a, double tol = kHermitianTol) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("make_hermitian: matrix is not square");
  const double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol)
    throw std::invalid_argument("make_hermitian: deviation from Hermiticity " +
                                std::to_string(dev) + " exceeds tolerance");
  return 0.5 * (a + a.adjoint());
}

/// Hilbert-Schmidt scalar product tr(ab), real for Hermitian a, b.
inline double hs_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("hs_inner: dimension mismatch");
  return (a * b).trace().real();
}

inline double hs_norm(const Matrix& a) {
  return std::sqrt(std::max(0.0, hs_inner(a, a)));
}

/// Kronecker product, row-major block convention: (A (x) B)[(i,k),(j,l)] = A_ij B_kl.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// A linear map on M_n(C), type-erased so maps from different constructions
/// (ball maps, closed-form families, transposition, ...) share one interface.
struct LinearMap {
  int dim = 0;
  std::function<Matrix(const Matrix&)> op;

  Matrix operator()(const Matrix& a) const { return op(a); }
};

// ---------------------------------------------------------------------------
// SpectralState: a faithful density matrix with ordered spectral data and the
// shifted weights lambda_i = tlambda_i - tlambda_n (i < n), lambda_n = n tlambda_n.
// ---------------------------------------------------------------------------

class SpectralState {
 public:
  int dim = 0;
  Matrix rho;                      // symmetrized density matrix
  RealVector lambda_tilde;         // eigenvalues, descending
  Matrix eigenvectors;             // columns u_i, same order
  std::vector<Matrix> projectors;  // rank-1 P_i = u_i u_i^dagger
  RealVector lambda;               // shifted weights, length n-1
  double lambda_n = 0.0;           // n * tlambda_n

  static SpectralState from_density(const Matrix& rho_in,
                                    double faithful_tol = kFaithfulTol) {
    const Matrix h = make_hermitian(rho_in);
    if (std::abs(h.trace().real() - 1.0) > kEigenTol)
      throw std::invalid_argument("SpectralState: trace is not 1");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("SpectralState: eigendecomposition failed");
    const int n = static_cast<int>(h.rows());
    RealVector w(n);
    Matrix u(n, n);
    for (int i = 0; i < n; ++i) {  // ascending -> descending
      w(i) = es.eigenvalues()(n - 1 - i);
      u.col(i) = es.eigenvectors().col(n - 1 - i);
    }
    return from_spectrum(w, u, faithful_tol);
  }

  /// Build directly from a descending spectrum and an orthonormal eigenbasis
  /// (columns of `u`). Used where the eigenbasis is prescribed, e.g. diagonal
  /// states in the computational basis.
  static SpectralState from_spectrum(const RealVector& lambda_tilde_desc,
                                     const Matrix& u,
                                     double faithful_tol = kFaithfulTol) {
    const int n = static_cast<int>(lambda_tilde_desc.size());
    if (n < 2) throw std::invalid_argument("SpectralState: dim must be >= 2");
    if (u.rows() != n || u.cols() != n)
      throw std::invalid_argument("SpectralState: eigenbasis shape mismatch");
    for (int i = 0; i + 1 < n; ++i)
      if (lambda_tilde_desc(i) < lambda_tilde_desc(i + 1) - 1e-15)
        throw std::invalid_argument("SpectralState: spectrum not descending");
    if (lambda_tilde_desc(n - 1) <= faithful_tol)
      throw std::invalid_argument(
          "SpectralState: state is not faithful (smallest eigenvalue <= " +
          std::to_string(faithful_tol) + ")");
    if (std::abs(lambda_tilde_desc.sum() - 1.0) > kEigenTol)
      throw std::invalid_argument("SpectralState: eigenvalues do not sum to 1");

    SpectralState s;
    s.dim = n;
    s.lambda_tilde = lambda_tilde_desc;
    s.eigenvectors = u;
    s.projectors.reserve(n);
    for (int i = 0; i < n; ++i)
      s.projectors.push_back(u.col(i) * u.col(i).adjoint());
    s.rho = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) s.rho += lambda_tilde_desc(i) * s.projectors[i];
    s.lambda = RealVector(n - 1);
    for (int i = 0; i < n - 1; ++i)
      s.lambda(i) = lambda_tilde_desc(i) - lambda_tilde_desc(n - 1);
    s.lambda_n = n * lambda_tilde_desc(n - 1);
    return s;
  }

  static SpectralState maximally_mixed(int n) {
    return from_spectrum(RealVector::Constant(n, 1.0 / n),
                         Matrix::Identity(n, n));
  }
};

// ---------------------------------------------------------------------------
// GellMannBasis: traceless orthonormal generators (d_l, u_ij, v_ij) adapted to
// an eigenbasis, completed by f_{n^2} = I/sqrt(n). Fixed canonical ordering:
// d_1..d_{n-1}, then u_ij, then v_ij, each pair lexicographic in (i, j).
// ---------------------------------------------------------------------------

class GellMannBasis {
 public:
  int dim = 0;
  std::vector<Matrix> f;  // n^2 - 1 elements

  int size() const { return dim * dim - 1; }

  // 0-based positions; d uses l in 1..n-1, pair indices are 0-based i < j.
  int d_index(int l) const { return l - 1; }
  int u_index(int i, int j) const { return dim - 1 + pair_offset(i, j); }
  int v_index(int i, int j) const {
    return dim - 1 + dim * (dim - 1) / 2 + pair_offset(i, j);
  }

  /// Basis in the computational basis (standard generalized Gell-Mann set).
  static GellMannBasis standard(int n) {
    if (n < 2) throw std::invalid_argument("GellMannBasis: dim must be >= 2");
    GellMannBasis b;
    b.dim = n;
    b.f.reserve(n * n - 1);
    for (int l = 1; l < n; ++l) {  // Cartan subalgebra
      Matrix d = Matrix::Zero(n, n);
      for (int k = 0; k < l; ++k) d(k, k) = 1.0;
      d(l, l) = -static_cast<double>(l);
      b.f.push_back(d / std::sqrt(static_cast<double>(l) * (l + 1)));
    }
    const double s = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Matrix u = Matrix::Zero(n, n);
        u(i, j) = s;
        u(j, i) = s;
        b.f.push_back(u);
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Matrix v = Matrix::Zero(n, n);
        v(i, j) = Complex(0, -s);
        v(j, i) = Complex(0, s);
        b.f.push_back(v);
      }
    return b;
  }

  /// Basis adapted to the eigenbasis of `state`: f_alpha = U g_alpha U^dagger.
  static GellMannBasis adapted(const SpectralState& state) {
    GellMannBasis b = standard(state.dim);
    const Matrix& u = state.eigenvectors;
    for (Matrix& g : b.f) g = u * g * u.adjoint();
    return b;
  }

 private:
  int pair_offset(int i, int j) const {
    if (!(0 <= i && i < j && j < dim))
      throw std::invalid_argument("GellMannBasis: bad pair index");
    return i * dim - i * (i + 1) / 2 + (j - i - 1);
  }
};

// ---------------------------------------------------------------------------
// Bloch coordinates: a = I/n tr a + sum_alpha coords_alpha f_alpha.
// ---------------------------------------------------------------------------

struct BlochVector {
  double trace_part = 0.0;
  RealVector coords;
};

inline BlochVector to_bloch(const Matrix& a, const GellMannBasis& basis) {
  if (a.rows() != basis.dim || a.cols() != basis.dim)
    throw std::invalid_argument("to_bloch: dimension mismatch");
  BlochVector v;
  v.trace_part = a.trace().real();
  v.coords = RealVector(basis.size());
  for (int alpha = 0; alpha < basis.size(); ++alpha)
    v.coords(alpha) = (basis.f[alpha] * a).trace().real();
  return v;
}

/// Expand traceless coordinates only: sum_alpha c_alpha f_alpha.
inline Matrix from_coords(const RealVector& coords, const GellMannBasis& basis) {
  if (coords.size() != basis.size())
    throw std::invalid_argument("from_coords: dimension mismatch");
  Matrix out = Matrix::Zero(basis.dim, basis.dim);
  for (int alpha = 0; alpha < basis.size(); ++alpha)
    out += Complex(coords(alpha), 0.0) * basis.f[alpha];
  return out;
}

inline Matrix from_bloch(const BlochVector& v, const GellMannBasis& basis) {
  Matrix out = from_coords(v.coords, basis);
  out += (v.trace_part / basis.dim) * Matrix::Identity(basis.dim, basis.dim);
  return out;
}

}  // namespace ballmaps
