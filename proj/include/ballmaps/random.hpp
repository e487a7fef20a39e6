#pragma once

// Seeded samplers for verification: Haar pure states, Hilbert-Schmidt random
// densities, separable mixtures, Haar orthogonal matrices. All randomness
// flows through Rng so results are reproducible from an explicit seed and
// independent of the standard library's distribution implementations.

#include "ballmaps/bipartite.hpp"
#include "ballmaps/hermitian.hpp"

#include <cstdint>
#include <random>

namespace ballmaps {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (one spare cached per pair).
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  Complex cgaussian() { return {gaussian(), gaussian()}; }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-random unit vector in C^n.
inline ComplexVector random_unit_vector(int n, Rng& rng) {
  ComplexVector v(n);
  double norm2 = 0.0;
  do {
    for (int i = 0; i < n; ++i) v(i) = rng.cgaussian();
    norm2 = v.squaredNorm();
  } while (norm2 < 1e-30);
  return v / std::sqrt(norm2);
}

/// Rank-1 projector onto a Haar-random pure state.
inline Matrix random_pure(int n, Rng& rng) {
  const ComplexVector v = random_unit_vector(n, rng);
  return v * v.adjoint();
}

inline Matrix random_pure(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(n, rng);
}

/// Hilbert-Schmidt random density matrix G G^dagger / tr(G G^dagger).
inline Matrix random_density(int n, Rng& rng) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.cgaussian();
  Matrix r = g * g.adjoint();
  return r / r.trace().real();
}

inline Matrix random_density(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(n, rng);
}

/// GUE-style random Hermitian matrix (G + G^dagger)/2, for round-trip tests.
inline Matrix random_hermitian(int n, Rng& rng) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.cgaussian();
  return 0.5 * (g + g.adjoint());
}

/// Uniform point on the simplex {w_i >= 0, sum w = 1} (Dirichlet(1,...,1)).
inline RealVector dirichlet_uniform(int k, Rng& rng) {
  RealVector w(k);
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    w(i) = -std::log(1.0 - rng.uniform());
    total += w(i);
  }
  return w / total;
}

/// Uniform convex mixture of `terms` product pure states.
inline Matrix random_separable(int na, int nb, int terms, std::uint64_t seed) {
  if (na < 2 || nb < 2 || terms < 1)
    throw std::invalid_argument("random_separable: bad arguments");
  Rng rng(seed);
  const RealVector w = dirichlet_uniform(terms, rng);
  Matrix rho = Matrix::Zero(na * nb, na * nb);
  for (int k = 0; k < terms; ++k) {
    const Matrix pa = random_pure(na, rng);
    const Matrix pb = random_pure(nb, rng);
    rho += Complex(w(k), 0.0) * kron(pa, pb);
  }
  return rho;
}

/// Unit vector in R^m, uniform on the sphere.
inline RealVector random_real_unit(int m, Rng& rng) {
  RealVector v(m);
  double norm2 = 0.0;
  do {
    for (int i = 0; i < m; ++i) v(i) = rng.gaussian();
    norm2 = v.squaredNorm();
  } while (norm2 < 1e-30);
  return v / std::sqrt(norm2);
}

/// Haar-random orthogonal matrix: QR of a Gaussian matrix with the R diagonal
/// sign fixed, deterministic by seed.
inline RealMatrix random_orthogonal(int m, Rng& rng) {
  RealMatrix g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = rng.gaussian();
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  const RealMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < m; ++i)
    if (r(i, i) < 0.0) q.col(i) = -q.col(i);
  return q;
}

inline RealMatrix random_orthogonal(int m, std::uint64_t seed) {
  Rng rng(seed);
  return random_orthogonal(m, rng);
}

}  // namespace ballmaps
