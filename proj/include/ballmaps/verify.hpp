#pragma once

// Numerical certification engine.
//
// Sampled certificates are evidence, not proof: absence of a violation after
// sampling and refinement is reported as *-sampled. A violation, in contrast,
// is a proof and carries a concrete violating state reproducible from the
// seed. Restart seeds are derived as seed + restart index, so results do not
// depend on execution order.

#include "ballmaps/bipartite.hpp"
#include "ballmaps/hermitian.hpp"
#include "ballmaps/maps.hpp"
#include "ballmaps/random.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace ballmaps {

enum class CertKind {
  cp,
  not_cp,
  positive_sampled,
  block_positive_sampled,
  ball_contained_sampled,
  violated,
};

inline const char* to_string(CertKind k) {
  switch (k) {
    case CertKind::cp: return "CP";
    case CertKind::not_cp: return "not-CP";
    case CertKind::positive_sampled: return "positive-sampled";
    case CertKind::block_positive_sampled: return "block-positive-sampled";
    case CertKind::ball_contained_sampled: return "ball-contained-sampled";
    case CertKind::violated: return "violated";
  }
  return "unknown";
}

struct Certificate {
  CertKind kind = CertKind::violated;
  double bound = 0.0;  // certified minimum slack; passing means >= -tolerance
  long samples = 0;
  int restarts = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::optional<Matrix> violator;  // state achieving bound < -tolerance
};

/// Complete positivity via the Choi-matrix spectrum: CP iff the minimum
/// eigenvalue of (id (x) phi)(sum e_ij (x) e_ij) is >= -tol.
inline Certificate cp_check(const LinearMap& phi, int n,
                            double tol = kEigenTol) {
  const Matrix c = make_hermitian(choi_matrix(phi, n), 1e-10);
  Certificate cert;
  cert.bound = min_eigenvalue(c);
  cert.tolerance = tol;
  cert.kind = cert.bound >= -tol ? CertKind::cp : CertKind::not_cp;
  return cert;
}

namespace detail {

inline double lambda_min_image(const LinearMap& phi, const ComplexVector& psi) {
  const Matrix p = psi * psi.adjoint();
  return min_eigenvalue(make_hermitian(phi(p), 1e-9));
}

/// Derivative-free descent on the unit sphere of C^n: Givens-style rotations
/// over coordinate pairs with two phases, step halving from 1e-2 down to 1e-8.
inline double refine_on_sphere(const LinearMap& phi, ComplexVector psi,
                               double value, ComplexVector* argmin,
                               int max_sweeps = 400) {
  const int n = static_cast<int>(psi.size());
  double step = 1e-2;
  int sweeps = 0;
  while (step >= 1e-8 && sweeps < max_sweeps) {
    ++sweeps;
    bool improved = false;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        for (const Complex phase : {Complex(1, 0), Complex(0, 1)}) {
          for (const double sign : {1.0, -1.0}) {
            const double c = std::cos(sign * step);
            const double s = std::sin(sign * step);
            ComplexVector trial = psi;
            trial(p) = c * psi(p) + phase * s * psi(q);
            trial(q) = -std::conj(phase) * s * psi(p) + c * psi(q);
            trial.normalize();
            const double v = lambda_min_image(phi, trial);
            if (v < value) {
              value = v;
              psi = trial;
              improved = true;
            }
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  if (argmin) *argmin = psi;
  return value;
}

}  // namespace detail

/// Positivity scan: phase 1 minimizes lambda_min(phi(P)) over Haar-random
/// pure states; phase 2 refines from the best `restarts` candidates with
/// derivative-free descent on the sphere.
inline Certificate positivity_scan(const LinearMap& phi, int n, int samples,
                                   int restarts, std::uint64_t seed,
                                   double tol = kEigenTol) {
  if (samples < 1) throw std::invalid_argument("positivity_scan: samples >= 1");
  Rng rng(seed);
  std::vector<std::pair<double, ComplexVector>> pool;
  pool.reserve(samples);
  double best = std::numeric_limits<double>::infinity();
  ComplexVector best_psi;
  for (int k = 0; k < samples; ++k) {
    ComplexVector psi = random_unit_vector(n, rng);
    const double v = detail::lambda_min_image(phi, psi);
    pool.emplace_back(v, std::move(psi));
    if (v < best) {
      best = v;
      best_psi = pool.back().second;
    }
  }
  const int k_refine = std::min<int>(restarts, static_cast<int>(pool.size()));
  std::partial_sort(pool.begin(), pool.begin() + k_refine, pool.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });
  for (int k = 0; k < k_refine; ++k) {
    ComplexVector psi;
    const double v =
        detail::refine_on_sphere(phi, pool[k].second, pool[k].first, &psi);
    if (v < best) {
      best = v;
      best_psi = psi;
    }
  }
  Certificate cert;
  cert.bound = best;
  cert.samples = samples;
  cert.restarts = restarts;
  cert.seed = seed;
  cert.tolerance = tol;
  if (best >= -tol) {
    cert.kind = CertKind::positive_sampled;
  } else {
    cert.kind = CertKind::violated;
    cert.violator = Matrix(best_psi * best_psi.adjoint());
  }
  return cert;
}

/// The dimB x dimB contraction M(x)_kl = <x (x) e_k| W |x (x) e_l>.
inline Matrix contract_left(const Matrix& w, const ComplexVector& x, int dim_a,
                            int dim_b) {
  Matrix m = Matrix::Zero(dim_b, dim_b);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      m += std::conj(x(i)) * x(j) * w.block(i * dim_b, j * dim_b, dim_b, dim_b);
  return m;
}

/// The dimA x dimA contraction N(y)_ij = <e_i (x) y| W |e_j (x) y>.
inline Matrix contract_right(const Matrix& w, const ComplexVector& y, int dim_a,
                             int dim_b) {
  Matrix m(dim_a, dim_a);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      m(i, j) =
          (y.adjoint() * w.block(i * dim_b, j * dim_b, dim_b, dim_b) * y)(0);
  return m;
}

/// Block positivity of W: alternating eigenvector minimization of
/// <x (x) y| W |x (x) y> over product vectors, multi-started from Haar-random
/// x0. Each half-step solves an exact eigenproblem, so the objective never
/// increases within an iteration.
inline Certificate block_positivity(const Matrix& w, int dim_a, int dim_b,
                                    int restarts, std::uint64_t seed,
                                    double tol = kCertificateTol) {
  if (w.rows() != dim_a * dim_b || w.cols() != w.rows())
    throw std::invalid_argument("block_positivity: dimension mismatch");
  const Matrix wh = make_hermitian(w, 1e-10);
  double best = std::numeric_limits<double>::infinity();
  ComplexVector best_x, best_y;
  for (int r = 0; r < restarts; ++r) {
    Rng rng(seed + static_cast<std::uint64_t>(r));
    ComplexVector x = random_unit_vector(dim_a, rng);
    ComplexVector y;
    double value = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 200; ++iter) {
      Eigen::SelfAdjointEigenSolver<Matrix> esb(
          contract_left(wh, x, dim_a, dim_b));
      y = esb.eigenvectors().col(0);
      Eigen::SelfAdjointEigenSolver<Matrix> esa(
          contract_right(wh, y, dim_a, dim_b));
      x = esa.eigenvectors().col(0);
      const double v = esa.eigenvalues()(0);
      if (std::abs(value - v) < 1e-12) {
        value = v;
        break;
      }
      value = v;
    }
    if (value < best) {
      best = value;
      best_x = x;
      best_y = y;
    }
  }
  Certificate cert;
  cert.bound = best;
  cert.restarts = restarts;
  cert.seed = seed;
  cert.tolerance = tol;
  if (best >= -tol) {
    cert.kind = CertKind::block_positive_sampled;
  } else {
    cert.kind = CertKind::violated;
    ComplexVector prod(dim_a * dim_b);
    for (int i = 0; i < dim_a; ++i)
      for (int k = 0; k < dim_b; ++k) prod(i * dim_b + k) = best_x(i) * best_y(k);
    cert.violator = Matrix(prod * prod.adjoint());
  }
  return cert;
}

/// Ball containment of the image: samples random density matrices and reports
/// the minimum slack r_max - ||rho - phi(rho_sample)||.
inline Certificate ball_image_check(const BallMap& map, int samples,
                                    std::uint64_t seed,
                                    double tol = kIdentityTol) {
  Rng rng(seed);
  double min_slack = std::numeric_limits<double>::infinity();
  Matrix worst;
  for (int k = 0; k < samples; ++k) {
    const Matrix rho = random_density(map.state.dim, rng);
    const double slack =
        map.r_max_value - hs_norm(map.state.rho - map.apply(rho));
    if (slack < min_slack) {
      min_slack = slack;
      worst = rho;
    }
  }
  Certificate cert;
  cert.bound = min_slack;
  cert.samples = samples;
  cert.seed = seed;
  cert.tolerance = tol;
  if (min_slack >= -tol) {
    cert.kind = CertKind::ball_contained_sampled;
  } else {
    cert.kind = CertKind::violated;
    cert.violator = worst;
  }
  return cert;
}

}  // namespace ballmaps
