#include <catch_amalgamated.hpp>

#include "ballmaps/ballmaps.hpp"

using namespace ballmaps;

namespace {

Matrix diag3(double a, double b, double c) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

}  // namespace

TEST_CASE("hs_inner basics") {
  const Matrix id3 = Matrix::Identity(3, 3);
  CHECK(hs_inner(id3, id3) == Catch::Approx(3.0).margin(1e-14));

  Rng rng(42);
  const Matrix p = random_pure(3, rng);
  CHECK(hs_inner(p, p) == Catch::Approx(1.0).margin(1e-12));

  const GellMannBasis b = GellMannBasis::standard(3);
  CHECK(std::abs(hs_inner(b.f[b.d_index(1)], b.f[b.u_index(0, 1)])) < 1e-14);

  CHECK_THROWS_AS(hs_inner(id3, Matrix::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("make_hermitian symmetrizes within tolerance and rejects beyond") {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 1) = Complex(1.0, 1e-13);
  a(1, 0) = Complex(1.0, 1e-13);  // adjoint would need -1e-13
  const Matrix h = make_hermitian(a);
  CHECK(is_hermitian(h, 0.0));

  a(0, 1) = Complex(1.0, 1e-3);
  CHECK_THROWS_AS(make_hermitian(a), std::invalid_argument);
  CHECK_THROWS_AS(make_hermitian(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("Gell-Mann basis reduces to Pauli matrices for n = 2") {
  const GellMannBasis b = GellMannBasis::standard(2);
  REQUIRE(b.size() == 3);
  const double s = 1.0 / std::sqrt(2.0);
  Matrix z(2, 2), x(2, 2), y(2, 2);
  z << s, 0, 0, -s;
  x << 0, s, s, 0;
  y << 0, Complex(0, -s), Complex(0, s), 0;
  CHECK((b.f[b.d_index(1)] - z).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((b.f[b.u_index(0, 1)] - x).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((b.f[b.v_index(0, 1)] - y).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("Cartan elements for n = 3") {
  const GellMannBasis b = GellMannBasis::standard(3);
  REQUIRE(b.size() == 8);
  const Matrix d1 = diag3(1, -1, 0) / std::sqrt(2.0);
  const Matrix d2 = diag3(1, 1, -2) / std::sqrt(6.0);
  CHECK((b.f[0] - d1).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((b.f[1] - d2).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("basis orthonormality and count, n up to 5") {
  for (int n = 2; n <= 5; ++n) {
    const GellMannBasis b = GellMannBasis::standard(n);
    REQUIRE(static_cast<int>(b.f.size()) == n * n - 1);
    for (int a = 0; a < b.size(); ++a) {
      CHECK(std::abs(b.f[a].trace()) < 1e-14);
      for (int c = a; c < b.size(); ++c) {
        const double want = a == c ? 1.0 : 0.0;
        CHECK(std::abs(hs_inner(b.f[a], b.f[c]) - want) < 1e-12);
      }
    }
  }
}

TEST_CASE("adapted basis is the conjugated standard basis") {
  Rng rng(7);
  const SpectralState st = SpectralState::from_density(
      0.9 * random_density(3, rng) + 0.1 * Matrix::Identity(3, 3) / 3.0);
  const GellMannBasis b = GellMannBasis::adapted(st);
  for (int a = 0; a < b.size(); ++a)
    for (int c = a; c < b.size(); ++c) {
      const double want = a == c ? 1.0 : 0.0;
      CHECK(std::abs(hs_inner(b.f[a], b.f[c]) - want) < 1e-12);
    }
  // d_1 is diagonal in the eigenbasis of the state
  const Matrix d1_frame =
      st.eigenvectors.adjoint() * b.f[0] * st.eigenvectors;
  CHECK((d1_frame - diag3(1, -1, 0) / std::sqrt(2.0)).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("Bloch coordinates: canonical points") {
  const GellMannBasis b = GellMannBasis::standard(3);
  const BlochVector mixed = to_bloch(Matrix::Identity(3, 3) / 3.0, b);
  CHECK(mixed.trace_part == Catch::Approx(1.0).margin(1e-14));
  CHECK(mixed.coords.cwiseAbs().maxCoeff() < 1e-14);

  for (int a = 0; a < b.size(); ++a) {
    const BlochVector e = to_bloch(b.f[a], b);
    CHECK(std::abs(e.trace_part) < 1e-14);
    RealVector unit = RealVector::Zero(b.size());
    unit(a) = 1.0;
    CHECK((e.coords - unit).cwiseAbs().maxCoeff() < 1e-12);
  }

  const BlochVector x = to_bloch(diag3(1.0 / 2, 1.0 / 3, 1.0 / 6), b);
  CHECK(x.coords.squaredNorm() == Catch::Approx(1.0 / 18).margin(1e-14));
}

TEST_CASE("Bloch round trip and Parseval, random matrices") {
  for (int n : {2, 3, 4}) {
    const GellMannBasis b = GellMannBasis::standard(n);
    Rng rng(1000 + n);
    for (int k = 0; k < 1000; ++k) {
      const Matrix a = random_hermitian(n, rng);
      const BlochVector v = to_bloch(a, b);
      CHECK((from_bloch(v, b) - a).cwiseAbs().maxCoeff() < 1e-12);
      const double parseval =
          v.trace_part * v.trace_part / n + v.coords.squaredNorm();
      CHECK(std::abs(hs_inner(a, a) - parseval) < 1e-12);
    }
  }
}

TEST_CASE("SpectralState decomposition and reconstruction") {
  const SpectralState st =
      SpectralState::from_density(diag3(1.0 / 6, 1.0 / 2, 1.0 / 3));
  REQUIRE(st.dim == 3);
  CHECK(st.lambda_tilde(0) == Catch::Approx(0.5));
  CHECK(st.lambda_tilde(2) == Catch::Approx(1.0 / 6));
  CHECK(st.lambda_n == Catch::Approx(0.5));
  CHECK(st.lambda(0) == Catch::Approx(1.0 / 3));
  CHECK(st.lambda(1) == Catch::Approx(1.0 / 6));

  // sum lambda_i P_i + lambda_n I/n reproduces the state
  Matrix rebuilt = st.lambda_n / 3.0 * Matrix::Identity(3, 3);
  for (int i = 0; i < 2; ++i) rebuilt += st.lambda(i) * st.projectors[i];
  CHECK((rebuilt - st.rho).cwiseAbs().maxCoeff() < 1e-12);

  // projector algebra
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(st.projectors[i].trace().real() - 1.0) < 1e-12);
    for (int j = 0; j < 3; ++j) {
      const Matrix prod = st.projectors[i] * st.projectors[j];
      const Matrix want = i == j ? st.projectors[i] : Matrix::Zero(3, 3);
      CHECK((prod - want).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const SpectralState s = SpectralState::from_density(
        0.85 * random_density(4, rng) + 0.15 * Matrix::Identity(4, 4) / 4.0);
    Matrix r = s.lambda_n / 4.0 * Matrix::Identity(4, 4);
    for (int i = 0; i < 3; ++i) r += s.lambda(i) * s.projectors[i];
    CHECK((r - s.rho).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("SpectralState rejects non-faithful and non-state input") {
  CHECK_THROWS_AS(SpectralState::from_density(diag3(0.5, 0.5, 0.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(SpectralState::from_density(diag3(0.7, 0.5, -0.2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(SpectralState::from_density(diag3(0.5, 0.3, 0.3)),
                  std::invalid_argument);  // trace 1.1
  CHECK_THROWS_AS(SpectralState::from_density(Matrix::Identity(1, 1)),
                  std::invalid_argument);
}

TEST_CASE("random samplers: spectra and determinism") {
  const Matrix p = random_pure(3, std::uint64_t{9001});
  CHECK(std::abs(p.trace().real() - 1.0) < 1e-12);
  Eigen::SelfAdjointEigenSolver<Matrix> es(p, Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues()(2) == Catch::Approx(1.0).margin(1e-12));
  CHECK(std::abs(es.eigenvalues()(0)) < 1e-12);
  CHECK(std::abs(es.eigenvalues()(1)) < 1e-12);

  const Matrix d = random_density(3, std::uint64_t{9002});
  CHECK(std::abs(d.trace().real() - 1.0) < 1e-12);
  CHECK(min_eigenvalue(d) > -1e-14);

  // same seed, same sample; different seed, different sample
  CHECK((random_density(3, std::uint64_t{1}) - random_density(3, std::uint64_t{1}))
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK((random_density(3, std::uint64_t{1}) - random_density(3, std::uint64_t{2}))
            .cwiseAbs()
            .maxCoeff() > 1e-3);
}

TEST_CASE("random separable states have positive partial transpose") {
  for (std::uint64_t seed : {11u, 22u, 33u, 44u}) {
    const Matrix sep = random_separable(3, 3, 10, seed);
    CHECK(std::abs(sep.trace().real() - 1.0) < 1e-12);
    CHECK(min_eigenvalue(partial_transpose(sep, 3, 3)) >= -1e-12);
  }
}

TEST_CASE("random orthogonal matrices are orthogonal") {
  for (int m : {3, 8}) {
    const RealMatrix q = random_orthogonal(m, std::uint64_t{17});
    CHECK((q.transpose() * q - RealMatrix::Identity(m, m)).cwiseAbs().maxCoeff() <
          1e-12);
  }
}
