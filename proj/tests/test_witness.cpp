#include <catch_amalgamated.hpp>

#include "ballmaps/ballmaps.hpp"

using namespace ballmaps;

namespace {

SpectralState random_diag_faithful3(Rng& rng) {
  RealVector w = dirichlet_uniform(3, rng);
  w = 0.85 * w + RealVector::Constant(3, 0.05);
  std::sort(w.data(), w.data() + 3, std::greater<double>());
  return SpectralState::from_spectrum(w, Matrix::Identity(3, 3));
}

const std::array<std::pair<int, int>, 3> kCrossSlots = {
    {{0, 4}, {0, 8}, {4, 8}}};

}  // namespace

TEST_CASE("identity map gives 3 P+ which is not a witness") {
  const LinearMap id{3, [](const Matrix& a) { return a; }};
  const Witness w = from_map(id, 3, "identity");
  CHECK((w.matrix - 3.0 * maximally_entangled(3)).cwiseAbs().maxCoeff() <
        1e-14);
  CHECK(w.min_eigenvalue >= -1e-12);
  CHECK_FALSE(w.is_entanglement_witness());
}

TEST_CASE("transpose map on qubits gives the swap operator") {
  const LinearMap transpose{2, [](const Matrix& a) { return a.transpose().eval(); }};
  const Witness w = from_map(transpose, 2, "transpose");
  Matrix swap = Matrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;
  CHECK((w.matrix - swap).cwiseAbs().maxCoeff() < 1e-14);
  Eigen::SelfAdjointEigenSolver<Matrix> es(w.matrix, Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues()(0) == Catch::Approx(-1.0).margin(1e-12));
  CHECK(es.eigenvalues()(1) == Catch::Approx(1.0).margin(1e-12));
  CHECK(es.eigenvalues()(3) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("classic Choi witness matches the printed layout") {
  const Witness w = from_map(classic_choi().as_linear_map(), 3, "classic-choi");
  const RealVector want_diag = 0.5 * (RealVector(9) << 1, 1, 0, 0, 1, 1, 1, 0, 1)
                                         .finished();
  for (int i = 0; i < 9; ++i)
    CHECK(w.matrix(i, i).real() == Catch::Approx(want_diag(i)).margin(1e-14));

  for (const auto& [r, c] : kCrossSlots) {
    CHECK(w.matrix(r, c).real() == Catch::Approx(-0.5).margin(1e-14));
    CHECK(w.matrix(c, r).real() == Catch::Approx(-0.5).margin(1e-14));
  }

  // everything else vanishes
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) {
      if (r == c) continue;
      const bool cross =
          std::any_of(kCrossSlots.begin(), kCrossSlots.end(), [&](auto s) {
            return (s.first == r && s.second == c) ||
                   (s.first == c && s.second == r);
          });
      if (!cross) CHECK(std::abs(w.matrix(r, c)) < 1e-14);
    }

  CHECK(w.min_eigenvalue == Catch::Approx(-0.5).margin(1e-12));
}

TEST_CASE("family witness sparsity pattern for random diagonal states") {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const SpectralState st = random_diag_faithful3(rng);
    const double alpha = 20.0 * rng.uniform() - 10.0;
    const Witness w = family_witness(st, alpha);
    const double mu = mu_max(st);
    for (const auto& [r, c] : kCrossSlots) {
      CHECK(w.matrix(r, c).real() == Catch::Approx(-mu).margin(1e-13));
      CHECK(w.matrix(c, r).real() == Catch::Approx(-mu).margin(1e-13));
    }
    for (int r = 0; r < 9; ++r)
      for (int c = 0; c < 9; ++c) {
        if (r == c) continue;
        const bool cross =
            std::any_of(kCrossSlots.begin(), kCrossSlots.end(), [&](auto s) {
              return (s.first == r && s.second == c) ||
                     (s.first == c && s.second == r);
            });
        if (!cross) CHECK(std::abs(w.matrix(r, c)) < 1e-14);
      }
  }
}

TEST_CASE("coefficients at the Choi recovery angles") {
  const SpectralState mixed = SpectralState::maximally_mixed(3);

  // the classic pattern appears at -choi_angle()
  const FamilyCoefficients fc = coefficients(mixed, -choi_angle());
  for (int i = 0; i < 3; ++i) {
    CHECK(fc.a[i] == Catch::Approx(1.0).margin(1e-12));
    CHECK(fc.b[i] == Catch::Approx(1.0).margin(1e-12));
    CHECK(fc.c[i] == Catch::Approx(0.0).margin(1e-12));
  }
  for (double s : fc.sums()) CHECK(s == Catch::Approx(2.0).margin(1e-12));

  // at choi_angle() the b/c roles swap (transpose partner)
  const FamilyCoefficients ft = coefficients(mixed, choi_angle());
  for (int i = 0; i < 3; ++i) {
    CHECK(ft.a[i] == Catch::Approx(1.0).margin(1e-12));
    CHECK(ft.b[i] == Catch::Approx(0.0).margin(1e-12));
    CHECK(ft.c[i] == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("coefficient sum identity a_i + b_{i+1} + c_{i+2} = 1/mu_max") {
  Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const SpectralState st = random_diag_faithful3(rng);
    const double alpha = 20.0 * rng.uniform() - 10.0;
    const FamilyCoefficients fc = coefficients(st, alpha);
    for (double s : fc.sums())
      CHECK(s == Catch::Approx(1.0 / fc.mu_max).margin(1e-12));
  }
}

TEST_CASE("coefficients stay nonnegative for the mixed state") {
  Rng rng(23);
  const SpectralState mixed = SpectralState::maximally_mixed(3);
  for (int trial = 0; trial < 50; ++trial) {
    const FamilyCoefficients fc =
        coefficients(mixed, 20.0 * rng.uniform() - 10.0);
    for (int i = 0; i < 3; ++i) {
      CHECK(fc.a[i] >= -1e-12);
      CHECK(fc.b[i] >= -1e-12);
      CHECK(fc.c[i] >= -1e-12);
    }
  }
}

TEST_CASE("coefficient extraction works for non-diagonal states") {
  Rng rng(24);
  const SpectralState st = SpectralState::from_density(
      0.85 * random_density(3, rng) + 0.05 * Matrix::Identity(3, 3));
  const FamilyCoefficients fc = coefficients(st, 0.321);
  for (double s : fc.sums())
    CHECK(s == Catch::Approx(1.0 / fc.mu_max).margin(1e-12));
}

TEST_CASE("detection values") {
  const Witness w = from_map(classic_choi().as_linear_map(), 3, "classic-choi");
  CHECK(detect(w, maximally_entangled(3)) ==
        Catch::Approx(-0.5).margin(1e-12));
  CHECK(detect(w, Matrix::Identity(9, 9) / 9.0) ==
        Catch::Approx(1.0 / 3).margin(1e-12));
  CHECK(detect(w, Matrix::Identity(9, 9) / 9.0) >= 0.0);

  Rng rng(25);
  double worst = 0.0;
  for (int k = 0; k < 10'000; ++k)
    worst = std::min(worst, detect(w, random_separable(3, 3, 4, 30'000 + k)));
  CHECK(worst >= -1e-10);
}

TEST_CASE("detect validates its input") {
  const Witness w = from_map(classic_choi().as_linear_map(), 3, "classic-choi");
  CHECK_THROWS_AS(detect(w, Matrix::Identity(3, 3) / 3.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(detect(w, Matrix::Identity(9, 9)), std::invalid_argument);
  const Matrix not_psd =
      Matrix::Identity(9, 9) / 9.0 - 0.5 * maximally_entangled(3);
  CHECK_THROWS_AS(detect(w, not_psd / not_psd.trace().real()),
                  std::invalid_argument);
}

TEST_CASE("negativity submatrix decides witness status") {
  const SpectralState mixed = SpectralState::maximally_mixed(3);
  const auto [m, negative] = negativity_submatrix(mixed, -choi_angle());
  CHECK(m(0, 0) == Catch::Approx(1.0).margin(1e-12));
  CHECK(negative);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m, Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues()(0) == Catch::Approx(-1.0).margin(1e-12));
  CHECK(es.eigenvalues()(1) == Catch::Approx(2.0).margin(1e-12));
  CHECK(es.eigenvalues()(2) == Catch::Approx(2.0).margin(1e-12));

  // boundary case a_i = 2: eigenvalues {0, 3, 3}, no longer negative
  Eigen::Matrix3d boundary;
  boundary << 2, -1, -1, -1, 2, -1, -1, -1, 2;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eb(boundary,
                                                    Eigen::EigenvaluesOnly);
  CHECK(eb.eigenvalues()(0) == Catch::Approx(0.0).margin(1e-13));
  CHECK(eb.eigenvalues()(2) == Catch::Approx(3.0).margin(1e-13));
}

TEST_CASE("skewed states can lose witness status") {
  // scan of perturbed spectra; the family map stays positive but W[alpha]
  // becomes positive semidefinite, hence detects nothing
  RealVector w(3);
  w << 0.4428571428571428, 0.4, 0.1571428571428572;
  const SpectralState st =
      SpectralState::from_spectrum(w, Matrix::Identity(3, 3));
  const auto [m, negative] = negativity_submatrix(st, 0.0);
  CHECK_FALSE(negative);
  CHECK(min_eigenvalue(m.cast<Complex>()) > 1e-3);

  const Witness witness = family_witness(st, 0.0);
  CHECK(witness.min_eigenvalue >= -1e-10);

  // while the mixed state is never positive, matching the paper's claim
  Rng rng(26);
  for (int k = 0; k < 25; ++k) {
    const auto [m2, neg2] = negativity_submatrix(
        SpectralState::maximally_mixed(3), 20.0 * rng.uniform() - 10.0);
    CHECK(neg2);
  }
}

TEST_CASE("partial transpose of the maximally entangled state") {
  const Matrix pt = partial_transpose(maximally_entangled(3), 3, 3);
  CHECK(min_eigenvalue(pt) == Catch::Approx(-1.0 / 3).margin(1e-12));
}
