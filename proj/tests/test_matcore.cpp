#include <doctest.h>

#include <cmath>

#include "anorm/linalg.hpp"
#include "anorm/rng.hpp"
#include "anorm/semihilbert.hpp"

using namespace anorm;

namespace {

ComplexMatrix reconstruct(const EigenSystem& sys) {
  const std::size_t n = sys.values.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc(0);
      for (std::size_t k = 0; k < n; ++k)
        acc += sys.vectors(i, k) * sys.values[k] * std::conj(sys.vectors(j, k));
      m(i, j) = acc;
    }
  return m;
}

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix g = random_gaussian(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_CASE("hermitian_eig: diagonal input is sorted descending") {
  const auto sys = hermitian_eig(ComplexMatrix::diagonal({3.0, 1.0, 2.0}));
  REQUIRE(sys.values.size() == 3);
  CHECK(sys.values[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(sys.values[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sys.values[2] == doctest::Approx(1.0).epsilon(1e-14));
  // Vectors must be a permutation of identity columns.
  for (std::size_t c = 0; c < 3; ++c) {
    double top = 0.0;
    for (std::size_t r = 0; r < 3; ++r) top = std::max(top, std::abs(sys.vectors(r, c)));
    CHECK(top == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("hermitian_eig: symmetry-forced 2x2") {
  const auto sys =
      hermitian_eig(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
  CHECK(sys.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sys.values[1] == doctest::Approx(-1.0).epsilon(1e-14));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(sys.vectors(0, 0)) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
  CHECK(std::abs(sys.vectors(1, 0)) == doctest::Approx(inv_sqrt2).epsilon(1e-12));
}

TEST_CASE("hermitian_eig: reconstruction and orthonormality on random input") {
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const ComplexMatrix m = random_hermitian(5, seed);
    const auto sys = hermitian_eig(m);
    const double scale = spectral_norm(m);
    CHECK(max_abs_diff(reconstruct(sys), m) <= 1e-10 * (1.0 + scale));
    const ComplexMatrix vtv = sys.vectors.adjoint() * sys.vectors;
    CHECK(max_abs_diff(vtv, ComplexMatrix::identity(5)) <= 1e-12);
  }
}

TEST_CASE("hermitian_eig: rejects non-square input") {
  CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("psd_sqrt: diagonal cases") {
  const ComplexMatrix s = psd_sqrt(ComplexMatrix::diagonal({4.0, 9.0}));
  CHECK(max_abs_diff(s, ComplexMatrix::diagonal({2.0, 3.0})) <= 1e-12);

  const ComplexMatrix r = psd_sqrt(ComplexMatrix::diagonal({1.0, 1.0, 2.0}));
  CHECK(max_abs_diff(r, ComplexMatrix::diagonal({1.0, 1.0, std::sqrt(2.0)})) <=
        1e-12);

  const ComplexMatrix z = psd_sqrt(ComplexMatrix(3, 3));
  CHECK(z.max_abs() == 0.0);
}

TEST_CASE("psd_sqrt: square law on rank-deficient random PSD") {
  for (std::uint64_t seed : {21u, 22u}) {
    const ComplexMatrix m = random_psd(5, 2, seed);
    const ComplexMatrix s = psd_sqrt(m);
    CHECK(max_abs_diff(s * s, m) <= 1e-9 * (1.0 + spectral_norm(m)));
  }
}

TEST_CASE("psd_sqrt: rejects indefinite input") {
  CHECK_THROWS_AS(psd_sqrt(ComplexMatrix::diagonal({1.0, -1.0})), NotPsd);
}

TEST_CASE("pinv: diagonal cases") {
  CHECK(max_abs_diff(pinv(ComplexMatrix::diagonal({1.0, 1.0, 2.0})),
                     ComplexMatrix::diagonal({1.0, 1.0, 0.5})) <= 1e-12);
  CHECK(max_abs_diff(pinv(ComplexMatrix::diagonal({1.0, 0.0})),
                     ComplexMatrix::diagonal({1.0, 0.0})) <= 1e-12);
}

TEST_CASE("pinv: Penrose identities") {
  auto penrose_ok = [](const ComplexMatrix& m) {
    const ComplexMatrix p = pinv(m);
    const double tol = 1e-9 * (1.0 + spectral_norm(m));
    CHECK(max_abs_diff(m * p * m, m) <= tol);
    CHECK(max_abs_diff(p * m * p, p) <= tol);
    const ComplexMatrix mp = m * p;
    const ComplexMatrix pm = p * m;
    CHECK(max_abs_diff(mp.adjoint(), mp) <= tol);
    CHECK(max_abs_diff(pm.adjoint(), pm) <= tol);
  };

  SUBCASE("random rank-2 4x4 PSD") {
    Rng rng(31);
    const ComplexMatrix g = random_gaussian(4, 2, rng);
    penrose_ok(g * g.adjoint());
  }
  SUBCASE("random non-Hermitian with an exactly-zero column") {
    Rng rng(32);
    ComplexMatrix g = random_gaussian(4, 4, rng);
    for (std::size_t i = 0; i < 4; ++i) g(i, 2) = 0.0;
    penrose_ok(g);
  }
}

TEST_CASE("range_basis: diagonal cases") {
  const ComplexMatrix v3 = range_basis(ComplexMatrix::diagonal({1.0, 1.0, 2.0}));
  REQUIRE(v3.cols() == 3);
  CHECK(max_abs_diff(v3.adjoint() * v3, ComplexMatrix::identity(3)) <= 1e-12);

  const ComplexMatrix v1 = range_basis(ComplexMatrix::diagonal({1.0, 0.0, 0.0}));
  REQUIRE(v1.cols() == 1);
  CHECK(std::abs(v1(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(v1(1, 0)) <= 1e-12);
  CHECK(std::abs(v1(2, 0)) <= 1e-12);
}

TEST_CASE("range_basis: projector identity on rank-2 random PSD") {
  Rng rng(41);
  const ComplexMatrix g = random_gaussian(4, 2, rng);
  const ComplexMatrix m = g * g.adjoint();
  const ComplexMatrix v = range_basis(m);
  REQUIRE(v.cols() == 2);
  CHECK(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(2)) <= 1e-12);
  const ComplexMatrix proj = v * v.adjoint();
  CHECK(max_abs_diff(proj * m, m) <= 1e-9 * (1.0 + spectral_norm(m)));
}

TEST_CASE("spectral_norm: frozen values") {
  CHECK(spectral_norm(ComplexMatrix::identity(4)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // Orthogonal columns, so sigma_max is the largest column norm.
  const ComplexMatrix b = ComplexMatrix::from_rows(
      {{0.0, 0.0, 0.0}, {2.0, 0.0, 0.0}, {0.0, std::sqrt(2.0), 0.0}});
  CHECK(spectral_norm(b) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(spectral_norm(ComplexMatrix(3, 3)) == 0.0);
}

TEST_CASE("spectral_norm: adjoint symmetry and homogeneity") {
  Rng rng(51);
  for (int rep = 0; rep < 5; ++rep) {
    const ComplexMatrix m = random_gaussian(4, 4, rng);
    const double s = spectral_norm(m);
    CHECK(std::abs(spectral_norm(m.adjoint()) - s) <= 1e-12 * (1.0 + s));
    const double c = 3.25;
    CHECK(std::abs(spectral_norm(c * m) - c * s) <= 1e-12 * (1.0 + c * s));
  }
}

TEST_CASE("smallest_singular_value: exact zero direction stays near zero") {
  Rng rng(61);
  ComplexMatrix g = random_gaussian(4, 4, rng);
  for (std::size_t i = 0; i < 4; ++i) g(i, 3) = 0.0;
  CHECK(smallest_singular_value(g) <= 1e-12 * (1.0 + spectral_norm(g)));
  CHECK(smallest_singular_value(ComplexMatrix::identity(3)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}
