#include <doctest.h>

#include <cmath>

#include "homroll/linalg.hpp"
#include "test_util.hpp"

using namespace homroll;

TEST_CASE("lu_solve solves random well-conditioned systems") {
  auto gen = testutil::rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = testutil::random_invertible(gen, 6, 50.0);
    const Mat x_true = testutil::random_mat(gen, 6, 2);
    const Mat x = lu_solve(a, a * x_true);
    CHECK(testutil::max_abs_diff(x, x_true) <= 1e-10);
  }
  CHECK_THROWS_AS(lu_solve(Mat(3, 3), Mat::identity(3)), SingularMatrix);
}

TEST_CASE("determinant tracks products and permutation signs") {
  CHECK(determinant(Mat::identity(4)) == doctest::Approx(1.0));
  const Mat swap(2, 2, {0.0, 1.0, 1.0, 0.0});
  CHECK(determinant(swap) == doctest::Approx(-1.0));
  auto gen = testutil::rng(29);
  const Mat a = testutil::random_invertible(gen, 4, 10.0);
  const Mat b = testutil::random_invertible(gen, 4, 10.0);
  CHECK(determinant(a * b) == doctest::Approx(determinant(a) * determinant(b)).epsilon(1e-10));
}

TEST_CASE("HouseholderQr least squares reproduces consistent systems") {
  auto gen = testutil::rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = testutil::random_mat(gen, 9, 4);
    const Vec x_true = testutil::random_vec(gen, 4);
    const Vec b = a.apply(x_true);
    double residual = -1.0;
    const HouseholderQr qr(a);
    const Vec x = qr.solve(b, &residual);
    CHECK(residual <= 1e-11);
    for (int i = 0; i < 4; ++i) CHECK(x[i] == doctest::Approx(x_true[i]).epsilon(1e-9));
  }
}

TEST_CASE("HouseholderQr reports the residual of inconsistent systems") {
  // Overdetermined with known residual: fit a constant to {0, 1}.
  const Mat a(2, 1, {1.0, 1.0});
  const HouseholderQr qr(a);
  double residual = -1.0;
  const Vec x = qr.solve(Vec{0.0, 1.0}, &residual);
  CHECK(x[0] == doctest::Approx(0.5));
  CHECK(residual == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("jacobi_svd reconstructs the input") {
  auto gen = testutil::rng(37);
  for (const auto [m, n] : {std::pair{6, 6}, std::pair{8, 3}, std::pair{3, 8}}) {
    const Mat a = testutil::random_mat(gen, m, n);
    const Svd svd = jacobi_svd(a);
    const int r = static_cast<int>(svd.sigma.size());
    Mat recon(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int c = 0; c < r; ++c) s += svd.u(i, c) * svd.sigma[c] * svd.v(j, c);
        recon(i, j) = s;
      }
    CHECK(testutil::max_abs_diff(recon, a) <= 1e-12);
    // descending singular values
    for (int c = 1; c < r; ++c) CHECK(svd.sigma[c] <= svd.sigma[c - 1]);
    CHECK(testutil::max_abs_diff(svd.v.transpose() * svd.v, Mat::identity(r)) <= 1e-12);
  }
}

TEST_CASE("null_space finds kernels in tall, square and wide shapes") {
  // rank-1 tall matrix 4x2: kernel dim 1
  const Mat tall(4, 2, {1.0, 2.0, 2.0, 4.0, -1.0, -2.0, 0.5, 1.0});
  const Mat k1 = null_space(tall, 1e-10);
  REQUIRE(k1.cols() == 1);
  CHECK((tall * k1).frob_norm() <= 1e-12);

  // wide matrix 1x3: kernel dim 2
  const Mat wide(1, 3, {1.0, 1.0, 1.0});
  const Mat k2 = null_space(wide, 1e-10);
  REQUIRE(k2.cols() == 2);
  CHECK((wide * k2).frob_norm() <= 1e-12);
  CHECK(testutil::max_abs_diff(k2.transpose() * k2, Mat::identity(2)) <= 1e-12);

  // invertible square: empty kernel
  auto gen = testutil::rng(41);
  CHECK(null_space(testutil::random_invertible(gen, 5, 10.0), 1e-10).cols() == 0);
}

TEST_CASE("polar_orthogonal agrees with the SVD-based construction") {
  auto gen = testutil::rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat a = Mat::identity(4) + 0.2 * testutil::random_mat(gen, 4, 4);
    const Mat u = polar_orthogonal(a);
    // oracle: U = W V^T from the SVD A = W diag(s) V^T
    const Svd svd = jacobi_svd(a);
    const Mat expect = svd.u * svd.v.transpose();
    CHECK(testutil::max_abs_diff(u, expect) <= 1e-12);
    CHECK(testutil::max_abs_diff(u.transpose() * u, Mat::identity(4)) <= 1e-13);
    // the polar factor is the fixed point of the iteration
    CHECK(testutil::max_abs_diff(polar_orthogonal(u), u) <= 1e-13);
  }
}

TEST_CASE("cholesky factors SPD matrices and rejects indefinite ones") {
  auto gen = testutil::rng(47);
  const Mat b = testutil::random_mat(gen, 5, 5);
  const Mat spd = b * b.transpose() + 0.5 * Mat::identity(5);
  const Mat l = cholesky(spd);
  CHECK(testutil::max_abs_diff(l * l.transpose(), spd) <= 1e-12);

  Mat indef = Mat::identity(3);
  indef(2, 2) = -1.0;
  CHECK_THROWS_AS(cholesky(indef), NotPositiveDefinite);
}
