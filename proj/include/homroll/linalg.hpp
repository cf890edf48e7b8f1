#pragma once

#include <span>

#include "homroll/matrix.hpp"

namespace homroll {

// LU with partial pivoting.
Mat lu_solve(const Mat& a, const Mat& rhs);
Mat inverse(const Mat& a);
double determinant(const Mat& a);

// Householder least squares for m >= n. The factorization is cached so
// repeated solves against the same basis matrix stay cheap.
class HouseholderQr {
 public:
  explicit HouseholderQr(Mat a);
  // Minimizes ||A x - b||_2; if residual != nullptr it receives the
  // Euclidean norm of b - A x.
  Vec solve(std::span<const double> b, double* residual = nullptr) const;
  int rows() const { return m_; }
  int cols() const { return n_; }

 private:
  Mat a_;    // original matrix (kept for residuals)
  Mat qr_;   // packed Householder vectors + R
  Vec beta_;
  int m_ = 0, n_ = 0;
};

struct Svd {
  Mat u;      // m x r
  Vec sigma;  // r, descending
  Mat v;      // n x r
};

// One-sided Jacobi SVD; adequate for the small matrices handled here.
Svd jacobi_svd(const Mat& a);

// Orthonormal (coordinate-wise) basis of { x : A x = 0 }; columns of the
// result. Singular values <= tol count as zero.
Mat null_space(const Mat& a, double tol);

// Nearest orthogonal matrix in the Frobenius norm, by Newton iteration
// X <- (X + X^{-T})/2. Requires ||A^T A - I|| < 1 for convergence.
Mat polar_orthogonal(const Mat& a);

// Lower-triangular L with G = L L^T; throws NotPositiveDefinite.
Mat cholesky(const Mat& g);

}  // namespace homroll
