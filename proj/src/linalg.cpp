#include "homroll/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace homroll {

namespace {

// In-place LU with partial pivoting; returns the permutation sign,
// pivot rows in `piv`. Throws SingularMatrix on a zero pivot column.
double lu_factor(Mat& a, std::vector<int>& piv) {
  require_square(a, "lu_factor");
  const int n = a.rows();
  piv.resize(n);
  double sign = 1.0;
  for (int col = 0; col < n; ++col) {
    int p = col;
    double best = std::abs(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(a(r, col));
      if (v > best) {
        best = v;
        p = r;
      }
    }
    if (best == 0.0) throw SingularMatrix("lu_factor: singular matrix");
    piv[col] = p;
    if (p != col) {
      sign = -sign;
      for (int j = 0; j < n; ++j) std::swap(a(col, j), a(p, j));
    }
    const double d = a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double f = a(r, col) / d;
      a(r, col) = f;
      for (int j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return sign;
}

void lu_solve_inplace(const Mat& lu, const std::vector<int>& piv, Mat& b) {
  const int n = lu.rows();
  const int m = b.cols();
  for (int col = 0; col < n; ++col)
    if (piv[col] != col)
      for (int j = 0; j < m; ++j) std::swap(b(col, j), b(piv[col], j));
  // forward
  for (int col = 0; col < n; ++col)
    for (int r = col + 1; r < n; ++r)
      for (int j = 0; j < m; ++j) b(r, j) -= lu(r, col) * b(col, j);
  // backward
  for (int col = n - 1; col >= 0; --col) {
    for (int j = 0; j < m; ++j) b(col, j) /= lu(col, col);
    for (int r = 0; r < col; ++r)
      for (int j = 0; j < m; ++j) b(r, j) -= lu(r, col) * b(col, j);
  }
}

}  // namespace

Mat lu_solve(const Mat& a, const Mat& rhs) {
  if (a.rows() != rhs.rows()) throw Error("lu_solve: dimension mismatch");
  Mat lu = a;
  std::vector<int> piv;
  lu_factor(lu, piv);
  Mat x = rhs;
  lu_solve_inplace(lu, piv, x);
  return x;
}

Mat inverse(const Mat& a) { return lu_solve(a, Mat::identity(a.rows())); }

double determinant(const Mat& a) {
  Mat lu = a;
  std::vector<int> piv;
  double det;
  try {
    det = lu_factor(lu, piv);
  } catch (const SingularMatrix&) {
    return 0.0;
  }
  for (int i = 0; i < lu.rows(); ++i) det *= lu(i, i);
  return det;
}

HouseholderQr::HouseholderQr(Mat a) : a_(a), qr_(std::move(a)), m_(qr_.rows()), n_(qr_.cols()) {
  if (m_ < n_) throw Error("HouseholderQr: need rows >= cols");
  beta_.assign(n_, 0.0);
  for (int col = 0; col < n_; ++col) {
    double norm = 0.0;
    for (int i = col; i < m_; ++i) norm += qr_(i, col) * qr_(i, col);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;  // beta = 0 marks a skipped reflector
    if (qr_(col, col) < 0.0) norm = -norm;
    for (int i = col; i < m_; ++i) qr_(i, col) /= norm;
    qr_(col, col) += 1.0;
    beta_[col] = norm;  // R diagonal is -norm, stored separately via beta sign
    // apply reflector to remaining columns
    for (int j = col + 1; j < n_; ++j) {
      double s = 0.0;
      for (int i = col; i < m_; ++i) s += qr_(i, col) * qr_(i, j);
      s = -s / qr_(col, col);
      for (int i = col; i < m_; ++i) qr_(i, j) += s * qr_(i, col);
    }
  }
}

Vec HouseholderQr::solve(std::span<const double> b, double* residual) const {
  if (static_cast<int>(b.size()) != m_) throw Error("HouseholderQr::solve: dimension mismatch");
  Vec y(b.begin(), b.end());
  // apply Q^T
  for (int col = 0; col < n_; ++col) {
    if (beta_[col] == 0.0) continue;
    double s = 0.0;
    for (int i = col; i < m_; ++i) s += qr_(i, col) * y[i];
    s = -s / qr_(col, col);
    for (int i = col; i < m_; ++i) y[i] += s * qr_(i, col);
  }
  // Back-substitute R x = y[0..n). R's strict upper triangle sits in qr_,
  // its diagonal is -beta.
  Vec x(n_, 0.0);
  for (int col = n_ - 1; col >= 0; --col) {
    if (beta_[col] == 0.0) throw SingularMatrix("HouseholderQr::solve: rank-deficient matrix");
    double s = y[col];
    for (int j = col + 1; j < n_; ++j) s -= qr_(col, j) * x[j];
    x[col] = s / (-beta_[col]);
  }
  if (residual) {
    Vec ax = a_.apply(x);
    vec_axpy(-1.0, b, ax);
    *residual = vec_norm(ax);
  }
  return x;
}

Svd jacobi_svd(const Mat& a) {
  const bool transposed = a.rows() < a.cols();
  Mat w = transposed ? a.transpose() : a;
  const int m = w.rows();
  const int n = w.cols();
  Mat v = Mat::identity(n);

  const double eps = 1e-15;
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (int i = 0; i < m; ++i) {
          app += w(i, p) * w(i, p);
          aqq += w(i, q) * w(i, q);
          apq += w(i, p) * w(i, q);
        }
        off = std::max(off, std::abs(apq) / std::max(std::sqrt(app * aqq), 1e-300));
        if (std::abs(apq) <= eps * std::sqrt(app * aqq)) continue;
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int i = 0; i < m; ++i) {
          const double wp = w(i, p), wq = w(i, q);
          w(i, p) = c * wp - s * wq;
          w(i, q) = s * wp + c * wq;
        }
        for (int i = 0; i < n; ++i) {
          const double vp = v(i, p), vq = v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (off < eps) break;
  }

  Vec sigma(n, 0.0);
  Mat u(m, n);
  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += w(i, j) * w(i, j);
    sigma[j] = std::sqrt(s);
    order[j] = j;
  }
  std::sort(order.begin(), order.end(), [&](int x, int y) { return sigma[x] > sigma[y]; });

  Vec sigma_sorted(n);
  Mat v_sorted(n, n);
  for (int j = 0; j < n; ++j) {
    const int src = order[j];
    sigma_sorted[j] = sigma[src];
    for (int i = 0; i < n; ++i) v_sorted(i, j) = v(i, src);
    if (sigma[src] > 0.0) {
      for (int i = 0; i < m; ++i) u(i, j) = w(i, src) / sigma[src];
    }
  }

  if (transposed) return Svd{std::move(v_sorted), std::move(sigma_sorted), std::move(u)};
  return Svd{std::move(u), std::move(sigma_sorted), std::move(v_sorted)};
}

Mat null_space(const Mat& a, double tol) {
  const int n = a.cols();
  // Pad wide matrices with zero rows: the kernel and the singular values are
  // unchanged, and the square factorization exposes all n columns of V.
  Mat work = a;
  if (a.rows() < n) {
    work = Mat(n, n);
    work.set_block(0, 0, a);
  }
  Svd svd = jacobi_svd(work);
  std::vector<int> keep;
  for (int j = 0; j < static_cast<int>(svd.sigma.size()); ++j)
    if (svd.sigma[j] <= tol) keep.push_back(j);
  Mat out(n, static_cast<int>(keep.size()));
  for (int idx = 0; idx < static_cast<int>(keep.size()); ++idx)
    for (int i = 0; i < n; ++i) out(i, idx) = svd.v(i, keep[idx]);
  return out;
}

Mat polar_orthogonal(const Mat& a) {
  require_square(a, "polar_orthogonal");
  Mat x = a;
  for (int iter = 0; iter < 60; ++iter) {
    Mat xinv_t = inverse(x).transpose();
    Mat next = 0.5 * (x + xinv_t);
    const double delta = (next - x).frob_norm();
    x = std::move(next);
    if (delta <= 1e-15 * std::max(1.0, x.frob_norm())) break;
  }
  return x;
}

Mat cholesky(const Mat& g) {
  require_square(g, "cholesky");
  const int n = g.rows();
  Mat l(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = g(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (i == j) {
        if (s <= 0.0) throw NotPositiveDefinite("cholesky: matrix not positive definite");
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return l;
}

}  // namespace homroll
