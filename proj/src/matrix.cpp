#include "homroll/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "homroll/kernels.hpp"

namespace homroll {

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {
  if (rows < 0 || cols < 0) throw Error("Mat: negative dimension");
}

Mat::Mat(int rows, int cols, Vec entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw Error("Mat: negative dimension");
  if (a_.size() != static_cast<std::size_t>(rows) * cols)
    throw Error("Mat: entry count does not match dimensions");
  require_finite(*this, "Mat");
}

Mat::Mat(int rows, int cols, std::initializer_list<double> entries)
    : Mat(rows, cols, Vec(entries)) {}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Mat::trace() const {
  require_square(*this, "trace");
  double s = 0.0;
  for (int i = 0; i < rows_; ++i) s += (*this)(i, i);
  return s;
}

double Mat::frob_norm() const { return std::sqrt(vec_dot(a_, a_)); }

double Mat::one_norm() const {
  double best = 0.0;
  for (int j = 0; j < cols_; ++j) {
    double s = 0.0;
    for (int i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

double Mat::max_abs() const {
  double best = 0.0;
  for (double x : a_) best = std::max(best, std::abs(x));
  return best;
}

bool Mat::all_finite() const { return vec_all_finite(a_); }

Mat Mat::block(int row0, int col0, int nrows, int ncols) const {
  Mat out(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
  return out;
}

void Mat::set_block(int row0, int col0, const Mat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) (*this)(row0 + i, col0 + j) = m(i, j);
}

Mat& Mat::operator+=(const Mat& o) {
  kernels::axpy(static_cast<int>(a_.size()), 1.0, o.a_.data(), a_.data());
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  kernels::axpy(static_cast<int>(a_.size()), -1.0, o.a_.data(), a_.data());
  return *this;
}

Mat& Mat::operator*=(double s) {
  kernels::scal(static_cast<int>(a_.size()), s, a_.data());
  return *this;
}

Mat Mat::operator-() const {
  Mat out = *this;
  out *= -1.0;
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw Error("Mat multiply: dimension mismatch");
  Mat c(a.rows(), b.cols());
  kernels::gemm(a.rows(), a.cols(), b.cols(), a.data(), b.data(), c.data());
  return c;
}

Vec Mat::apply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != cols_) throw Error("Mat apply: dimension mismatch");
  Vec y(rows_, 0.0);
  kernels::gemm(rows_, cols_, 1, data(), x.data(), y.data());
  return y;
}

void require_square(const Mat& m, const char* where) {
  if (!m.square()) throw NonSquare(std::string(where) + ": matrix is not square");
}

void require_finite(const Mat& m, const char* where) {
  if (!m.all_finite()) throw NonFinite(std::string(where) + ": non-finite entries");
}

double vec_dot(std::span<const double> x, std::span<const double> y) {
  return kernels::dot(static_cast<int>(x.size()), x.data(), y.data());
}

double vec_norm(std::span<const double> x) { return std::sqrt(vec_dot(x, x)); }

void vec_axpy(double alpha, std::span<const double> x, std::span<double> y) {
  kernels::axpy(static_cast<int>(x.size()), alpha, x.data(), y.data());
}

void vec_scale(double alpha, std::span<double> x) {
  kernels::scal(static_cast<int>(x.size()), alpha, x.data());
}

bool vec_all_finite(std::span<const double> x) {
  for (double v : x)
    if (!std::isfinite(v)) return false;
  return true;
}

Vec vec_sub(std::span<const double> x, std::span<const double> y) {
  Vec out(x.begin(), x.end());
  vec_axpy(-1.0, y, out);
  return out;
}

}  // namespace homroll
