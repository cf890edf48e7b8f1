#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "homroll/errors.hpp"

namespace homroll {

using Vec = std::vector<double>;

// Dense real matrix, row-major. The single numeric carrier for group
// elements, algebra elements and linear maps; sizes stay small (ambient
// dimensions of matrix groups), so everything is stored by value.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols);  // zero-filled
  Mat(int rows, int cols, Vec entries);  // checked: size and finiteness
  Mat(int rows, int cols, std::initializer_list<double> entries);

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  std::size_t size() const { return a_.size(); }

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }
  const Vec& entries() const { return a_; }

  Mat transpose() const;
  double trace() const;
  double frob_norm() const;
  double one_norm() const;  // max absolute column sum
  double max_abs() const;
  bool all_finite() const;

  Mat block(int row0, int col0, int nrows, int ncols) const;
  void set_block(int row0, int col0, const Mat& m);

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(double s);

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, double s) { return a *= s; }
  friend Mat operator*(double s, Mat a) { return a *= s; }
  Mat operator-() const;
  friend Mat operator*(const Mat& a, const Mat& b);  // kernels::gemm

  Vec apply(std::span<const double> x) const;  // y = A x

 private:
  int rows_ = 0;
  int cols_ = 0;
  Vec a_;
};

void require_square(const Mat& m, const char* where);
void require_finite(const Mat& m, const char* where);

// Vector helpers shared by the integrators.
double vec_dot(std::span<const double> x, std::span<const double> y);
double vec_norm(std::span<const double> x);
void vec_axpy(double alpha, std::span<const double> x, std::span<double> y);
void vec_scale(double alpha, std::span<double> x);
bool vec_all_finite(std::span<const double> x);
Vec vec_sub(std::span<const double> x, std::span<const double> y);

}  // namespace homroll
