#pragma once

#include <memory>
#include <optional>
#include <string>

#include "homroll/linalg.hpp"
#include "homroll/matrix.hpp"

namespace homroll {

enum class Retraction { PolarOrthogonal, None };

// Matrix Lie group descriptor: ambient size, a basis of the Lie algebra and
// membership/retraction policy. Immutable after make(); share via pointer.
class LieGroup {
 public:
  static std::shared_ptr<const LieGroup> make(std::string name, int ambient_dim,
                                              std::vector<Mat> algebra_basis,
                                              Retraction retraction = Retraction::PolarOrthogonal,
                                              double membership_tol = 1e-9);

  const std::string& name() const { return name_; }
  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Mat>& basis() const { return basis_; }
  Retraction retraction() const { return retraction_; }
  double membership_tol() const { return membership_tol_; }

  // Least-squares coordinates of an ambient matrix in the algebra basis;
  // throws NotClosed when the projection residual exceeds the tolerance.
  Vec coords_of(const Mat& m, double residual_tol) const;
  Mat from_coords(std::span<const double> coords) const;

  double membership_residual(const Mat& g) const;  // ||g^T g - I||_F
  bool is_member(const Mat& g) const { return membership_residual(g) <= membership_tol_; }

 private:
  LieGroup() = default;

  std::string name_;
  int ambient_dim_ = 0;
  std::vector<Mat> basis_;
  Retraction retraction_ = Retraction::PolarOrthogonal;
  double membership_tol_ = 1e-9;
  std::optional<HouseholderQr> coords_qr_;  // vectorized basis, cached
};

using LieGroupPtr = std::shared_ptr<const LieGroup>;

struct AlgebraElement {
  LieGroupPtr group;
  Mat mat;     // ambient n x n
  Vec coords;  // coefficients in group->basis()
};

struct GroupElement {
  LieGroupPtr group;
  Mat mat;
};

AlgebraElement algebra_element(const LieGroupPtr& group, const Mat& mat);
AlgebraElement algebra_element_from_coords(const LieGroupPtr& group, std::span<const double> coords);
AlgebraElement algebra_zero(const LieGroupPtr& group);
GroupElement group_element(const LieGroupPtr& group, Mat mat);
GroupElement group_identity(const LieGroupPtr& group);
GroupElement group_exp(const AlgebraElement& x);

// [X, Y] = XY - YX with coordinates recomputed onto the basis.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

// Adjoint action g X g^{-1}.
AlgebraElement Ad(const GroupElement& g, const AlgebraElement& x);

// Matrix of Y -> [X, Y] in basis coordinates (dim x dim).
Mat ad_operator(const AlgebraElement& x);

// Drift correction after integration. PolarOrthogonal returns the nearest
// orthogonal matrix; requires ||g^T g - I||_F <= 0.5.
GroupElement retract_to_group(const Mat& g_raw, const LieGroupPtr& group);

}  // namespace homroll
