#include "homroll/lie.hpp"

#include <cmath>

#include "homroll/expm.hpp"
#include "homroll/tolerances.hpp"

namespace homroll {

namespace {

Mat vectorized_basis(const std::vector<Mat>& basis, int ambient_dim) {
  const int rows = ambient_dim * ambient_dim;
  Mat b(rows, static_cast<int>(basis.size()));
  for (int j = 0; j < static_cast<int>(basis.size()); ++j)
    for (int i = 0; i < rows; ++i) b(i, j) = basis[j].data()[i];
  return b;
}

}  // namespace

std::shared_ptr<const LieGroup> LieGroup::make(std::string name, int ambient_dim,
                                               std::vector<Mat> algebra_basis,
                                               Retraction retraction, double membership_tol) {
  if (ambient_dim < 1) throw Error("LieGroup: ambient_dim must be positive");
  for (const Mat& b : algebra_basis) {
    if (b.rows() != ambient_dim || b.cols() != ambient_dim)
      throw Error("LieGroup: basis element has wrong shape");
    require_finite(b, "LieGroup basis");
  }

  auto g = std::shared_ptr<LieGroup>(new LieGroup());
  g->name_ = std::move(name);
  g->ambient_dim_ = ambient_dim;
  g->basis_ = std::move(algebra_basis);
  g->retraction_ = retraction;
  g->membership_tol_ = membership_tol;

  if (!g->basis_.empty()) {
    // Linear independence: normalized Gram of the vectorized basis.
    const int d = g->dim();
    Mat gram(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        gram(i, j) = vec_dot(g->basis_[i].entries(), g->basis_[j].entries());
    Mat norm_gram = gram;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const double denom = std::sqrt(gram(i, i) * gram(j, j));
        if (!(denom > 0.0)) throw Error("LieGroup: zero basis element");
        norm_gram(i, j) /= denom;
      }
    if (std::abs(determinant(norm_gram)) < tol::kBasisIndependence)
      throw Error("LieGroup '" + g->name_ + "': algebra basis is not linearly independent");

    g->coords_qr_.emplace(vectorized_basis(g->basis_, ambient_dim));

    // exp(t b) must pass membership for sampled t; catches a basis that does
    // not generate the claimed group.
    for (const Mat& b : g->basis_) {
      for (double t : {0.25, 0.5, 1.0}) {
        const Mat e = mat_exp(t * b);
        if (g->membership_residual(e) > g->membership_tol_)
          throw Error("LieGroup '" + g->name_ + "': exp of basis element leaves the group");
      }
    }
  }
  return g;
}

Vec LieGroup::coords_of(const Mat& m, double residual_tol) const {
  if (m.rows() != ambient_dim_ || m.cols() != ambient_dim_)
    throw Error("coords_of: wrong shape");
  if (basis_.empty()) {
    if (m.frob_norm() > residual_tol)
      throw NotClosed("coords_of: nonzero element of a zero-dimensional algebra");
    return {};
  }
  double residual = 0.0;
  Vec c = coords_qr_->solve(m.entries(), &residual);
  if (residual > residual_tol * std::max(1.0, m.frob_norm()))
    throw NotClosed("coords_of: projection residual " + std::to_string(residual) +
                    " exceeds tolerance (invalid algebra basis?)");
  return c;
}

Mat LieGroup::from_coords(std::span<const double> coords) const {
  if (static_cast<int>(coords.size()) != dim()) throw Error("from_coords: wrong size");
  Mat out(ambient_dim_, ambient_dim_);
  for (std::size_t j = 0; j < coords.size(); ++j)
    vec_axpy(coords[j], basis_[j].entries(), std::span<double>(out.data(), out.size()));
  return out;
}

double LieGroup::membership_residual(const Mat& g) const {
  if (g.rows() != ambient_dim_ || g.cols() != ambient_dim_) return HUGE_VAL;
  return (g.transpose() * g - Mat::identity(ambient_dim_)).frob_norm();
}

AlgebraElement algebra_element(const LieGroupPtr& group, const Mat& mat) {
  Vec coords = group->coords_of(mat, tol::kCoordsClosure);
  return AlgebraElement{group, mat, std::move(coords)};
}

AlgebraElement algebra_element_from_coords(const LieGroupPtr& group,
                                           std::span<const double> coords) {
  return AlgebraElement{group, group->from_coords(coords), Vec(coords.begin(), coords.end())};
}

AlgebraElement algebra_zero(const LieGroupPtr& group) {
  return AlgebraElement{group, Mat(group->ambient_dim(), group->ambient_dim()),
                        Vec(static_cast<std::size_t>(group->dim()), 0.0)};
}

GroupElement group_element(const LieGroupPtr& group, Mat mat) {
  const double res = group->membership_residual(mat);
  if (res > group->membership_tol())
    throw TooFarFromGroup("group_element: membership residual " + std::to_string(res));
  return GroupElement{group, std::move(mat)};
}

GroupElement group_identity(const LieGroupPtr& group) {
  return GroupElement{group, Mat::identity(group->ambient_dim())};
}

GroupElement group_exp(const AlgebraElement& x) {
  return group_element(x.group, mat_exp(x.mat));
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.group != y.group) throw Error("bracket: mixed groups");
  return algebra_element(x.group, x.mat * y.mat - y.mat * x.mat);
}

AlgebraElement Ad(const GroupElement& g, const AlgebraElement& x) {
  if (g.group != x.group) throw Error("Ad: mixed groups");
  return algebra_element(x.group, g.mat * x.mat * inverse(g.mat));
}

Mat ad_operator(const AlgebraElement& x) {
  const int d = x.group->dim();
  Mat op(d, d);
  for (int j = 0; j < d; ++j) {
    const Mat& ej = x.group->basis()[j];
    const Vec col = x.group->coords_of(x.mat * ej - ej * x.mat, tol::kCoordsClosure);
    for (int i = 0; i < d; ++i) op(i, j) = col[i];
  }
  return op;
}

GroupElement retract_to_group(const Mat& g_raw, const LieGroupPtr& group) {
  require_finite(g_raw, "retract_to_group");
  if (group->retraction() == Retraction::None)
    return GroupElement{group, g_raw};
  const double drift = group->membership_residual(g_raw);
  if (drift > tol::kRetractMaxDistance)
    throw TooFarFromGroup("retract_to_group: residual " + std::to_string(drift) +
                          " exceeds " + std::to_string(tol::kRetractMaxDistance));
  return GroupElement{group, polar_orthogonal(g_raw)};
}

}  // namespace homroll
