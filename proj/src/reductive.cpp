#include "homroll/reductive.hpp"

#include <algorithm>
#include <cmath>

#include "homroll/expm.hpp"
#include "homroll/tolerances.hpp"

namespace homroll {

namespace {

double relative_sigma_min(const Mat& a) {
  Svd svd = jacobi_svd(a);
  if (svd.sigma.empty()) return 1.0;
  const double smax = svd.sigma.front();
  if (!(smax > 0.0)) return 0.0;
  return svd.sigma.back() / smax;
}

}  // namespace

ReductiveSpace ReductiveSpace::make(LieGroupPtr group, std::vector<AlgebraElement> h_basis,
                                    std::vector<AlgebraElement> m_basis, Mat scalar_product,
                                    std::vector<GroupElement> h_samples) {
  const int dim_g = group->dim();
  if (static_cast<int>(h_basis.size() + m_basis.size()) != dim_g)
    throw SingularSplit("ReductiveSpace: h and m do not span the algebra");
  if (scalar_product.rows() != dim_g || scalar_product.cols() != dim_g)
    throw Error("ReductiveSpace: scalar product has wrong shape");
  for (const auto& e : h_basis)
    if (e.group != group) throw Error("ReductiveSpace: h basis from another group");
  for (const auto& e : m_basis)
    if (e.group != group) throw Error("ReductiveSpace: m basis from another group");

  ReductiveSpace sp;
  sp.group_ = std::move(group);
  sp.h_basis_ = std::move(h_basis);
  sp.m_basis_ = std::move(m_basis);
  sp.scalar_product_ = std::move(scalar_product);
  sp.h_samples_ = std::move(h_samples);

  const int dh = sp.dim_h();
  const int dm = sp.dim_m();

  // Joint coordinate matrix [H | M]; its inverse performs the split.
  Mat joint(dim_g, dim_g);
  for (int j = 0; j < dh; ++j)
    for (int i = 0; i < dim_g; ++i) joint(i, j) = sp.h_basis_[j].coords[i];
  for (int j = 0; j < dm; ++j)
    for (int i = 0; i < dim_g; ++i) joint(i, dh + j) = sp.m_basis_[j].coords[i];
  if (dim_g > 0) {
    if (relative_sigma_min(joint) < tol::kSplitSingular)
      throw SingularSplit("ReductiveSpace: joint (h, m) basis is numerically singular");
    sp.joint_inv_ = inverse(joint);
  }

  // Gram matrices; a degenerate h or m under the scalar product is rejected.
  auto gram_of = [&](const std::vector<AlgebraElement>& basis) {
    const int d = static_cast<int>(basis.size());
    Mat g(d, d);
    for (int i = 0; i < d; ++i) {
      const Vec gi = sp.scalar_product_.apply(basis[i].coords);
      for (int j = 0; j < d; ++j) g(i, j) = vec_dot(gi, basis[j].coords);
    }
    return g;
  };
  sp.m_gram_ = gram_of(sp.m_basis_);
  if (dm > 0 && relative_sigma_min(sp.m_gram_) < tol::kSplitSingular)
    throw SingularSplit("ReductiveSpace: m-Gram is singular (degenerate scalar product on m)");
  if (dh > 0 && relative_sigma_min(gram_of(sp.h_basis_)) < tol::kSplitSingular)
    throw SingularSplit("ReductiveSpace: h is degenerate for the scalar product");

  return sp;
}

Vec ReductiveSpace::project_m_coords(const AlgebraElement& x) const {
  if (x.group != group_) throw Error("project_m: element from another group");
  const Vec split = joint_inv_.apply(x.coords);
  return Vec(split.begin() + dim_h(), split.end());
}

Vec ReductiveSpace::project_h_coords(const AlgebraElement& x) const {
  if (x.group != group_) throw Error("project_h: element from another group");
  const Vec split = joint_inv_.apply(x.coords);
  return Vec(split.begin(), split.begin() + dim_h());
}

AlgebraElement ReductiveSpace::project_m(const AlgebraElement& x) const {
  return m_element(project_m_coords(x));
}

AlgebraElement ReductiveSpace::project_h(const AlgebraElement& x) const {
  const Vec hc = project_h_coords(x);
  Vec coords(static_cast<std::size_t>(group_->dim()), 0.0);
  Mat mat(group_->ambient_dim(), group_->ambient_dim());
  for (int j = 0; j < dim_h(); ++j) {
    vec_axpy(hc[j], h_basis_[j].coords, coords);
    vec_axpy(hc[j], h_basis_[j].mat.entries(), std::span<double>(mat.data(), mat.size()));
  }
  return AlgebraElement{group_, std::move(mat), std::move(coords)};
}

Mat ReductiveSpace::m_to_ambient(std::span<const double> m_coords) const {
  if (static_cast<int>(m_coords.size()) != dim_m()) throw Error("m_to_ambient: wrong size");
  Mat out(group_->ambient_dim(), group_->ambient_dim());
  for (int j = 0; j < dim_m(); ++j)
    vec_axpy(m_coords[j], m_basis_[j].mat.entries(), std::span<double>(out.data(), out.size()));
  return out;
}

AlgebraElement ReductiveSpace::m_element(std::span<const double> m_coords) const {
  if (static_cast<int>(m_coords.size()) != dim_m()) throw Error("m_element: wrong size");
  Vec coords(static_cast<std::size_t>(group_->dim()), 0.0);
  for (int j = 0; j < dim_m(); ++j) vec_axpy(m_coords[j], m_basis_[j].coords, coords);
  return AlgebraElement{group_, m_to_ambient(m_coords), std::move(coords)};
}

Vec ReductiveSpace::m_coords_checked(const AlgebraElement& x, double tol) const {
  const Vec split = joint_inv_.apply(x.coords);
  double h_part = 0.0;
  for (int i = 0; i < dim_h(); ++i) h_part += split[i] * split[i];
  h_part = std::sqrt(h_part);
  if (h_part > tol * std::max(1.0, vec_norm(x.coords)))
    throw NotClosed("m_coords_checked: element leaves m (h-component " +
                    std::to_string(h_part) + ")");
  return Vec(split.begin() + dim_h(), split.end());
}

double ReductiveSpace::m_inner(std::span<const double> x, std::span<const double> y) const {
  return vec_dot(m_gram_.apply(x), y);
}

std::vector<AlgebraElement> orthogonal_complement_m(const LieGroupPtr& group,
                                                    const std::vector<AlgebraElement>& h_basis,
                                                    const Mat& scalar_product) {
  const int dim_g = group->dim();
  const int dh = static_cast<int>(h_basis.size());
  if (dh == 0) {
    std::vector<AlgebraElement> full;
    for (int j = 0; j < dim_g; ++j) {
      Vec c(static_cast<std::size_t>(dim_g), 0.0);
      c[j] = 1.0;
      full.push_back(algebra_element_from_coords(group, c));
    }
    return full;
  }
  // m = { x : <h_i, x> = 0 } is the kernel of H^T * Gram.
  Mat ht_g(dh, dim_g);
  for (int i = 0; i < dh; ++i) {
    const Vec row = scalar_product.apply(h_basis[i].coords);
    for (int j = 0; j < dim_g; ++j) ht_g(i, j) = row[j];
  }
  Mat kernel = null_space(ht_g, tol::kNullSpaceSingular);
  if (kernel.cols() != dim_g - dh)
    throw SingularSplit("orthogonal_complement_m: h is degenerate for the scalar product");
  std::vector<AlgebraElement> m_basis;
  for (int j = 0; j < kernel.cols(); ++j) {
    Vec c(static_cast<std::size_t>(dim_g));
    for (int i = 0; i < dim_g; ++i) c[i] = kernel(i, j);
    m_basis.push_back(algebra_element_from_coords(group, c));
  }
  return m_basis;
}

std::vector<GroupElement> sample_subgroup_elements(const LieGroupPtr& group,
                                                   const std::vector<AlgebraElement>& h_basis,
                                                   int count, std::uint64_t seed) {
  std::vector<GroupElement> out;
  if (h_basis.empty()) {
    out.push_back(group_identity(group));
    return out;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < count; ++s) {
    Vec weights(h_basis.size());
    for (double& w : weights) w = gauss(rng);
    Mat x(group->ambient_dim(), group->ambient_dim());
    for (std::size_t j = 0; j < h_basis.size(); ++j)
      vec_axpy(weights[j], h_basis[j].mat.entries(), std::span<double>(x.data(), x.size()));
    const double n = x.frob_norm();
    if (n > 0.0) x *= 1.0 / n;
    out.push_back(group_element(group, mat_exp(x)));
  }
  return out;
}

Vec alpha_apply(const AlphaMap& alpha, std::span<const double> x, std::span<const double> y,
                const ReductiveSpace& space) {
  const int dm = space.dim_m();
  if (static_cast<int>(x.size()) != dm || static_cast<int>(y.size()) != dm)
    throw Error("alpha_apply: wrong coordinate size");
  switch (alpha.kind) {
    case AlphaMap::Kind::CanonicalSecond:
      return Vec(static_cast<std::size_t>(dm), 0.0);
    case AlphaMap::Kind::CanonicalFirst: {
      const Mat xm = space.m_to_ambient(x);
      const Mat ym = space.m_to_ambient(y);
      const AlgebraElement br = algebra_element(space.group_ptr(), xm * ym - ym * xm);
      Vec out = space.project_m_coords(br);
      vec_scale(0.5, out);
      return out;
    }
    case AlphaMap::Kind::Custom: {
      if (static_cast<int>(alpha.custom_table.size()) != dm)
        throw Error("alpha_apply: custom table has wrong size");
      Vec out(static_cast<std::size_t>(dm), 0.0);
      for (int i = 0; i < dm; ++i) {
        if (x[i] == 0.0) continue;
        const Vec contrib = alpha.custom_table[i].apply(y);
        vec_axpy(x[i], contrib, out);
      }
      return out;
    }
  }
  throw Error("alpha_apply: unknown kind");
}

Mat alpha_operator(const AlphaMap& alpha, std::span<const double> x, const ReductiveSpace& space) {
  const int dm = space.dim_m();
  Mat op(dm, dm);
  Vec ej(static_cast<std::size_t>(dm), 0.0);
  for (int j = 0; j < dm; ++j) {
    ej[j] = 1.0;
    const Vec col = alpha_apply(alpha, x, ej, space);
    for (int i = 0; i < dm; ++i) op(i, j) = col[i];
    ej[j] = 0.0;
  }
  return op;
}

bool alpha_is_metric(const AlphaMap& alpha, const ReductiveSpace& space) {
  const int dm = space.dim_m();
  const Mat& gram = space.m_gram();
  const double scale = std::max(1.0, gram.max_abs());
  Vec ei(static_cast<std::size_t>(dm), 0.0);
  for (int i = 0; i < dm; ++i) {
    ei[i] = 1.0;
    const Mat op = alpha_operator(alpha, ei, space);
    // skew-adjointness for the Gram: G*A + A^T*G = 0
    const Mat sym = gram * op + op.transpose() * gram;
    ei[i] = 0.0;
    if (sym.max_abs() > tol::kAlphaMetricSkew * scale) return false;
  }
  return true;
}

SteppedSolution parallel_transport_path(const AlphaMap& alpha,
                                        const std::function<Vec(double)>& x_curve,
                                        std::span<const double> z0, double t0, double t1,
                                        int steps, const ReductiveSpace& space) {
  OdeRhs rhs = [&](double t, std::span<const double> z, std::span<double> dz) {
    const Vec x = x_curve(t);
    const Vec a = alpha_apply(alpha, x, z, space);
    for (std::size_t i = 0; i < dz.size(); ++i) dz[i] = -a[i];
  };
  return integrate_fixed(rhs, t0, t1, z0, steps);
}

Vec parallel_transport(const AlphaMap& alpha, const std::function<Vec(double)>& x_curve,
                       std::span<const double> z0, double t0, double t1, int steps,
                       const ReductiveSpace& space) {
  return parallel_transport_path(alpha, x_curve, z0, t0, t1, steps, space).states.back();
}

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

ValidationReport validate_space(const ReductiveSpace& space, const AlphaMap& alpha) {
  ValidationReport report;
  auto add_at_most = [&](std::string name, double measure, double threshold) {
    report.checks.push_back({std::move(name), measure, threshold, false, measure <= threshold});
  };
  auto add_at_least = [&](std::string name, double measure, double threshold) {
    report.checks.push_back({std::move(name), measure, threshold, true, measure >= threshold});
  };

  const LieGroup& g = space.group();
  const int dim_g = g.dim();

  // Basis independence of the group algebra.
  if (dim_g > 0) {
    Mat gram(dim_g, dim_g);
    for (int i = 0; i < dim_g; ++i)
      for (int j = 0; j < dim_g; ++j)
        gram(i, j) = vec_dot(g.basis()[i].entries(), g.basis()[j].entries());
    Mat norm_gram = gram;
    for (int i = 0; i < dim_g; ++i)
      for (int j = 0; j < dim_g; ++j)
        norm_gram(i, j) /= std::sqrt(gram(i, i) * gram(j, j));
    add_at_least("group_basis_independent", std::abs(determinant(norm_gram)),
                 tol::kBasisIndependence);

    double worst = 0.0;
    for (const Mat& b : g.basis())
      for (double t : {0.25, 0.5, 1.0})
        worst = std::max(worst, g.membership_residual(mat_exp(t * b)));
    add_at_most("exp_membership", worst, g.membership_tol());
  }

  // [h, h] subset h.
  {
    double worst = 0.0;
    for (int i = 0; i < space.dim_h(); ++i) {
      for (int j = i + 1; j < space.dim_h(); ++j) {
        AlgebraElement a = space.h_basis()[i];
        AlgebraElement b = space.h_basis()[j];
        const double scale = std::max(1.0, a.mat.frob_norm() * b.mat.frob_norm());
        const AlgebraElement br = bracket(a, b);
        const Vec m_part = space.project_m_coords(br);
        worst = std::max(worst, space.m_to_ambient(m_part).frob_norm() / scale);
      }
    }
    add_at_most("h_subalgebra", worst, tol::kSubalgebraClosure);
  }

  // Ad_h(m) subset m for sampled h.
  {
    double worst = 0.0;
    for (const GroupElement& h : space.h_samples()) {
      for (const AlgebraElement& mb : space.m_basis()) {
        const AlgebraElement moved = Ad(h, mb);
        const AlgebraElement h_part = space.project_h(moved);
        worst = std::max(worst, h_part.mat.frob_norm() / std::max(1.0, mb.mat.frob_norm()));
      }
    }
    add_at_most("reductivity", worst, tol::kReductivity);
  }

  add_at_least("m_gram_nonsingular", relative_sigma_min(space.m_gram()), tol::kSplitSingular);

  // Ad(H)-invariance of alpha on sampled h and basis pairs.
  {
    double worst = 0.0;
    for (const GroupElement& h : space.h_samples()) {
      // m-coordinates of Ad_h restricted to m
      std::vector<Vec> ad_cols;
      for (const AlgebraElement& mb : space.m_basis())
        ad_cols.push_back(space.project_m_coords(Ad(h, mb)));
      auto ad_apply = [&](std::span<const double> c) {
        Vec out(c.size(), 0.0);
        for (std::size_t j = 0; j < c.size(); ++j) vec_axpy(c[j], ad_cols[j], out);
        return out;
      };
      for (int i = 0; i < space.dim_m(); ++i) {
        for (int j = 0; j < space.dim_m(); ++j) {
          Vec ei(static_cast<std::size_t>(space.dim_m()), 0.0), ej = ei;
          ei[i] = 1.0;
          ej[j] = 1.0;
          const Vec lhs = ad_apply(alpha_apply(alpha, ei, ej, space));
          const Vec rhs = alpha_apply(alpha, ad_apply(ei), ad_apply(ej), space);
          worst = std::max(worst, vec_norm(vec_sub(lhs, rhs)));
        }
      }
    }
    add_at_most("alpha_invariance", worst, tol::kAlphaInvariance);
  }

  return report;
}

}  // namespace homroll
