#include "homroll/spaces.hpp"

#include <cmath>

#include "homroll/expm.hpp"
#include "homroll/tolerances.hpp"

namespace homroll {

namespace {

std::vector<Mat> so_basis(int n) {
  std::vector<Mat> basis;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Mat e(n, n);
      e(i, j) = -1.0;
      e(j, i) = 1.0;
      basis.push_back(std::move(e));
    }
  }
  return basis;
}

Mat neg_trace_gram(const std::vector<Mat>& basis) {
  const int d = static_cast<int>(basis.size());
  Mat gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) {
      const double value = -(basis[i] * basis[j]).trace();
      gram(i, j) = value;
      gram(j, i) = value;
    }
  return gram;
}

Mat embed_block(int total, int offset, const Mat& m) {
  Mat out(total, total);
  out.set_block(offset, offset, m);
  return out;
}

}  // namespace

LieGroupPtr make_so_n(int n) {
  if (n < 2) throw Error("make_so_n: need n >= 2");
  return LieGroup::make("SO(" + std::to_string(n) + ")", n, so_basis(n),
                        Retraction::PolarOrthogonal, tol::kMembershipDefault);
}

SpaceInstance make_group_as_reductive(LieGroupPtr group) {
  const int d = group->dim();
  std::vector<AlgebraElement> m_basis;
  for (int j = 0; j < d; ++j) {
    Vec c(static_cast<std::size_t>(d), 0.0);
    c[j] = 1.0;
    m_basis.push_back(algebra_element_from_coords(group, c));
  }
  Mat scalar = neg_trace_gram(group->basis());
  std::vector<GroupElement> samples{group_identity(group)};
  ReductiveSpace space =
      ReductiveSpace::make(group, {}, std::move(m_basis), std::move(scalar), std::move(samples));

  EmbeddingMap embedding;
  embedding.rows = group->ambient_dim();
  embedding.cols = group->ambient_dim();
  embedding.into_ambient = [](const Mat& g) { return g; };
  const LieGroupPtr gptr = group;
  embedding.tangent_push = [gptr](const Mat& g, std::span<const double> m_coords) {
    return g * gptr->from_coords(m_coords);
  };

  return SpaceInstance{group->name() + "/{e}", std::move(space), std::move(embedding)};
}

SpaceInstance make_symmetric_pair(const LieGroupPtr& group, std::uint64_t seed) {
  const int n = group->ambient_dim();
  const int d = group->dim();

  // Basis ordered as [diagonal (X, X) part | anti-diagonal (X, -X) part].
  std::vector<Mat> pair_basis;
  for (const Mat& e : group->basis()) {
    Mat b(2 * n, 2 * n);
    b.set_block(0, 0, e);
    b.set_block(n, n, e);
    pair_basis.push_back(std::move(b));
  }
  for (const Mat& e : group->basis()) {
    Mat b(2 * n, 2 * n);
    b.set_block(0, 0, e);
    b.set_block(n, n, -e);
    pair_basis.push_back(std::move(b));
  }
  LieGroupPtr pair_group = LieGroup::make(group->name() + "x" + group->name(), 2 * n,
                                          std::move(pair_basis), Retraction::PolarOrthogonal,
                                          group->membership_tol());

  std::vector<AlgebraElement> h_basis, m_basis;
  for (int j = 0; j < d; ++j) {
    Vec c(static_cast<std::size_t>(2 * d), 0.0);
    c[j] = 1.0;
    h_basis.push_back(algebra_element_from_coords(pair_group, c));
  }
  for (int j = 0; j < d; ++j) {
    Vec c(static_cast<std::size_t>(2 * d), 0.0);
    c[static_cast<std::size_t>(d) + j] = 1.0;
    m_basis.push_back(algebra_element_from_coords(pair_group, c));
  }

  Mat scalar = neg_trace_gram(pair_group->basis());
  std::vector<GroupElement> samples = sample_subgroup_elements(pair_group, h_basis, 8, seed);
  ReductiveSpace space = ReductiveSpace::make(pair_group, std::move(h_basis), std::move(m_basis),
                                              std::move(scalar), std::move(samples));

  EmbeddingMap embedding;
  embedding.rows = n;
  embedding.cols = n;
  embedding.into_ambient = [n](const Mat& g) {
    const Mat g1 = g.block(0, 0, n, n);
    const Mat g2 = g.block(n, n, n, n);
    return g1 * inverse(g2);
  };
  const LieGroupPtr base = group;
  embedding.tangent_push = [n, base](const Mat& g, std::span<const double> m_coords) {
    // (Z, -Z) at (g1, g2) maps to g1 (2 Z) g2^{-1}.
    const Mat g1 = g.block(0, 0, n, n);
    const Mat g2 = g.block(n, n, n, n);
    const Mat z = base->from_coords(m_coords);
    return g1 * (2.0 * z) * inverse(g2);
  };

  return SpaceInstance{"(" + group->name() + "x" + group->name() + ")/Delta", std::move(space),
                       std::move(embedding)};
}

StiefelAlphaSpace make_stiefel(int n, int k, double alpha_param, const Mat* base_point,
                               std::uint64_t seed) {
  if (k < 1 || k > n) throw Error("make_stiefel: need 1 <= k <= n");
  if (alpha_param == 0.0 || alpha_param == -1.0)
    throw BadAlpha("make_stiefel: alpha-metric is degenerate for alpha in {0, -1}");

  Mat x0(n, k);
  if (base_point) {
    x0 = *base_point;
    if (x0.rows() != n || x0.cols() != k) throw BadBasePoint("make_stiefel: X0 has wrong shape");
    if ((x0.transpose() * x0 - Mat::identity(k)).frob_norm() > 1e-12)
      throw BadBasePoint("make_stiefel: X0 columns are not orthonormal");
  } else {
    for (int i = 0; i < k; ++i) x0(i, i) = 1.0;
  }

  // G = O(n) x O(k), block diagonal in dimension n + k.
  const int total = n + k;
  const std::vector<Mat> so_n = so_basis(n);
  const std::vector<Mat> so_k = so_basis(k);
  std::vector<Mat> basis;
  basis.reserve(so_n.size() + so_k.size());
  for (const Mat& e : so_n) basis.push_back(embed_block(total, 0, e));
  for (const Mat& e : so_k) basis.push_back(embed_block(total, n, e));
  LieGroupPtr group = LieGroup::make(
      "O(" + std::to_string(n) + ")xO(" + std::to_string(k) + ")", total, std::move(basis),
      Retraction::PolarOrthogonal, tol::kMembershipDefault);
  const int dim_g = group->dim();

  // h = ker of (Omega, eta) -> Omega X0 - X0 eta, solved in coordinates.
  Mat stab(n * k, dim_g);
  for (int j = 0; j < dim_g; ++j) {
    const Mat& b = group->basis()[j];
    const Mat omega = b.block(0, 0, n, n);
    const Mat eta = b.block(n, n, k, k);
    const Mat img = omega * x0 - x0 * eta;
    for (int i = 0; i < n * k; ++i) stab(i, j) = img.data()[i];
  }
  const Mat h_coords = null_space(stab, tol::kNullSpaceSingular);
  const int dim_st = n * k - k * (k + 1) / 2;
  if (h_coords.cols() != dim_g - dim_st)
    throw Error("make_stiefel: stabilizer algebra has unexpected dimension");

  std::vector<AlgebraElement> h_basis;
  for (int j = 0; j < h_coords.cols(); ++j) {
    Vec c(static_cast<std::size_t>(dim_g));
    for (int i = 0; i < dim_g; ++i) c[i] = h_coords(i, j);
    h_basis.push_back(algebra_element_from_coords(group, c));
  }

  // Scalar product <(O1,e1),(O2,e2)> = -tr(O1 O2) - tr(e1 e2)/alpha.
  Mat scalar(dim_g, dim_g);
  for (int i = 0; i < dim_g; ++i) {
    const Mat& bi = group->basis()[i];
    const Mat oi = bi.block(0, 0, n, n);
    const Mat ei = bi.block(n, n, k, k);
    for (int j = 0; j <= i; ++j) {
      const Mat& bj = group->basis()[j];
      const double value = -(oi * bj.block(0, 0, n, n)).trace() -
                           (ei * bj.block(n, n, k, k)).trace() / alpha_param;
      scalar(i, j) = value;
      scalar(j, i) = value;
    }
  }

  std::vector<AlgebraElement> m_basis = orthogonal_complement_m(group, h_basis, scalar);
  if (static_cast<int>(m_basis.size()) != dim_st)
    throw Error("make_stiefel: m has unexpected dimension");
  std::vector<GroupElement> samples = sample_subgroup_elements(group, h_basis, 8, seed);
  ReductiveSpace space = ReductiveSpace::make(group, std::move(h_basis), std::move(m_basis),
                                              std::move(scalar), std::move(samples));

  EmbeddingMap embedding;
  embedding.rows = n;
  embedding.cols = k;
  const Mat x0_copy = x0;
  embedding.into_ambient = [n, k, x0_copy](const Mat& g) {
    const Mat r = g.block(0, 0, n, n);
    const Mat theta = g.block(n, n, k, k);
    return r * x0_copy * theta.transpose();
  };
  std::vector<Mat> m_mats;
  m_mats.reserve(space.m_basis().size());
  for (const AlgebraElement& mb : space.m_basis()) m_mats.push_back(mb.mat);
  embedding.tangent_push = [n, k, x0_copy, m_mats](const Mat& g, std::span<const double> m_coords) {
    Mat z(n + k, n + k);
    for (std::size_t j = 0; j < m_coords.size(); ++j)
      vec_axpy(m_coords[j], m_mats[j].entries(), std::span<double>(z.data(), z.size()));
    const Mat omega = z.block(0, 0, n, n);
    const Mat eta = z.block(n, n, k, k);
    const Mat r = g.block(0, 0, n, n);
    const Mat theta = g.block(n, n, k, k);
    return r * (omega * x0_copy - x0_copy * eta) * theta.transpose();
  };

  const ValidationReport report = validate_space(space, AlphaMap::canonical_first());
  if (!report.all_pass()) throw Error("make_stiefel: constructed space fails validation");

  return StiefelAlphaSpace{n, k, alpha_param, x0,
                           SpaceInstance{"St(" + std::to_string(n) + "," + std::to_string(k) + ")",
                                         std::move(space), std::move(embedding)}};
}

std::pair<Mat, Mat> stiefel_project_m(const StiefelAlphaSpace& sp, const Mat& omega,
                                      const Mat& eta) {
  if (omega.rows() != sp.n || omega.cols() != sp.n || eta.rows() != sp.k || eta.cols() != sp.k)
    throw Error("stiefel_project_m: wrong shapes");
  const double skew_tol = 1e-12;
  if ((omega + omega.transpose()).frob_norm() > skew_tol * std::max(1.0, omega.frob_norm()) ||
      (eta + eta.transpose()).frob_norm() > skew_tol * std::max(1.0, eta.frob_norm()))
    throw NotSkew("stiefel_project_m: inputs must be skew-symmetric");

  const Mat& x = sp.base_point;
  const Mat xxt = x * x.transpose();
  const double a = sp.alpha_param;
  const Mat omega_perp = xxt * omega + omega * xxt -
                         ((2.0 * a + 1.0) / (a + 1.0)) * (xxt * omega * xxt) -
                         (1.0 / (a + 1.0)) * (x * eta * x.transpose());
  const Mat eta_perp = (a / (a + 1.0)) * (eta - x.transpose() * omega * x);
  return {omega_perp, eta_perp};
}

std::pair<Mat, Mat> stiefel_tangent_lift(const StiefelAlphaSpace& sp, const Mat& v) {
  if (v.rows() != sp.n || v.cols() != sp.k) throw Error("stiefel_tangent_lift: wrong shape");
  const Mat& x = sp.base_point;
  if ((x.transpose() * v + v.transpose() * x).frob_norm() > 1e-10 * std::max(1.0, v.frob_norm()))
    throw NotTangent("stiefel_tangent_lift: V is not tangent at X0");
  const double a = sp.alpha_param;
  const Mat omega = v * x.transpose() - x * v.transpose() +
                    ((2.0 * a + 1.0) / (a + 1.0)) * (x * v.transpose() * x * x.transpose());
  const Mat eta = (-a / (a + 1.0)) * (x.transpose() * v);
  return {omega, eta};
}

Mat stiefel_pair_to_ambient(const StiefelAlphaSpace& sp, const Mat& omega, const Mat& eta) {
  Mat out(sp.n + sp.k, sp.n + sp.k);
  out.set_block(0, 0, omega);
  out.set_block(sp.n, sp.n, eta);
  return out;
}

std::pair<Mat, Mat> stiefel_ambient_to_pair(const StiefelAlphaSpace& sp, const Mat& ambient) {
  return {ambient.block(0, 0, sp.n, sp.n), ambient.block(sp.n, sp.n, sp.k, sp.k)};
}

RollingTrajectory stiefel_special_rolling(const StiefelAlphaSpace& sp, const Mat& xi1,
                                          const Mat& xi2, double t1, int samples) {
  const AlgebraElement xi =
      algebra_element(sp.instance.space.group_ptr(), stiefel_pair_to_ambient(sp, xi1, xi2));
  RollingTrajectory traj =
      closed_form_trajectory(AlphaMap::Kind::CanonicalFirst, sp.instance, xi, t1, samples);
  // Rolling-curve image V(t) = v1(t) X0 - X0 v2(t) alongside the development.
  traj.embedded_rolling.reserve(traj.states.size());
  const Mat identity_g = Mat::identity(sp.n + sp.k);
  for (const RollingState& st : traj.states)
    traj.embedded_rolling.push_back(sp.instance.embedding.tangent_push(identity_g, st.v));
  return traj;
}

}  // namespace homroll
