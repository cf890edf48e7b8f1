#include "homroll/rolling.hpp"

#include <algorithm>
#include <cmath>

#include "homroll/expm.hpp"
#include "homroll/quadrature.hpp"
#include "homroll/tolerances.hpp"

namespace homroll {

namespace {

// Operator table for alpha bound to a space: op(x) = sum_i x_i rows[i].
struct AlphaTable {
  bool zero = false;
  int dm = 0;
  std::vector<Mat> rows;

  Mat op(std::span<const double> x) const {
    Mat out(dm, dm);
    if (zero) return out;
    for (int i = 0; i < dm; ++i)
      if (x[i] != 0.0)
        vec_axpy(x[i], rows[i].entries(), std::span<double>(out.data(), out.size()));
    return out;
  }
};

AlphaTable build_alpha_table(const AlphaMap& alpha, const ReductiveSpace& space) {
  AlphaTable table;
  table.dm = space.dim_m();
  table.zero = alpha.kind == AlphaMap::Kind::CanonicalSecond;
  if (table.zero) return table;
  Vec ei(static_cast<std::size_t>(table.dm), 0.0);
  for (int i = 0; i < table.dm; ++i) {
    ei[i] = 1.0;
    table.rows.push_back(alpha_operator(alpha, ei, space));
    ei[i] = 0.0;
  }
  return table;
}

// Matrix of Ad_h restricted to m, in m-basis coordinates.
Mat ad_matrix_on_m(const ReductiveSpace& space, const Mat& h_mat) {
  const int dm = space.dim_m();
  const Mat h_inv = inverse(h_mat);
  Mat out(dm, dm);
  for (int j = 0; j < dm; ++j) {
    const AlgebraElement moved =
        algebra_element(space.group_ptr(), h_mat * space.m_basis()[j].mat * h_inv);
    const Vec col = space.project_m_coords(moved);
    for (int i = 0; i < dm; ++i) out(i, j) = col[i];
  }
  return out;
}

// Matrix of pr_m o ad_w restricted to m, for an ambient algebra element w.
Mat projected_ad_on_m(const ReductiveSpace& space, const Mat& w) {
  const int dm = space.dim_m();
  Mat out(dm, dm);
  for (int j = 0; j < dm; ++j) {
    const Mat& mj = space.m_basis()[j].mat;
    const AlgebraElement br = algebra_element(space.group_ptr(), w * mj - mj * w);
    const Vec col = space.project_m_coords(br);
    for (int i = 0; i < dm; ++i) out(i, j) = col[i];
  }
  return out;
}

struct StateLayout {
  int dm = 0;
  int n = 0;

  std::size_t total() const {
    return static_cast<std::size_t>(dm) + static_cast<std::size_t>(n) * n +
           static_cast<std::size_t>(dm) * dm;
  }
  std::span<const double> v(std::span<const double> y) const { return y.subspan(0, dm); }
  Mat g(std::span<const double> y) const {
    Mat out(n, n);
    std::copy_n(y.data() + dm, static_cast<std::size_t>(n) * n, out.data());
    return out;
  }
  Mat s(std::span<const double> y) const {
    Mat out(dm, dm);
    std::copy_n(y.data() + dm + static_cast<std::size_t>(n) * n,
                static_cast<std::size_t>(dm) * dm, out.data());
    return out;
  }
  Vec pack(std::span<const double> v, const Mat& g, const Mat& s) const {
    Vec y(total());
    std::copy(v.begin(), v.end(), y.begin());
    std::copy_n(g.data(), static_cast<std::size_t>(n) * n, y.begin() + dm);
    std::copy_n(s.data(), static_cast<std::size_t>(dm) * dm,
                y.begin() + dm + static_cast<std::size_t>(n) * n);
    return y;
  }
};

// G-orthogonal polar correction of S, computed in a G-orthonormal frame.
struct FrameCorrector {
  bool active = false;
  Mat lt, linv_t;

  static FrameCorrector make(const ReductiveSpace& space, bool metric) {
    FrameCorrector fc;
    if (!metric) return fc;
    try {
      const Mat l = cholesky(space.m_gram());
      fc.lt = l.transpose();
      fc.linv_t = inverse(l).transpose();
      fc.active = true;
    } catch (const NotPositiveDefinite&) {
      // Indefinite metric: the correction is skipped, drift is still recorded.
    }
    return fc;
  }

  Mat correct(const Mat& s) const { return linv_t * polar_orthogonal(lt * s * linv_t) * lt; }
};

double s_gram_drift(const Mat& s, const Mat& gram) {
  return (s.transpose() * gram * s - gram).frob_norm();
}

void check_state_drift(double drift, const char* what) {
  if (drift > tol::kStateDriftHard)
    throw StateInvariantViolated(std::string(what) + " drift " + std::to_string(drift) +
                                 " exceeds hard limit after correction");
}

Vec unit_coord(int dim, int j) {
  Vec e(static_cast<std::size_t>(dim), 0.0);
  e[j] = 1.0;
  return e;
}

}  // namespace

ControlCurve ControlCurve::constant(Vec m_coords, double t1) {
  ControlCurve c;
  c.kind_ = Kind::Constant;
  c.constant_ = std::move(m_coords);
  c.t1_ = t1;
  return c;
}

ControlCurve ControlCurve::sampled(SteppedSolution samples) {
  ControlCurve c;
  c.kind_ = Kind::Sampled;
  c.t0_ = samples.t0();
  c.t1_ = samples.t1();
  c.samples_ = std::move(samples);
  return c;
}

ControlCurve ControlCurve::special(const ReductiveSpace& space, const AlgebraElement& xi,
                                   double t1) {
  ControlCurve c;
  c.kind_ = Kind::ClosedFormSpecial;
  c.t1_ = t1;
  c.xi_ = xi;
  const AlgebraElement xi_h = space.project_h(xi);
  const AlgebraElement xi_m = space.project_m(xi);
  c.xi_h_mat_ = xi_h.mat;
  c.xi_m_coords_ = space.project_m_coords(xi);
  c.special_generator_ = projected_ad_on_m(space, xi_h.mat + 0.5 * xi_m.mat);
  return c;
}

const AlgebraElement& ControlCurve::xi() const {
  if (!xi_) throw Error("ControlCurve: no special generator");
  return *xi_;
}

Vec ControlCurve::eval(double t, const AlphaMap& alpha, const ReductiveSpace& space) const {
  switch (kind_) {
    case Kind::Constant:
      return constant_;
    case Kind::Sampled:
      return samples_->sample_linear(t);
    case Kind::ClosedFormSpecial: {
      if (alpha.kind == AlphaMap::Kind::CanonicalFirst)
        return mat_exp(t * special_generator_).apply(xi_m_coords_);
      if (alpha.kind == AlphaMap::Kind::CanonicalSecond) {
        const Mat h = mat_exp(t * xi_h_mat_);
        const Mat moved = h * space.m_to_ambient(xi_m_coords_) * inverse(h);
        return space.project_m_coords(algebra_element(space.group_ptr(), moved));
      }
      throw Error("ControlCurve: special controls need a canonical derivative");
    }
  }
  throw Error("ControlCurve: unknown kind");
}

RollingState initial_rolling_state(const ReductiveSpace& space) {
  RollingState st;
  st.t = 0.0;
  st.v.assign(static_cast<std::size_t>(space.dim_m()), 0.0);
  st.g = Mat::identity(space.group().ambient_dim());
  st.S = Mat::identity(space.dim_m());
  return st;
}

KinematicRhs kinematic_rhs(const AlphaMap& alpha, const ReductiveSpace& space, double t,
                           const RollingState& state, const ControlCurve& u) {
  const Vec u_t = u.eval(t, alpha, space);
  const Vec su = state.S.apply(u_t);
  KinematicRhs out;
  out.v_dot = u_t;
  out.S_dot = -(alpha_operator(alpha, su, space) * state.S);
  out.g_dot = state.g * space.m_to_ambient(su);
  if (!out.g_dot.all_finite() || !out.S_dot.all_finite() || !vec_all_finite(out.v_dot))
    throw NonFinite("kinematic_rhs: non-finite derivative");
  return out;
}

RollingTrajectory integrate_rolling(const AlphaMap& alpha, const SpaceInstance& instance,
                                    const ControlCurve& u, const RollingState& initial,
                                    int steps) {
  const ReductiveSpace& space = instance.space;
  const int dm = space.dim_m();
  const int n = space.group().ambient_dim();
  if (steps < 1) throw Error("integrate_rolling: need steps >= 1");
  if (static_cast<int>(initial.v.size()) != dm || initial.g.rows() != n ||
      initial.S.rows() != dm)
    throw Error("integrate_rolling: initial state has wrong shape");
  if (space.group().membership_residual(initial.g) > space.group().membership_tol())
    throw StateInvariantViolated("integrate_rolling: initial g is not a group element");
  const double det0 = determinant(initial.S);
  if (std::abs(det0) < tol::kDetFloor)
    throw StateInvariantViolated("integrate_rolling: initial S is near-singular");

  const AlphaTable table = build_alpha_table(alpha, space);
  const bool metric = alpha_is_metric(alpha, space);
  const FrameCorrector corrector = FrameCorrector::make(space, metric);
  const StateLayout layout{dm, n};

  const OdeRhs rhs = [&](double t, std::span<const double> y, std::span<double> dydt) {
    const Vec u_t = u.eval(t, alpha, space);
    const Mat s = layout.s(y);
    const Mat g = layout.g(y);
    const Vec su = s.apply(u_t);
    const Mat s_dot = -(table.op(su) * s);
    const Mat g_dot = g * space.m_to_ambient(su);
    const Vec packed = layout.pack(u_t, g_dot, s_dot);
    std::copy(packed.begin(), packed.end(), dydt.begin());
  };

  RollingTrajectory traj;
  TrajectoryDiagnostics& diag = traj.diagnostics;
  const double det_sign0 = det0 >= 0.0 ? 1.0 : -1.0;

  const double t0 = initial.t;
  const double t1 = u.t1();
  const double h = (t1 - t0) / steps;
  if (!(h > 0.0)) throw Error("integrate_rolling: empty time interval");

  Vec y = layout.pack(initial.v, initial.g, initial.S);
  auto record = [&](double t) {
    RollingState st;
    st.t = t;
    const auto vs = layout.v(y);
    st.v.assign(vs.begin(), vs.end());
    st.g = layout.g(y);
    st.S = layout.s(y);

    const double det = determinant(st.S);
    diag.min_abs_det_s = std::min(diag.min_abs_det_s, std::abs(det));
    if (det * det_sign0 < 0.0) diag.det_sign_constant = false;
    if (std::abs(det) < tol::kDetFloor)
      throw StateInvariantViolated("integrate_rolling: |det S| below floor");

    traj.controls.push_back(u.eval(t, alpha, space));
    traj.development.push_back(instance.embedding.into_ambient(st.g));
    traj.states.push_back(std::move(st));
  };
  record(t0);

  for (int i = 0; i < steps; ++i) {
    const double t = t0 + i * h;
    y = rk4_step(rhs, t, y, h);
    if (!vec_all_finite(y)) throw NonFinite("integrate_rolling: state blew up");

    const Mat g_raw = layout.g(y);
    diag.g_drift_pre = std::max(diag.g_drift_pre, space.group().membership_residual(g_raw));
    const GroupElement g_corr = retract_to_group(g_raw, space.group_ptr());
    const double g_post = space.group().membership_residual(g_corr.mat);
    diag.g_drift_post = std::max(diag.g_drift_post, g_post);
    check_state_drift(g_post, "group membership");

    Mat s = layout.s(y);
    if (metric) {
      diag.s_drift_pre = std::max(diag.s_drift_pre, s_gram_drift(s, space.m_gram()));
      if (corrector.active) {
        s = corrector.correct(s);
        const double s_post = s_gram_drift(s, space.m_gram());
        diag.s_drift_post = std::max(diag.s_drift_post, s_post);
        check_state_drift(s_post, "frame orthogonality");
      }
    }

    const Vec vpart(layout.v(y).begin(), layout.v(y).end());
    y = layout.pack(vpart, g_corr.mat, s);
    record(i + 1 == steps ? t1 : t0 + (i + 1) * h);
  }
  return traj;
}

RollingState closed_form_can1(const ReductiveSpace& space, const AlgebraElement& xi, double t,
                              int quad_panels) {
  if (t < 0.0) throw Error("closed_form_can1: need t >= 0");
  const AlgebraElement xi_h = space.project_h(xi);
  const AlgebraElement xi_m = space.project_m(xi);
  const Vec xi_m_coords = space.project_m_coords(xi);
  const Mat gen = projected_ad_on_m(space, xi_h.mat + 0.5 * xi_m.mat);

  RollingState st;
  st.t = t;
  st.v = quad_simpson([&](double s) { return mat_exp(s * gen).apply(xi_m_coords); }, 0.0, t,
                      quad_panels);
  st.g = mat_exp(t * xi.mat) * mat_exp(-t * xi_h.mat);
  st.S = ad_matrix_on_m(space, mat_exp(t * xi_h.mat)) * mat_exp(-t * gen);
  return st;
}

RollingState closed_form_can2(const ReductiveSpace& space, const AlgebraElement& xi, double t,
                              int quad_panels) {
  if (t < 0.0) throw Error("closed_form_can2: need t >= 0");
  const AlgebraElement xi_h = space.project_h(xi);
  const Vec xi_m_coords = space.project_m_coords(xi);
  const Mat xi_m_mat = space.m_to_ambient(xi_m_coords);

  RollingState st;
  st.t = t;
  st.v = quad_simpson(
      [&](double s) {
        const Mat hs = mat_exp(s * xi_h.mat);
        const Mat moved = hs * xi_m_mat * inverse(hs);
        return space.project_m_coords(algebra_element(space.group_ptr(), moved));
      },
      0.0, t, quad_panels);
  st.g = mat_exp(t * xi.mat) * mat_exp(-t * xi_h.mat);
  st.S = Mat::identity(space.dim_m());
  return st;
}

RollingTrajectory closed_form_trajectory(const AlphaMap::Kind kind, const SpaceInstance& instance,
                                         const AlgebraElement& xi, double t1, int samples,
                                         int panels_per_step) {
  if (samples < 1) throw Error("closed_form_trajectory: need samples >= 1");
  if (kind != AlphaMap::Kind::CanonicalFirst && kind != AlphaMap::Kind::CanonicalSecond)
    throw Error("closed_form_trajectory: need a canonical derivative");
  const ReductiveSpace& space = instance.space;
  const AlphaMap alpha{kind, {}};
  const ControlCurve u = ControlCurve::special(space, xi, t1);

  const AlgebraElement xi_h = space.project_h(xi);
  const Vec xi_m_coords = space.project_m_coords(xi);
  const Mat xi_m_mat = space.m_to_ambient(xi_m_coords);
  const Mat gen = projected_ad_on_m(space, xi_h.mat + 0.5 * xi_m_mat);
  const int dm = space.dim_m();
  const double h = t1 / samples;
  const bool metric = alpha_is_metric(alpha, space);

  RollingTrajectory traj;
  Vec v(static_cast<std::size_t>(dm), 0.0);
  for (int i = 0; i <= samples; ++i) {
    const double t = (i == samples) ? t1 : i * h;
    if (i > 0) {
      // incremental rolling-curve quadrature over [t - h, t]
      const Vec inc = quad_simpson([&](double s) { return u.eval(s, alpha, space); }, t - h, t,
                                   panels_per_step);
      vec_axpy(1.0, inc, v);
    }
    RollingState st;
    st.t = t;
    st.v = v;
    st.g = mat_exp(t * xi.mat) * mat_exp(-t * xi_h.mat);
    st.S = (kind == AlphaMap::Kind::CanonicalFirst)
               ? ad_matrix_on_m(space, mat_exp(t * xi_h.mat)) * mat_exp(-t * gen)
               : Mat::identity(dm);

    traj.controls.push_back(u.eval(t, alpha, space));
    traj.development.push_back(instance.embedding.into_ambient(st.g));
    traj.diagnostics.g_drift_pre =
        std::max(traj.diagnostics.g_drift_pre, space.group().membership_residual(st.g));
    if (metric)
      traj.diagnostics.s_drift_pre =
          std::max(traj.diagnostics.s_drift_pre, s_gram_drift(st.S, space.m_gram()));
    const double det = determinant(st.S);
    traj.diagnostics.min_abs_det_s = std::min(traj.diagnostics.min_abs_det_s, std::abs(det));
    traj.states.push_back(std::move(st));
  }
  traj.diagnostics.g_drift_post = traj.diagnostics.g_drift_pre;
  traj.diagnostics.s_drift_post = traj.diagnostics.s_drift_pre;
  return traj;
}

RollingTrajectory lie_group_rolling(const SpaceInstance& group_space, const ControlCurve& u,
                                    const GroupElement& g0, double t1, int steps) {
  const ReductiveSpace& space = group_space.space;
  if (space.dim_h() != 0)
    throw Error("lie_group_rolling: space must be a group viewed as G/{e}");
  if (steps < 1) throw Error("lie_group_rolling: need steps >= 1");
  const int n = space.group().ambient_dim();
  const int d = space.dim_m();
  const AlphaMap alpha = AlphaMap::canonical_first();
  const std::size_t nn = static_cast<std::size_t>(n) * n;

  // y = [vec k | vec W | v]; k' = k u/2, W' = -W u/2, v' = u.
  const OdeRhs rhs = [&](double t, std::span<const double> y, std::span<double> dydt) {
    const Vec u_t = u.eval(t, alpha, space);
    const Mat u_mat = space.m_to_ambient(u_t);
    Mat k(n, n), w(n, n);
    std::copy_n(y.data(), nn, k.data());
    std::copy_n(y.data() + nn, nn, w.data());
    const Mat k_dot = 0.5 * (k * u_mat);
    const Mat w_dot = -0.5 * (w * u_mat);
    std::copy_n(k_dot.data(), nn, dydt.data());
    std::copy_n(w_dot.data(), nn, dydt.data() + nn);
    for (int i = 0; i < d; ++i) dydt[2 * nn + i] = u_t[i];
  };

  Vec y(2 * nn + static_cast<std::size_t>(d), 0.0);
  std::copy_n(g0.mat.data(), nn, y.data());
  std::copy_n(Mat::identity(n).data(), nn, y.data() + nn);

  RollingTrajectory traj;
  const double h = t1 / steps;
  auto record = [&](double t) {
    Mat k(n, n), w(n, n);
    std::copy_n(y.data(), nn, k.data());
    std::copy_n(y.data() + nn, nn, w.data());
    const Mat w_inv = inverse(w);

    RollingState st;
    st.t = t;
    st.v.assign(y.begin() + static_cast<std::ptrdiff_t>(2 * nn), y.end());
    st.g = k * w_inv;
    Mat s(d, d);
    for (int j = 0; j < d; ++j) {
      const Mat& ej = space.group().basis()[j];
      const Vec col = space.group().coords_of(w * ej * w_inv, tol::kCoordsClosure);
      for (int i = 0; i < d; ++i) s(i, j) = col[i];
    }
    st.S = std::move(s);

    traj.diagnostics.g_drift_post =
        std::max(traj.diagnostics.g_drift_post, space.group().membership_residual(st.g));
    traj.diagnostics.s_drift_post =
        std::max(traj.diagnostics.s_drift_post, s_gram_drift(st.S, space.m_gram()));
    traj.controls.push_back(u.eval(t, alpha, space));
    traj.development.push_back(group_space.embedding.into_ambient(st.g));
    traj.states.push_back(std::move(st));
  };
  record(0.0);

  for (int i = 0; i < steps; ++i) {
    const double t = i * h;
    y = rk4_step(rhs, t, y, h);
    if (!vec_all_finite(y)) throw NonFinite("lie_group_rolling: state blew up");
    Mat k(n, n), w(n, n);
    std::copy_n(y.data(), nn, k.data());
    std::copy_n(y.data() + nn, nn, w.data());
    traj.diagnostics.g_drift_pre =
        std::max({traj.diagnostics.g_drift_pre, space.group().membership_residual(k),
                  space.group().membership_residual(w)});
    k = retract_to_group(k, space.group_ptr()).mat;
    w = retract_to_group(w, space.group_ptr()).mat;
    std::copy_n(k.data(), nn, y.data());
    std::copy_n(w.data(), nn, y.data() + nn);
    record(i + 1 == steps ? t1 : (i + 1) * h);
  }
  traj.diagnostics.s_drift_pre = traj.diagnostics.s_drift_post;
  return traj;
}

SymmetricPairRolling symmetric_pair_rolling(const SpaceInstance& pair_space,
                                            const SpaceInstance& group_space,
                                            const ControlCurve& u_group, const GroupElement& g0,
                                            double t1, int steps) {
  const ReductiveSpace& gsp = group_space.space;
  if (gsp.dim_h() != 0) throw Error("symmetric_pair_rolling: group side must be G/{e}");
  const int n = gsp.group().ambient_dim();
  const int d = gsp.dim_m();
  if (pair_space.space.dim_m() != d || pair_space.space.group().ambient_dim() != 2 * n)
    throw Error("symmetric_pair_rolling: pair space does not match the group");

  // The two factor curves obey the same half-speed ODEs as lie_group_rolling
  // (g1 = k, g2 = W); reuse it so both views share one integration.
  RollingTrajectory group_traj = lie_group_rolling(group_space, u_group, g0, t1, steps);

  const AlphaMap alpha = AlphaMap::canonical_first();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  const std::size_t count = group_traj.states.size();
  const double h = t1 / steps;

  // Recover the second factor on the same grid with the same stepper.
  const OdeRhs w_rhs = [&](double t, std::span<const double> y, std::span<double> dydt) {
    const Vec u_t = u_group.eval(t, alpha, gsp);
    const Mat u_mat = gsp.m_to_ambient(u_t);
    Mat w(n, n);
    std::copy_n(y.data(), nn, w.data());
    const Mat w_dot = -0.5 * (w * u_mat);
    std::copy_n(w_dot.data(), nn, dydt.data());
  };

  // Central-difference probes for the transported-identification check; the
  // probe exponentials are constant along the trajectory.
  const double fd = tol::kFiniteDiffStep;
  std::vector<Mat> probe_plus, probe_minus;
  for (int j = 0; j < d; ++j) {
    const Mat& ej = gsp.group().basis()[j];
    probe_plus.push_back(mat_exp((0.5 * fd) * ej));
    probe_minus.push_back(mat_exp((-0.5 * fd) * ej));
  }

  RollingTrajectory pair_traj;
  pair_traj.diagnostics = group_traj.diagnostics;

  Vec wy(nn);
  std::copy_n(Mat::identity(n).data(), nn, wy.begin());
  double relation_residual = 0.0;

  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) {
      wy = rk4_step(w_rhs, (static_cast<double>(i) - 1.0) * h, wy, h);
      Mat w_raw(n, n);
      std::copy_n(wy.data(), nn, w_raw.data());
      const Mat w_corr = retract_to_group(w_raw, gsp.group_ptr()).mat;
      std::copy_n(w_corr.data(), nn, wy.begin());
    }
    Mat w(n, n);
    std::copy_n(wy.data(), nn, w.data());

    const RollingState& gst = group_traj.states[i];
    const Mat g1 = gst.g * w;  // k = g W
    const Mat& g2 = w;

    RollingState pst;
    pst.t = gst.t;
    pst.v = gst.v;
    vec_scale(0.5, pst.v);  // coordinates in the (E_i, -E_i) basis
    Mat block(2 * n, 2 * n);
    block.set_block(0, 0, g1);
    block.set_block(n, n, g2);
    pst.g = std::move(block);
    pst.S = Mat::identity(d);

    Vec u_half = group_traj.controls[i];
    vec_scale(0.5, u_half);
    pair_traj.controls.push_back(std::move(u_half));
    pair_traj.development.push_back(pair_space.embedding.into_ambient(pst.g));

    // The group-side isomorphism applied to a probe must match the
    // transported pair-side isomorphism, evaluated by central differences of
    // (a, b) -> a b^{-1} along the horizontal probe curve through (g1, g2).
    for (int j = 0; j < d; ++j) {
      const Mat lhs =
          group_space.embedding.tangent_push(gst.g, gst.S.apply(unit_coord(d, j)));
      const Mat plus = (g1 * probe_plus[j]) * inverse(g2 * probe_minus[j]);
      const Mat minus = (g1 * probe_minus[j]) * inverse(g2 * probe_plus[j]);
      const Mat rhs_fd = (1.0 / (2.0 * fd)) * (plus - minus);
      relation_residual = std::max(relation_residual, (lhs - rhs_fd).frob_norm());
    }
    pair_traj.states.push_back(std::move(pst));
  }

  pair_traj.diagnostics.phi_relation_residual = relation_residual;
  group_traj.diagnostics.phi_relation_residual = relation_residual;
  return SymmetricPairRolling{std::move(pair_traj), std::move(group_traj)};
}

double verify_no_slip(const RollingTrajectory& traj, const SpaceInstance& instance) {
  const std::size_t count = traj.states.size();
  if (count < 3) throw Error("verify_no_slip: need at least 3 samples");
  const double h = traj.states[1].t - traj.states[0].t;
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < count; ++i) {
    const Mat fd = (1.0 / (2.0 * h)) * (traj.development[i + 1] - traj.development[i - 1]);
    const Vec su = traj.states[i].S.apply(traj.controls[i]);
    const Mat pushed = instance.embedding.tangent_push(traj.states[i].g, su);
    worst = std::max(worst, (fd - pushed).frob_norm());
  }
  return worst;
}

double verify_no_twist(const RollingTrajectory& traj, const SpaceInstance& instance,
                       const AlphaMap& alpha, const std::vector<Vec>& probes) {
  const ReductiveSpace& space = instance.space;
  const std::size_t count = traj.states.size();
  if (count < 3) throw Error("verify_no_twist: need at least 3 samples");

  Vec times(count);
  std::vector<Vec> x_samples(count);
  for (std::size_t i = 0; i < count; ++i) {
    times[i] = traj.states[i].t;
    x_samples[i] = traj.states[i].S.apply(traj.controls[i]);
  }
  const SteppedSolution x_path(std::move(times), std::move(x_samples));
  const auto x_curve = [&](double t) { return x_path.sample_linear(t); };

  double worst = 0.0;
  for (const Vec& probe : probes) {
    const Vec z0 = traj.states.front().S.apply(probe);
    const SteppedSolution z = parallel_transport_path(
        alpha, x_curve, z0, x_path.t0(), x_path.t1(), static_cast<int>(count) - 1, space);
    for (std::size_t i = 0; i < count; ++i) {
      const Vec frame_image = traj.states[i].S.apply(probe);
      worst = std::max(worst, vec_norm(vec_sub(z.states[i], frame_image)));
    }
  }
  return worst;
}

}  // namespace homroll
