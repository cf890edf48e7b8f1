#pragma once

#include <optional>

#include "homroll/reductive.hpp"

namespace homroll {

// Control input u : [0, t1] -> m driving a rolling. Special controls
// reproduce the closed-form rollings whose development curve projects a
// one-parameter subgroup; their value depends on the derivative kind.
class ControlCurve {
 public:
  enum class Kind { Constant, Sampled, ClosedFormSpecial };

  static ControlCurve constant(Vec m_coords, double t1);
  static ControlCurve sampled(SteppedSolution samples);
  static ControlCurve special(const ReductiveSpace& space, const AlgebraElement& xi, double t1);

  Kind kind() const { return kind_; }
  double t0() const { return t0_; }
  double t1() const { return t1_; }
  const AlgebraElement& xi() const;
  Vec eval(double t, const AlphaMap& alpha, const ReductiveSpace& space) const;

 private:
  ControlCurve() = default;

  Kind kind_ = Kind::Constant;
  double t0_ = 0.0, t1_ = 1.0;
  Vec constant_;
  std::optional<SteppedSolution> samples_;
  // ClosedFormSpecial caches: the h/m split of xi and the m-operator of
  // pr_m o ad_{xi_h + xi_m/2}.
  std::optional<AlgebraElement> xi_;
  Mat xi_h_mat_;
  Vec xi_m_coords_;
  Mat special_generator_;
};

// One configuration (v, g, S): rolling-curve point, horizontal lift and the
// frame part as a matrix in m-basis coordinates.
struct RollingState {
  double t = 0.0;
  Vec v;
  Mat g;
  Mat S;
};

RollingState initial_rolling_state(const ReductiveSpace& space);

struct TrajectoryDiagnostics {
  double g_drift_pre = 0.0;   // max ||g^T g - I||_F before retraction
  double g_drift_post = 0.0;  // after
  double s_drift_pre = 0.0;   // max ||S^T G S - G||_F before correction
  double s_drift_post = 0.0;  // after
  double min_abs_det_s = 1.0;
  bool det_sign_constant = true;
  double phi_relation_residual = 0.0;  // symmetric-pair rollings only
};

struct RollingTrajectory {
  std::vector<RollingState> states;
  std::vector<Vec> controls;     // u(t_i), m-coordinates
  std::vector<Mat> development;  // embedded development curve
  // Embedded image of the rolling curve v(t); filled by space factories that
  // define one (currently the Stiefel special rolling).
  std::vector<Mat> embedded_rolling;
  TrajectoryDiagnostics diagnostics;
};

struct KinematicRhs {
  Vec v_dot;
  Mat g_dot;
  Mat S_dot;
};

// Right-hand side of the kinematic equation:
//   v' = u,  S' = -alpha(S u, .) o S,  g' = g * mat(S u).
KinematicRhs kinematic_rhs(const AlphaMap& alpha, const ReductiveSpace& space, double t,
                           const RollingState& state, const ControlCurve& u);

// RK4 on the flattened (v, g, S) state with per-step drift correction:
// polar retraction for g and, for metric alpha, the G-orthogonal polar
// factor for S. Raw drift is recorded in the diagnostics.
RollingTrajectory integrate_rolling(const AlphaMap& alpha, const SpaceInstance& instance,
                                    const ControlCurve& u, const RollingState& initial,
                                    int steps);

// Closed-form rolling state at time t for the first-kind canonical
// derivative along the projected one-parameter subgroup of xi.
RollingState closed_form_can1(const ReductiveSpace& space, const AlgebraElement& xi, double t,
                              int quad_panels);
// Second-kind variant: S stays the identity.
RollingState closed_form_can2(const ReductiveSpace& space, const AlgebraElement& xi, double t,
                              int quad_panels);

// Uniformly sampled closed-form rolling (incremental quadrature for v).
RollingTrajectory closed_form_trajectory(const AlphaMap::Kind kind, const SpaceInstance& instance,
                                         const AlgebraElement& xi, double t1, int samples,
                                         int panels_per_step = 2);

// Rolling of a Lie group over its algebra via the two half-speed factor
// curves k and W; assembles (v, k W^{-1}, Ad_W). Requires dim h = 0.
RollingTrajectory lie_group_rolling(const SpaceInstance& group_space, const ControlCurve& u,
                                    const GroupElement& g0, double t1, int steps);

struct SymmetricPairRolling {
  RollingTrajectory pair_trajectory;   // on (G x G)/Delta G
  RollingTrajectory group_trajectory;  // induced rolling on G
};

// Rolls a connected group both as the symmetric space (G x G)/Delta G and
// directly over G; checks the transported identification between the two on
// basis probes and records the residual.
SymmetricPairRolling symmetric_pair_rolling(const SpaceInstance& pair_space,
                                            const SpaceInstance& group_space,
                                            const ControlCurve& u_group, const GroupElement& g0,
                                            double t1, int steps);

// Max norm difference between the centered difference of the embedded
// development curve and the pushed rolling velocity.
double verify_no_slip(const RollingTrajectory& traj, const SpaceInstance& instance);

// Max m-coordinate deviation between parallel transport along the
// development curve and the frame image of constant probe fields.
double verify_no_twist(const RollingTrajectory& traj, const SpaceInstance& instance,
                       const AlphaMap& alpha, const std::vector<Vec>& probes);

}  // namespace homroll
