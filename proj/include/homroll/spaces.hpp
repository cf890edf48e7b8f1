#pragma once

#include "homroll/rolling.hpp"

namespace homroll {

inline constexpr std::uint64_t kDefaultSampleSeed = 0x9e3779b97f4a7c15ull;

// Special orthogonal group with the standard generator basis E_ij (i < j).
LieGroupPtr make_so_n(int n);

// A group viewed as the homogeneous space G/{e}: h = {0}, m = g, scalar
// product -tr(XY), embedding into the group itself.
SpaceInstance make_group_as_reductive(LieGroupPtr group);

// The symmetric space (G x G)/Delta G in a block-diagonal 2n realization
// with h = {(X, X)}, m = {(X, -X)} and the quotient map (g1, g2) -> g1 g2^-1
// as embedding.
SpaceInstance make_symmetric_pair(const LieGroupPtr& group,
                                  std::uint64_t seed = kDefaultSampleSeed);

// Stiefel manifold St(n, k) as (O(n) x O(k))/H with an alpha-metric,
// realized block-diagonally in dimension n + k.
struct StiefelAlphaSpace {
  int n = 0, k = 0;
  double alpha_param = 1.0;
  Mat base_point;  // X0, n x k with orthonormal columns
  SpaceInstance instance;
};

StiefelAlphaSpace make_stiefel(int n, int k, double alpha_param,
                               const Mat* base_point = nullptr,
                               std::uint64_t seed = kDefaultSampleSeed);

// Closed-form orthogonal projection of (Omega, eta) onto m; matches the
// generic projector of the underlying split.
std::pair<Mat, Mat> stiefel_project_m(const StiefelAlphaSpace& sp, const Mat& omega,
                                      const Mat& eta);

// Inverse tangent identification: V in T_X St(n,k) to its m-representative.
std::pair<Mat, Mat> stiefel_tangent_lift(const StiefelAlphaSpace& sp, const Mat& v);

// Pack/unpack between an (Omega, eta) pair and the block-diagonal ambient.
Mat stiefel_pair_to_ambient(const StiefelAlphaSpace& sp, const Mat& omega, const Mat& eta);
std::pair<Mat, Mat> stiefel_ambient_to_pair(const StiefelAlphaSpace& sp, const Mat& ambient);

// Closed-form rolling along t -> exp(t (xi1, xi2)); development and
// rolling-curve velocity are reported in embedded n x k coordinates.
RollingTrajectory stiefel_special_rolling(const StiefelAlphaSpace& sp, const Mat& xi1,
                                          const Mat& xi2, double t1, int samples);

}  // namespace homroll
