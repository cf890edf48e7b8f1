#pragma once

#include <functional>
#include <random>

#include "homroll/lie.hpp"
#include "homroll/ode.hpp"

namespace homroll {

// Bilinear map m x m -> m defining an invariant covariant derivative.
// CanonicalFirst is (X, Y) -> [X, Y]_m / 2, CanonicalSecond is zero, Custom
// contracts a user table.
struct AlphaMap {
  enum class Kind { CanonicalFirst, CanonicalSecond, Custom };
  Kind kind = Kind::CanonicalFirst;
  // Custom only: table[i] maps m-coordinates of Y to those of alpha(e_i, Y).
  std::vector<Mat> custom_table;

  static AlphaMap canonical_first() { return AlphaMap{Kind::CanonicalFirst, {}}; }
  static AlphaMap canonical_second() { return AlphaMap{Kind::CanonicalSecond, {}}; }
  static AlphaMap custom(std::vector<Mat> table) {
    return AlphaMap{Kind::Custom, std::move(table)};
  }
};

// Reductive decomposition g = h (+) m for a homogeneous space G/H, with a
// scalar product on g (in algebra coordinates) and sampled elements of H
// used for invariance spot checks. Immutable after make().
class ReductiveSpace {
 public:
  static ReductiveSpace make(LieGroupPtr group, std::vector<AlgebraElement> h_basis,
                             std::vector<AlgebraElement> m_basis, Mat scalar_product,
                             std::vector<GroupElement> h_samples);

  const LieGroupPtr& group_ptr() const { return group_; }
  const LieGroup& group() const { return *group_; }
  int dim_h() const { return static_cast<int>(h_basis_.size()); }
  int dim_m() const { return static_cast<int>(m_basis_.size()); }
  const std::vector<AlgebraElement>& h_basis() const { return h_basis_; }
  const std::vector<AlgebraElement>& m_basis() const { return m_basis_; }
  const Mat& scalar_product() const { return scalar_product_; }
  const std::vector<GroupElement>& h_samples() const { return h_samples_; }
  const Mat& m_gram() const { return m_gram_; }

  // Split in joint (h, m) coordinates; kernel of project_m is h and
  // project_m + project_h = id.
  Vec project_m_coords(const AlgebraElement& x) const;
  Vec project_h_coords(const AlgebraElement& x) const;
  AlgebraElement project_m(const AlgebraElement& x) const;
  AlgebraElement project_h(const AlgebraElement& x) const;

  Mat m_to_ambient(std::span<const double> m_coords) const;
  AlgebraElement m_element(std::span<const double> m_coords) const;
  // m-coordinates of an element expected to lie in m; throws NotClosed if
  // its h-component is above tol (relative).
  Vec m_coords_checked(const AlgebraElement& x, double tol) const;

  double m_inner(std::span<const double> x, std::span<const double> y) const;

 private:
  ReductiveSpace() = default;

  LieGroupPtr group_;
  std::vector<AlgebraElement> h_basis_;
  std::vector<AlgebraElement> m_basis_;
  Mat scalar_product_;
  std::vector<GroupElement> h_samples_;
  Mat joint_inv_;  // splits algebra coords into (h, m) parts
  Mat m_gram_;
};

// h^perp under the scalar product, used when m is not given explicitly.
std::vector<AlgebraElement> orthogonal_complement_m(const LieGroupPtr& group,
                                                    const std::vector<AlgebraElement>& h_basis,
                                                    const Mat& scalar_product);

// Exponentials of `count` random unit h-vectors; the sampling surrogate for
// the (infinite) subgroup H in invariance checks.
std::vector<GroupElement> sample_subgroup_elements(const LieGroupPtr& group,
                                                   const std::vector<AlgebraElement>& h_basis,
                                                   int count, std::uint64_t seed);

Vec alpha_apply(const AlphaMap& alpha, std::span<const double> x, std::span<const double> y,
                const ReductiveSpace& space);
// Matrix of Y -> alpha(X, Y) in m-basis coordinates.
Mat alpha_operator(const AlphaMap& alpha, std::span<const double> x, const ReductiveSpace& space);
// True when alpha(X, .) is skew-adjoint for the m-Gram (metric derivative).
bool alpha_is_metric(const AlphaMap& alpha, const ReductiveSpace& space);

// Solves z' = -alpha(x(t), z) along the curve x; returns z(t1).
Vec parallel_transport(const AlphaMap& alpha, const std::function<Vec(double)>& x_curve,
                       std::span<const double> z0, double t0, double t1, int steps,
                       const ReductiveSpace& space);
// Same integration, full path (used by the no-twist verifier).
SteppedSolution parallel_transport_path(const AlphaMap& alpha,
                                        const std::function<Vec(double)>& x_curve,
                                        std::span<const double> z0, double t0, double t1,
                                        int steps, const ReductiveSpace& space);

struct CheckResult {
  std::string name;
  double measure = 0.0;
  double threshold = 0.0;
  bool larger_is_better = false;  // e.g. singular-value floors
  bool pass = false;
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// Runs the type invariants of the space plus Ad(H)-invariance of alpha.
ValidationReport validate_space(const ReductiveSpace& space, const AlphaMap& alpha);

// How a coset maps into an embedding space, plus the tangent pushforward of
// m-coordinates at a group element.
struct EmbeddingMap {
  int rows = 0, cols = 0;
  std::function<Mat(const Mat& g)> into_ambient;
  std::function<Mat(const Mat& g, std::span<const double> m_coords)> tangent_push;
};

// A ready-to-roll space: group, reductive split and embedding.
struct SpaceInstance {
  std::string label;
  ReductiveSpace space;
  EmbeddingMap embedding;
};

}  // namespace homroll
