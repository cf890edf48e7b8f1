#include <doctest.h>

#include <cmath>

#include "homroll/expm.hpp"
#include "homroll/reductive.hpp"
#include "homroll/spaces.hpp"
#include "test_util.hpp"

using namespace homroll;

namespace {

// SO(4)/SO(3): h is the lower-right so(3) block, m the first row/column
// generators. A symmetric naturally reductive split (the 3-sphere).
struct SphereSplit {
  LieGroupPtr group;
  ReductiveSpace space;
};

SphereSplit sphere_split(std::uint64_t seed = 1234) {
  auto so4 = make_so_n(4);
  // Basis order from make_so_n: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
  std::vector<AlgebraElement> m_basis, h_basis;
  const std::vector<int> m_idx{0, 1, 2}, h_idx{3, 4, 5};
  for (int idx : h_idx) {
    Vec c(6, 0.0);
    c[idx] = 1.0;
    h_basis.push_back(algebra_element_from_coords(so4, c));
  }
  for (int idx : m_idx) {
    Vec c(6, 0.0);
    c[idx] = 1.0;
    m_basis.push_back(algebra_element_from_coords(so4, c));
  }
  Mat gram(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      gram(i, j) = -(so4->basis()[i] * so4->basis()[j]).trace();
  auto samples = sample_subgroup_elements(so4, h_basis, 8, seed);
  ReductiveSpace space =
      ReductiveSpace::make(so4, std::move(h_basis), std::move(m_basis), gram, std::move(samples));
  return SphereSplit{so4, std::move(space)};
}

}  // namespace

TEST_CASE("projector algebra on random algebra vectors") {
  const SphereSplit fix = sphere_split();
  auto gen = testutil::rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    const AlgebraElement x =
        algebra_element_from_coords(fix.group, testutil::random_vec(gen, 6));
    const AlgebraElement xm = fix.space.project_m(x);
    const AlgebraElement xh = fix.space.project_h(x);
    // idempotence
    CHECK(testutil::max_abs_diff(fix.space.project_m(xm).mat, xm.mat) <= 1e-12);
    CHECK(testutil::max_abs_diff(fix.space.project_h(xh).mat, xh.mat) <= 1e-12);
    // complementary kernels
    CHECK(fix.space.project_m(xh).mat.frob_norm() <= 1e-12);
    CHECK(fix.space.project_h(xm).mat.frob_norm() <= 1e-12);
    // direct sum
    CHECK(testutil::max_abs_diff(xm.mat + xh.mat, x.mat) <= 1e-12);
  }
}

TEST_CASE("project_m fixes m and kills h") {
  const SphereSplit fix = sphere_split();
  for (const AlgebraElement& mb : fix.space.m_basis())
    CHECK(testutil::max_abs_diff(fix.space.project_m(mb).mat, mb.mat) <= 1e-13);
  for (const AlgebraElement& hb : fix.space.h_basis())
    CHECK(fix.space.project_m(hb).mat.frob_norm() <= 1e-13);
}

TEST_CASE("second-kind alpha vanishes identically") {
  const SphereSplit fix = sphere_split();
  auto gen = testutil::rng(107);
  const Vec x = testutil::random_vec(gen, 3);
  const Vec y = testutil::random_vec(gen, 3);
  const Vec out = alpha_apply(AlphaMap::canonical_second(), x, y, fix.space);
  CHECK(vec_norm(out) == 0.0);
}

TEST_CASE("first-kind alpha is antisymmetric in its arguments") {
  const StiefelAlphaSpace st = make_stiefel(4, 2, 1.0);
  auto gen = testutil::rng(109);
  const Vec x = testutil::random_vec(gen, st.instance.space.dim_m());
  const Vec xx = alpha_apply(AlphaMap::canonical_first(), x, x, st.instance.space);
  CHECK(vec_norm(xx) <= 1e-12);
}

TEST_CASE("first-kind alpha vanishes on a symmetric pair") {
  const SpaceInstance pair = make_symmetric_pair(make_so_n(3));
  const int dm = pair.space.dim_m();
  for (int i = 0; i < dm; ++i)
    for (int j = 0; j < dm; ++j) {
      Vec ei(static_cast<std::size_t>(dm), 0.0), ej = ei;
      ei[i] = 1.0;
      ej[j] = 1.0;
      CHECK(vec_norm(alpha_apply(AlphaMap::canonical_first(), ei, ej, pair.space)) <= 1e-12);
    }
}

TEST_CASE("alpha_operator of zero is zero and is consistent with alpha_apply") {
  const StiefelAlphaSpace st = make_stiefel(4, 2, 1.0);
  const ReductiveSpace& sp = st.instance.space;
  const int dm = sp.dim_m();
  CHECK(alpha_operator(AlphaMap::canonical_first(), Vec(dm, 0.0), sp).frob_norm() == 0.0);

  auto gen = testutil::rng(113);
  const Vec x = testutil::random_vec(gen, dm);
  const Vec y = testutil::random_vec(gen, dm);
  const Vec via_op = alpha_operator(AlphaMap::canonical_first(), x, sp).apply(y);
  const Vec direct = alpha_apply(AlphaMap::canonical_first(), x, y, sp);
  for (int i = 0; i < dm; ++i) CHECK(std::abs(via_op[i] - direct[i]) <= 1e-12);
}

TEST_CASE("first-kind alpha is skew-adjoint for the Gram on naturally reductive spaces") {
  for (double a : {0.5, 1.0, 3.0}) {
    const StiefelAlphaSpace st = make_stiefel(4, 2, a);
    const ReductiveSpace& sp = st.instance.space;
    auto gen = testutil::rng(127);
    for (int trial = 0; trial < 5; ++trial) {
      const Vec x = testutil::random_vec(gen, sp.dim_m());
      const Mat op = alpha_operator(AlphaMap::canonical_first(), x, sp);
      const Mat residual = sp.m_gram() * op + op.transpose() * sp.m_gram();
      CHECK(residual.frob_norm() <= 1e-9 * std::max(1.0, vec_norm(x)));
    }
    CHECK(alpha_is_metric(AlphaMap::canonical_first(), sp));
    CHECK(alpha_is_metric(AlphaMap::canonical_second(), sp));
  }
}

TEST_CASE("parallel transport with zero alpha or zero curve is constant") {
  const SphereSplit fix = sphere_split();
  auto gen = testutil::rng(131);
  const Vec z0 = testutil::random_vec(gen, 3);
  const auto x_curve = [&gen](double t) {
    return Vec{std::sin(t), std::cos(t), 0.5 * t};
  };
  const Vec z1 =
      parallel_transport(AlphaMap::canonical_second(), x_curve, z0, 0.0, 1.0, 50, fix.space);
  for (int i = 0; i < 3; ++i) CHECK(z1[i] == z0[i]);

  const auto zero_curve = [](double) { return Vec{0.0, 0.0, 0.0}; };
  const Vec z2 =
      parallel_transport(AlphaMap::canonical_first(), zero_curve, z0, 0.0, 1.0, 50, fix.space);
  for (int i = 0; i < 3; ++i) CHECK(z2[i] == z0[i]);
}

TEST_CASE("parallel transport with constant curve matches the matrix exponential") {
  const StiefelAlphaSpace st = make_stiefel(4, 2, 1.0);
  const ReductiveSpace& sp = st.instance.space;
  auto gen = testutil::rng(137);
  const Vec x0 = testutil::random_vec(gen, sp.dim_m());
  const Vec z0 = testutil::random_vec(gen, sp.dim_m());
  const AlphaMap alpha = AlphaMap::canonical_first();
  const Vec z1 =
      parallel_transport(alpha, [&](double) { return x0; }, z0, 0.0, 1.5, 400, sp);
  const Vec expect = mat_exp(-1.5 * alpha_operator(alpha, x0, sp)).apply(z0);
  for (std::size_t i = 0; i < z1.size(); ++i) CHECK(std::abs(z1[i] - expect[i]) <= 1e-8);
}

TEST_CASE("metric transport preserves the scalar product") {
  const StiefelAlphaSpace st = make_stiefel(4, 2, 1.0);
  const ReductiveSpace& sp = st.instance.space;
  auto gen = testutil::rng(139);
  const Vec z0 = testutil::random_vec(gen, sp.dim_m());
  const Vec x1 = testutil::random_vec(gen, sp.dim_m());
  const Vec x2 = testutil::random_vec(gen, sp.dim_m());
  const auto x_curve = [&](double t) {
    Vec x = x1;
    vec_scale(std::cos(t), x);
    vec_axpy(std::sin(t), x2, x);
    return x;
  };
  const SteppedSolution path = parallel_transport_path(AlphaMap::canonical_first(), x_curve, z0,
                                                       0.0, 1.0, 500, sp);
  const double norm0 = sp.m_inner(path.states.front(), path.states.front());
  for (const Vec& z : path.states)
    CHECK(std::abs(sp.m_inner(z, z) - norm0) <= 1e-8 * std::max(1.0, std::abs(norm0)));
}

TEST_CASE("parallel transport is linear in the transported vector") {
  const StiefelAlphaSpace st = make_stiefel(4, 2, 1.0);
  const ReductiveSpace& sp = st.instance.space;
  auto gen = testutil::rng(149);
  const Vec z0 = testutil::random_vec(gen, sp.dim_m());
  const Vec w0 = testutil::random_vec(gen, sp.dim_m());
  Vec sum0 = z0;
  vec_axpy(1.0, w0, sum0);
  const auto x_curve = [](double t) { return Vec{std::sin(t), 0.2, -t, 0.1, 0.3 * t}; };
  const AlphaMap alpha = AlphaMap::canonical_first();
  const Vec za = parallel_transport(alpha, x_curve, z0, 0.0, 1.0, 200, sp);
  const Vec zb = parallel_transport(alpha, x_curve, w0, 0.0, 1.0, 200, sp);
  const Vec zsum = parallel_transport(alpha, x_curve, sum0, 0.0, 1.0, 200, sp);
  for (std::size_t i = 0; i < zsum.size(); ++i)
    CHECK(std::abs(zsum[i] - za[i] - zb[i]) <= 1e-10);
}

TEST_CASE("Ad_h commutes with the m-projection on sampled subgroup elements") {
  const StiefelAlphaSpace st = make_stiefel(4, 2, 1.0);
  const ReductiveSpace& sp = st.instance.space;
  auto gen = testutil::rng(151);
  for (const GroupElement& h : sp.h_samples()) {
    const AlgebraElement x =
        algebra_element_from_coords(sp.group_ptr(), testutil::random_vec(gen, sp.group().dim()));
    const Mat lhs = Ad(h, sp.project_m(x)).mat;
    const Mat rhs = sp.project_m(Ad(h, x)).mat;
    CHECK(testutil::max_abs_diff(lhs, rhs) <= 1e-8);
  }
}

TEST_CASE("validate_space passes for a trivial-H group space") {
  const SpaceInstance inst = make_group_as_reductive(make_so_n(3));
  const ValidationReport report = validate_space(inst.space, AlphaMap::canonical_first());
  for (const CheckResult& c : report.checks) {
    INFO(c.name, " measure=", c.measure, " threshold=", c.threshold);
    CHECK(c.pass);
  }
}

TEST_CASE("validate_space passes for the sphere split and the Stiefel instance") {
  const SphereSplit fix = sphere_split();
  CHECK(validate_space(fix.space, AlphaMap::canonical_first()).all_pass());
  const StiefelAlphaSpace st = make_stiefel(4, 2, 1.0);
  CHECK(validate_space(st.instance.space, AlphaMap::canonical_first()).all_pass());
  CHECK(validate_space(st.instance.space, AlphaMap::canonical_second()).all_pass());
}

TEST_CASE("validate_space flags a corrupted m-basis through the reductivity check") {
  auto so4 = make_so_n(4);
  std::vector<AlgebraElement> h_basis, m_basis;
  for (int idx : {3, 4, 5}) {
    Vec c(6, 0.0);
    c[idx] = 1.0;
    h_basis.push_back(algebra_element_from_coords(so4, c));
  }
  for (int idx : {0, 1, 2}) {
    Vec c(6, 0.0);
    c[idx] = 1.0;
    // tilt the first m vector into h: still a valid joint basis, but the
    // split is no longer Ad(H)-invariant
    if (idx == 0) c[3] = 1.0;
    m_basis.push_back(algebra_element_from_coords(so4, c));
  }
  Mat gram(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) gram(i, j) = -(so4->basis()[i] * so4->basis()[j]).trace();
  auto samples = sample_subgroup_elements(so4, h_basis, 8, 77);
  const ReductiveSpace corrupted =
      ReductiveSpace::make(so4, h_basis, m_basis, gram, samples);
  const ValidationReport report = validate_space(corrupted, AlphaMap::canonical_first());
  bool reductivity_failed = false;
  for (const CheckResult& c : report.checks)
    if (c.name == "reductivity" && !c.pass) reductivity_failed = true;
  CHECK(reductivity_failed);
}

TEST_CASE("a literal h/m swap is rejected as a singular split") {
  auto so4 = make_so_n(4);
  std::vector<AlgebraElement> h_basis, m_basis;
  for (int idx : {3, 4, 5}) {
    Vec c(6, 0.0);
    c[idx] = 1.0;
    h_basis.push_back(algebra_element_from_coords(so4, c));
  }
  // m reuses an h vector: joint matrix is singular
  for (int idx : {3, 1, 2}) {
    Vec c(6, 0.0);
    c[idx] = 1.0;
    m_basis.push_back(algebra_element_from_coords(so4, c));
  }
  Mat gram = Mat::identity(6);
  CHECK_THROWS_AS(
      ReductiveSpace::make(so4, h_basis, m_basis, gram, {group_identity(so4)}),
      SingularSplit);
}

TEST_CASE("custom alpha tables run through the same machinery") {
  const StiefelAlphaSpace st = make_stiefel(3, 1, 1.0);
  const ReductiveSpace& sp = st.instance.space;
  const int dm = sp.dim_m();
  // table copied from the first-kind map; must validate identically
  std::vector<Mat> table;
  for (int i = 0; i < dm; ++i) {
    Vec ei(static_cast<std::size_t>(dm), 0.0);
    ei[i] = 1.0;
    table.push_back(alpha_operator(AlphaMap::canonical_first(), ei, sp));
  }
  const AlphaMap custom = AlphaMap::custom(table);
  auto gen = testutil::rng(157);
  const Vec x = testutil::random_vec(gen, dm);
  const Vec y = testutil::random_vec(gen, dm);
  const Vec a = alpha_apply(custom, x, y, sp);
  const Vec b = alpha_apply(AlphaMap::canonical_first(), x, y, sp);
  for (int i = 0; i < dm; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
  CHECK(validate_space(sp, custom).all_pass());
}
