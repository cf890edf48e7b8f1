#include <doctest.h>

#include <cmath>

#include "homroll/expm.hpp"
#include "homroll/lie.hpp"
#include "homroll/spaces.hpp"
#include "test_util.hpp"

using namespace homroll;

namespace {

AlgebraElement random_element(const LieGroupPtr& g, std::mt19937_64& gen, double scale = 1.0) {
  return algebra_element_from_coords(g, testutil::random_vec(gen, g->dim(), scale));
}

}  // namespace

TEST_CASE("bracket of an element with itself vanishes") {
  auto so3 = make_so_n(3);
  auto gen = testutil::rng(53);
  const AlgebraElement x = random_element(so3, gen);
  CHECK(bracket(x, x).mat.frob_norm() <= 1e-14);
}

TEST_CASE("so(3) structure constants: [E1, E2] = E3") {
  auto so3 = make_so_n(3);
  const AlgebraElement e1 = algebra_element_from_coords(so3, Vec{1.0, 0.0, 0.0});
  const AlgebraElement e2 = algebra_element_from_coords(so3, Vec{0.0, 1.0, 0.0});
  const AlgebraElement br = bracket(e1, e2);
  CHECK(br.coords[0] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(br.coords[1] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(br.coords[2] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Jacobi identity holds on random triples") {
  auto so4 = make_so_n(4);
  auto gen = testutil::rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    const AlgebraElement x = random_element(so4, gen);
    const AlgebraElement y = random_element(so4, gen);
    const AlgebraElement z = random_element(so4, gen);
    const Mat residual = bracket(x, bracket(y, z)).mat + bracket(y, bracket(z, x)).mat +
                         bracket(z, bracket(x, y)).mat;
    CHECK(residual.frob_norm() <= 1e-10);
  }
}

TEST_CASE("Ad at the identity is the identity") {
  auto so3 = make_so_n(3);
  auto gen = testutil::rng(61);
  const AlgebraElement x = random_element(so3, gen);
  const AlgebraElement moved = Ad(group_identity(so3), x);
  CHECK(testutil::max_abs_diff(moved.mat, x.mat) <= 1e-14);
}

TEST_CASE("Ad composes with the inverse element") {
  auto so4 = make_so_n(4);
  auto gen = testutil::rng(67);
  const GroupElement g = group_exp(random_element(so4, gen));
  const GroupElement g_inv = group_element(so4, inverse(g.mat));
  const AlgebraElement x = random_element(so4, gen);
  CHECK(testutil::max_abs_diff(Ad(g, Ad(g_inv, x)).mat, x.mat) <= 1e-10);
}

TEST_CASE("derivative of Ad along a one-parameter subgroup is the bracket") {
  auto so4 = make_so_n(4);
  auto gen = testutil::rng(71);
  const AlgebraElement x = random_element(so4, gen);
  const AlgebraElement y = random_element(so4, gen);
  const double fd = 1e-5;
  const Mat plus = Ad(group_element(so4, mat_exp(fd * y.mat)), x).mat;
  const Mat minus = Ad(group_element(so4, mat_exp(-fd * y.mat)), x).mat;
  const Mat derivative = (1.0 / (2.0 * fd)) * (plus - minus);
  CHECK(testutil::max_abs_diff(derivative, bracket(y, x).mat) <= 1e-6);
}

TEST_CASE("Ad is a morphism for the bracket") {
  auto so4 = make_so_n(4);
  auto gen = testutil::rng(73);
  for (int trial = 0; trial < 5; ++trial) {
    const GroupElement g = group_exp(random_element(so4, gen));
    const AlgebraElement x = random_element(so4, gen);
    const AlgebraElement y = random_element(so4, gen);
    const Mat lhs = Ad(g, bracket(x, y)).mat;
    const Mat rhs = bracket(Ad(g, x), Ad(g, y)).mat;
    CHECK(testutil::max_abs_diff(lhs, rhs) <= 1e-9);
  }
}

TEST_CASE("ad_operator of zero is the zero matrix") {
  auto so3 = make_so_n(3);
  CHECK(ad_operator(algebra_zero(so3)).frob_norm() == 0.0);
}

TEST_CASE("exp(t ad_X) equals the coordinate matrix of Ad(exp(tX))") {
  auto so4 = make_so_n(4);
  auto gen = testutil::rng(79);
  const AlgebraElement x = random_element(so4, gen, 0.6);
  const AlgebraElement y = random_element(so4, gen);
  const double t = 0.8;
  const Vec via_ad = mat_exp(t * ad_operator(x)).apply(y.coords);
  const Vec via_Ad = Ad(group_element(so4, mat_exp(t * x.mat)), y).coords;
  for (std::size_t i = 0; i < via_ad.size(); ++i)
    CHECK(std::abs(via_ad[i] - via_Ad[i]) <= 1e-9);
}

TEST_CASE("ad_X is traceless on so(n)") {
  auto so4 = make_so_n(4);
  auto gen = testutil::rng(83);
  const AlgebraElement x = random_element(so4, gen);
  CHECK(std::abs(ad_operator(x).trace()) <= 1e-12);
}

TEST_CASE("retract_to_group leaves orthogonal matrices unchanged") {
  auto so4 = make_so_n(4);
  auto gen = testutil::rng(89);
  const Mat q = testutil::random_orthogonal(gen, 4);
  CHECK(testutil::max_abs_diff(retract_to_group(q, so4).mat, q) <= 1e-12);
}

TEST_CASE("retract_to_group matches the SVD polar oracle on perturbed input") {
  auto so4 = make_so_n(4);
  auto gen = testutil::rng(97);
  const Mat sym_part = testutil::random_mat(gen, 4, 4);
  const Mat g_raw = Mat::identity(4) + 1e-6 * (0.5 * (sym_part + sym_part.transpose()));
  const Mat result = retract_to_group(g_raw, so4).mat;
  CHECK((result.transpose() * result - Mat::identity(4)).frob_norm() <= 1e-12);
  const Svd svd = jacobi_svd(g_raw);
  CHECK(testutil::max_abs_diff(result, svd.u * svd.v.transpose()) <= 1e-12);
}

TEST_CASE("retract_to_group maps a positive diagonal to the identity") {
  auto so2 = make_so_n(2);
  const Mat g_raw(2, 2, {1.001, 0.0, 0.0, 1.0});
  CHECK(testutil::max_abs_diff(retract_to_group(g_raw, so2).mat, Mat::identity(2)) <= 1e-12);
}

TEST_CASE("retract_to_group is idempotent") {
  auto so3 = make_so_n(3);
  auto gen = testutil::rng(101);
  const Mat g_raw = testutil::random_orthogonal(gen, 3) + 0.05 * testutil::random_mat(gen, 3, 3);
  const Mat once = retract_to_group(g_raw, so3).mat;
  CHECK(testutil::max_abs_diff(retract_to_group(once, so3).mat, once) <= 1e-12);
}

TEST_CASE("retract_to_group rejects matrices far from the group") {
  auto so3 = make_so_n(3);
  CHECK_THROWS_AS(retract_to_group(2.0 * Mat::identity(3), so3), TooFarFromGroup);
}

TEST_CASE("a non-closed basis is reported through NotClosed") {
  // span{E_01, E_02} inside so(3) is not a subalgebra; the bracket leaves it.
  Mat e01(3, 3), e02(3, 3);
  e01(0, 1) = -1.0;
  e01(1, 0) = 1.0;
  e02(0, 2) = -1.0;
  e02(2, 0) = 1.0;
  auto partial = LieGroup::make("so3-partial", 3, {e01, e02});
  const AlgebraElement x = algebra_element_from_coords(partial, Vec{1.0, 0.0});
  const AlgebraElement y = algebra_element_from_coords(partial, Vec{0.0, 1.0});
  CHECK_THROWS_AS(bracket(x, y), NotClosed);
}

TEST_CASE("group membership checks catch non-orthogonal matrices") {
  auto so3 = make_so_n(3);
  CHECK_THROWS_AS(group_element(so3, 1.5 * Mat::identity(3)), TooFarFromGroup);
  CHECK(so3->is_member(Mat::identity(3)));
}
