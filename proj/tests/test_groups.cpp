#include "orbitkit/groups.hpp"
#include "orbitkit/verify.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace orbitkit;
using verify::group_distance;

namespace {

const AlgebraParams kUnit{Family::Galilei, 1.0, 1.0, 1.0};

void expect_vec(const Vec2& got, const Vec2& want, double tol = 1e-14) {
  EXPECT_NEAR(got.x(), want.x(), tol);
  EXPECT_NEAR(got.y(), want.y(), tol);
}

// Fixed elements; reference products from an independent numpy transcription
// of the multiplication laws (c = 1.3, omega = 0.7, r = c / omega).
ExtendedGroupElement g1(Family f) {
  return {f, 0.4, {0.3, -0.8}, {0.5, 0.2}, 1.3, {0.1, 0.7}, 0.25, -0.5};
}
ExtendedGroupElement g2(Family f) {
  return {f, -1.1, {-0.6, 0.2}, {0.9, -0.4}, -0.7, {-0.3, 0.5}, 0.1, 0.3};
}
AlgebraParams ref_params(Family f) { return {f, 1.3, 1.3 / 0.7, 0.7}; }

}  // namespace

TEST(Multiply, IdentityLaw) {
  verify::Sampler S(1);
  for (Family f : verify::kFamilies) {
    const auto p = S.params(f);
    EXPECT_EQ(group_distance(multiply(p, identity(f), identity(f)), identity(f)), 0.0);
    for (int i = 0; i < 100; ++i) {
      const auto g = S.group(f);
      ASSERT_EQ(group_distance(multiply(p, identity(f), g), g), 0.0);
      ASSERT_LT(group_distance(multiply(p, g, identity(f)), g), 1e-15);
    }
  }
  EXPECT_EQ(identity(Family::Galilei).theta, 0.0);
}

TEST(Multiply, BoostComposition) {
  ExtendedGroupElement a{Family::Galilei}, b{Family::Galilei};
  a.v = {1, 0};
  b.v = {0, 1};
  const auto ab = multiply(kUnit, a, b);
  expect_vec(ab.v, {1, 1});
  EXPECT_DOUBLE_EQ(ab.phi, 0.5);
  EXPECT_EQ(ab.xi, 0.0);
  expect_vec(ab.x, {0, 0});
}

TEST(Multiply, BoostThenTimeTranslation) {
  ExtendedGroupElement a{Family::Galilei}, b{Family::Galilei};
  a.v = {1, 0};
  b.t = 1;
  const auto ab = multiply(kUnit, a, b);
  expect_vec(ab.v, {1, 0});
  expect_vec(ab.x, {1, 0});
  EXPECT_DOUBLE_EQ(ab.t, 1.0);
  EXPECT_DOUBLE_EQ(ab.xi, 0.5);
  expect_vec(ab.aux, {0, 0});
  EXPECT_EQ(ab.phi, 0.0);
}

TEST(Multiply, FrozenGalilei) {
  const auto g = multiply(ref_params(Family::Galilei), g1(Family::Galilei), g2(Family::Galilei));
  EXPECT_NEAR(g.theta, -0.7, 1e-15);
  expect_vec(g.v, {-0.33052026486346114, -0.8494388065846133});
  expect_vec(g.x, {1.274722231526057, 0.7420521104766313});
  EXPECT_NEAR(g.t, 0.6, 1e-15);
  expect_vec(g.aux, {-1.0495969198471278, 0.6213711224990368});
  EXPECT_NEAR(g.xi, 0.4042749810765119, 1e-14);
  EXPECT_NEAR(g.phi, -0.3536236254041873, 1e-14);
}

TEST(Multiply, FrozenParaGalilei) {
  const auto gp = multiply(ref_params(Family::ParaGalileiPlus), g1(Family::ParaGalileiPlus),
                           g2(Family::ParaGalileiPlus));
  expect_vec(gp.v, {-0.5020202648634611, -0.9180388065846133});
  expect_vec(gp.x, {1.4847222315260569, 0.1820521104766314});
  expect_vec(gp.aux, {0.04528570280605898, 1.4004302185888458});
  EXPECT_NEAR(gp.xi, 0.7248828937486532, 1e-14);
  EXPECT_NEAR(gp.phi, -0.22985207444460914, 1e-14);

  const auto gm = multiply(ref_params(Family::ParaGalileiMinus), g1(Family::ParaGalileiMinus),
                           g2(Family::ParaGalileiMinus));
  expect_vec(gm.v, {-0.15902026486346119, -0.7808388065846134});
  expect_vec(gm.aux, {-0.177664297193941, 1.311250218588846});
  EXPECT_NEAR(gm.xi, 0.6254128937486533, 1e-14);
}

TEST(Multiply, FamilyMismatch) {
  EXPECT_THROW(multiply(kUnit, identity(Family::Galilei), identity(Family::ParaGalileiPlus)), FamilyMismatch);
}

TEST(Multiply, Associativity) {
  verify::Sampler S(2);
  for (Family f : verify::kFamilies)
    for (int i = 0; i < 500; ++i) {
      const auto p = S.params(f);
      const auto a = S.group(f), b = S.group(f), c = S.group(f);
      ASSERT_LT(group_distance(multiply(p, multiply(p, a, b), c), multiply(p, a, multiply(p, b, c))), 1e-10);
    }
}

TEST(Inverse, Examples) {
  EXPECT_EQ(group_distance(inverse(kUnit, identity(Family::Galilei)), identity(Family::Galilei)), 0.0);
  ExtendedGroupElement g{Family::Galilei};
  g.v = {1, 0};
  const auto gi = inverse(kUnit, g);
  expect_vec(gi.v, {-1, 0});
  EXPECT_EQ(gi.phi, 0.0);
}

TEST(Inverse, GroupAxioms) {
  verify::Sampler S(4);
  for (Family f : verify::kFamilies)
    for (int i = 0; i < 500; ++i) {
      const auto p = S.params(f);
      const auto g = S.group(f, 2.0);
      const auto gi = inverse(p, g);
      ASSERT_LT(group_distance(multiply(p, g, gi), identity(f)), 1e-12);
      ASSERT_LT(group_distance(multiply(p, gi, g), identity(f)), 1e-12);
      ASSERT_LT(group_distance(inverse(p, gi), g), 1e-12);
    }
}

TEST(Adjoint, Examples) {
  const auto X = verify::Sampler(9).element(Family::Galilei);
  EXPECT_EQ(adjoint_action(kUnit, identity(Family::Galilei), X).coeffs, X.coeffs);

  ExtendedGroupElement rot{Family::Galilei};
  rot.theta = std::numbers::pi / 2;
  AlgebraElement dv{Family::Galilei};
  dv.set_v({1, 0});
  const auto r = adjoint_action(kUnit, rot, dv);
  expect_vec(r.d_v(), {0, 1}, 1e-15);
  AlgebraVector rest = r.coeffs;
  rest[K1] = rest[K2] = 0.0;
  EXPECT_LT(verify::max_abs(rest), 1e-15);

  ExtendedGroupElement boost{Family::Galilei};
  boost.v = {2, 0};
  const auto b = adjoint_action(kUnit, boost, AlgebraElement::basis(Family::Galilei, J));
  EXPECT_DOUBLE_EQ(b.d_theta(), 1.0);
  expect_vec(b.d_v(), {0, -2});
  EXPECT_DOUBLE_EQ(b.d_phi(), -2.0);
  EXPECT_DOUBLE_EQ(b.d_xi(), 0.0);
}

TEST(Adjoint, FrozenValues) {
  AlgebraElement X{Family::Galilei};
  X.coeffs << 0.5, 1.0, -2.0, 0.3, 0.4, 0.2, 0.1, -0.6, 0.7, -0.2;
  const auto a = adjoint_action(ref_params(Family::Galilei), g1(Family::Galilei), X);
  expect_vec(a.d_v(), {1.2998976786201863, -1.6027036456971195});
  expect_vec(a.d_x(), {-1.6493160209288371, 2.7987646397000048});
  expect_vec(a.d_aux(), {1.3059676533431424, -2.446619683133922});
  EXPECT_NEAR(a.d_xi(), -0.20044274202244708, 1e-14);
  EXPECT_NEAR(a.d_phi(), 0.2388207391639131, 1e-14);

  X.family = Family::ParaGalileiMinus;
  const auto b = adjoint_action(ref_params(Family::ParaGalileiMinus), g1(Family::ParaGalileiMinus), X);
  expect_vec(b.d_x(), {0.2205509612774053, 0.23524990029374926});
  expect_vec(b.d_v(), {1.5873886409538933, -1.3940494592100015});
  expect_vec(b.d_aux(), {-1.9170157431534396, 2.412159286051647});
  EXPECT_NEAR(b.d_xi(), -0.024072742022447052, 1e-14);
  EXPECT_NEAR(b.d_phi(), -0.15766436013799834, 1e-14);
}

TEST(Adjoint, HomomorphismAndLinearity) {
  verify::Sampler S(6);
  for (Family f : verify::kFamilies)
    for (int i = 0; i < 500; ++i) {
      const auto p = S.params(f);
      const auto a = S.group(f), b = S.group(f);
      const auto X = S.element(f), Y = S.element(f);
      ASSERT_LT(verify::max_abs(adjoint_action(p, multiply(p, a, b), X).coeffs -
                                adjoint_action(p, a, adjoint_action(p, b, X)).coeffs),
                1e-10);
      const double u = S.uniform(-2, 2), w = S.uniform(-2, 2);
      ASSERT_LT(verify::max_abs(adjoint_action(p, a, u * X + w * Y).coeffs -
                                (u * adjoint_action(p, a, X) + w * adjoint_action(p, a, Y)).coeffs),
                1e-12);
    }
}

// d/de Ad_{exp(e X_a)} e_b = [X_a, e_b]: the action and the structure
// constants describe the same algebra.
TEST(Adjoint, DerivativeIsBracket) {
  for (Family f : verify::kFamilies) {
    const auto p = ref_params(f);
    const auto C = build_algebra(p);
    const double h = 1e-6;
    const int generators[] = {J, K1, K2, P1, P2, Aux1, Aux2, H};
    for (int a : generators) {
      auto element = [&](double s) {
        ExtendedGroupElement g{f};
        Eigen::Matrix<double, 10, 1> v = Eigen::Matrix<double, 10, 1>::Zero();
        // group parameter slots in the order (theta, v, x, t, aux, ...)
        const int slot[] = {0, 1, 2, 3, 4, 6, 7, 5};
        v[slot[a]] = s;
        g.theta = v[0], g.v = {v[1], v[2]}, g.x = {v[3], v[4]}, g.t = v[5], g.aux = {v[6], v[7]};
        return g;
      };
      for (int b = 0; b < kAlgebraDim; ++b) {
        const auto eb = AlgebraElement::basis(f, b);
        const AlgebraVector d =
            (adjoint_action(p, element(h), eb).coeffs - adjoint_action(p, element(-h), eb).coeffs) / (2 * h);
        ASSERT_LT(verify::max_abs(d - bracket(C, AlgebraElement::basis(f, a), eb).coeffs), 1e-8)
            << family_name(f) << " a=" << a << " b=" << b;
      }
    }
  }
}
