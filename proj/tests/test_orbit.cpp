#include "orbitkit/orbit.hpp"
#include "orbitkit/verify.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace orbitkit;

namespace {

constexpr double kFd = 1e-6;

CoadjointVector dual(Family f, double m = 1.0) {
  CoadjointVector xi{f};
  xi.m = m;
  xi.h = m;  // c = omega = 1
  return xi;
}

OrbitPoint unit_point(Family f, const Vec2& q, const Vec2& mom, double alpha = 0.7) {
  OrbitPoint pt{f};
  pt.casimir = {1.0, 1.0, 1.0, 0.0};
  pt.fields = FieldParams::from_policy(1.0, 1.0);
  pt.alpha = alpha;
  pt.q = q;
  pt.mom = mom;
  pt.s = 0.3;
  return pt;
}

std::map<std::string, double> table_values(const OrbitPoint& pt) {
  std::map<std::string, double> out;
  for (const auto& e : bracket_table(pt)) out[e.name] = e.value;
  return out;
}

double coord_bracket(int a, int b, const OrbitPoint& pt) {
  return poisson_bracket(coordinate_function(a), coordinate_function(b), pt);
}

}  // namespace

TEST(FromCoadjoint, GalileiExamples) {
  const auto fp = FieldParams::from_policy(1.0, 1.0);
  auto xi = dual(Family::Galilei);
  xi.k = {2, 0};
  xi.f = {1, 0};
  xi.j = 5;
  auto pt = from_coadjoint(xi, fp);
  EXPECT_EQ(pt.q, Vec2(2, 0));
  EXPECT_DOUBLE_EQ(pt.alpha, 0.0);
  EXPECT_DOUBLE_EQ(pt.s, 5.0);

  // s = j + p x q - e*B* p^2 / 2 (see README on the sign of the correction).
  auto xi2 = dual(Family::Galilei);
  xi2.p = {1, 0};
  xi2.f = {0, 1};
  EXPECT_DOUBLE_EQ(from_coadjoint(xi2, fp).s, -0.5);
}

TEST(FromCoadjoint, ParaExample) {
  auto xi = dual(Family::ParaGalileiPlus);
  xi.k = {1, 0};
  xi.p = {0, 1};
  EXPECT_DOUBLE_EQ(from_coadjoint(xi, FieldParams::from_policy(1.0, 1.0)).s, -0.5);
}

TEST(FromCoadjoint, ZeroIntensity) {
  EXPECT_THROW(from_coadjoint(dual(Family::Galilei), FieldParams{}), ZeroIntensity);
  EXPECT_THROW(from_coadjoint(dual(Family::ParaGalileiMinus), FieldParams{}), ZeroIntensity);
}

TEST(ToCoadjoint, SimplePointRecoveredExactly) {
  auto xi = dual(Family::Galilei);
  xi.h = 0.0;
  xi.f = {1, 0};
  const auto back = to_coadjoint(from_coadjoint(xi, FieldParams::from_policy(1.0, 1.0)));
  EXPECT_EQ(verify::dual_distance(back, xi), 0.0);
}

TEST(ToCoadjoint, RoundTrip) {
  verify::Sampler S(2);
  for (Family f : verify::kFamilies)
    for (int i = 0; i < 500; ++i) {
      const auto p = S.params(f);
      const auto xi = S.coadjoint(p);
      const auto fp = FieldParams::from_policy(xi.m, p.omega);
      const auto pt = from_coadjoint(xi, fp);
      const auto back = to_coadjoint(pt);
      ASSERT_LT(verify::dual_distance(back, xi), 1e-12);
      ASSERT_LT(verify::rel_dev(casimirs(back, fp).U, pt.casimir.U), 1e-12);
    }
}

TEST(PoissonBracket, CoordinateValues) {
  const auto g = unit_point(Family::Galilei, {0.2, -0.4}, {0.5, 1.1});
  EXPECT_NEAR(coord_bracket(kQ1, kQ2, g), -1.0, kFd);
  EXPECT_NEAR(coord_bracket(kMom1, kMom2, g), 0.0, kFd);
  const auto p = unit_point(Family::ParaGalileiMinus, {0.2, -0.4}, {0.5, 1.1});
  EXPECT_NEAR(coord_bracket(kMom1, kMom2, p), -1.0, kFd);
  EXPECT_NEAR(coord_bracket(kQ1, kQ2, p), 0.0, kFd);
  for (const auto& pt : {g, p})
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) EXPECT_EQ(bracket_matrix(pt)(kMom1 + i, kQ1 + j), i == j ? 1.0 : 0.0);
}

TEST(PoissonBracket, Antisymmetry) {
  verify::Sampler S(3);
  for (Family f : verify::kFamilies) {
    const auto pt = S.point(S.params(f));
    const auto F = S.quadratic(), G = S.quadratic();
    EXPECT_NEAR(poisson_bracket(F, F, pt), 0.0, 1e-10);
    EXPECT_NEAR(poisson_bracket(F, G, pt), -poisson_bracket(G, F, pt), 1e-10);
  }
}

// G scales as 1/(m omega), F as m omega.
TEST(PoissonBracket, FieldScaling) {
  auto g = unit_point(Family::Galilei, {0.1, 0.2}, {0.3, 0.4});
  auto p = unit_point(Family::ParaGalileiPlus, {0.1, 0.2}, {0.3, 0.4});
  const double g1 = coord_bracket(kQ1, kQ2, g), p1 = coord_bracket(kMom1, kMom2, p);
  g.casimir.m = p.casimir.m = 2.0;
  g.fields = p.fields = FieldParams::from_policy(2.0, 1.0);
  EXPECT_NEAR(coord_bracket(kQ1, kQ2, g), g1 / 2.0, kFd);
  EXPECT_NEAR(coord_bracket(kMom1, kMom2, p), 2.0 * p1, kFd);
}

TEST(BracketTable, Entries) {
  const auto g = table_values(unit_point(Family::Galilei, {0.2, -0.4}, {0.5, 1.1}));
  EXPECT_EQ(g.at("q1,q2"), -1.0);
  EXPECT_EQ(g.at("alpha,q1"), 0.0);
  EXPECT_EQ(g.at("mom1,q1"), 1.0);
  EXPECT_EQ(g.at("s,alpha"), 1.0);
  EXPECT_EQ(g.at("q1,eAstar2"), -0.5);
  EXPECT_EQ(g.at("j,q1"), 0.4);  // {j, q} = -eps(q): j generates rotations

  const auto p = table_values(unit_point(Family::ParaGalileiPlus, {0.2, -0.4}, {0.5, 1.1}));
  EXPECT_EQ(p.at("mom1,mom2"), -1.0);
  EXPECT_EQ(p.at("mom1,eA2"), 0.5);
}

TEST(BracketTable, MatchesFiniteDifferences) {
  verify::Sampler S(4);
  for (Family f : verify::kFamilies)
    for (int i = 0; i < 200; ++i) {
      const auto pt = S.point(S.params(f));
      for (const auto& e : bracket_table(pt))
        ASSERT_NEAR(poisson_bracket(e.left, e.right, pt), e.value, kFd) << family_name(f) << " " << e.name;
    }
}

// The printed {s, .} rows are not brackets of the chart coordinate s: with
// {s, alpha} the only nonzero s-bracket, {s, q} and {s, mom} vanish.
TEST(BracketTable, PrintedSRowsDisagree) {
  const auto pt = unit_point(Family::Galilei, {0.2, -0.4}, {0.5, 1.1});
  double worst = 0.0;
  for (const auto& e : printed_s_rows(pt)) {
    EXPECT_NEAR(poisson_bracket(e.left, e.right, pt), 0.0, kFd) << e.name;
    worst = std::max(worst, std::abs(e.value));
  }
  EXPECT_GT(worst, 0.1);
}

TEST(PoissonBracket, JacobiAndLeibniz) {
  verify::Sampler S(5);
  for (Family f : verify::kFamilies)
    for (int i = 0; i < 20; ++i) {
      const auto pt = S.point(S.params(f));
      const auto F = S.quadratic(), G = S.quadratic(), K = S.quadratic();
      auto br = [&pt](const PhaseFunction& a, const PhaseFunction& b) -> PhaseFunction {
        return [a, b, pt](const Coords& y) { return poisson_bracket(a, b, pt.with_coords(y)); };
      };
      const double jac = poisson_bracket(br(F, G), K, pt) + poisson_bracket(br(G, K), F, pt) +
                         poisson_bracket(br(K, F), G, pt);
      ASSERT_NEAR(jac, 0.0, 1e-4);
      const PhaseFunction GK = [G, K](const Coords& y) { return G(y) * K(y); };
      const double y = poisson_bracket(F, G, pt) * K(pt.coords()) + G(pt.coords()) * poisson_bracket(F, K, pt);
      ASSERT_LT(verify::rel_dev(poisson_bracket(F, GK, pt), y), 1e-6);
    }
}

TEST(CanonicalCoords, Examples) {
  const auto zero = unit_point(Family::Galilei, {0.3, 0.7}, {0, 0});
  const Vec6 c0 = canonical_coords(zero);
  EXPECT_DOUBLE_EQ(c0[4], 0.3);
  EXPECT_DOUBLE_EQ(c0[5], 0.7);
  const Vec6 c1 = canonical_coords(unit_point(Family::Galilei, {0, 0}, {1, 0}));
  EXPECT_DOUBLE_EQ(c1[4], 0.0);
  EXPECT_DOUBLE_EQ(c1[5], -0.5);
}

TEST(CanonicalCoords, AreCanonical) {
  verify::Sampler S(6);
  for (Family f : verify::kFamilies)
    for (int i = 0; i < 50; ++i) {
      const auto pt = S.point(S.params(f));
      auto fn = [&pt](int a) -> PhaseFunction {
        return [a, pt](const Coords& y) { return canonical_coords(pt.with_coords(y))[a]; };
      };
      // (s, p1, p2) conjugate to (alpha, q1, q2)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          ASSERT_NEAR(poisson_bracket(fn(a), fn(3 + b), pt), a == b ? 1.0 : 0.0, kFd);
          ASSERT_NEAR(poisson_bracket(fn(a), fn(b), pt), 0.0, kFd);
          ASSERT_NEAR(poisson_bracket(fn(3 + a), fn(3 + b), pt), 0.0, kFd);
        }
    }
}

TEST(Potentials, Antisymmetric) {
  const auto pg = potentials(unit_point(Family::Galilei, {0.3, 0.7}, {1, 2}));
  EXPECT_EQ(pg.Gupper, -pg.Gupper.transpose());
  EXPECT_EQ(pg.Astar, Vec2(-1.0, 0.5));
  const auto pp = potentials(unit_point(Family::ParaGalileiPlus, {0.3, 0.7}, {1, 2}));
  EXPECT_EQ(pp.Flower, -pp.Flower.transpose());
}

// Coordinate brackets are the closed-form inverse Kirillov matrix pushed
// through the chart's tangent map.
TEST(TangentMap, PushesInverseKirillovToChart) {
  verify::Sampler S(7);
  for (Family f : verify::kFamilies)
    for (int i = 0; i < 100; ++i) {
      const auto pt = S.point(S.params(f));
      const auto xi = to_coadjoint(pt);
      const Mat6 T = tangent_map(pt);
      ASSERT_LT(verify::max_abs(T * closed_form_inverse(xi, pt.fields) * T.transpose() - bracket_matrix(pt)), 1e-9);
    }
}
