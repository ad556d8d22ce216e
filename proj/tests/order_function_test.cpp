#include <gtest/gtest.h>

#include "support.hpp"
#include "toroidal/order_function.hpp"

using namespace toroidal;
using support::fan;
using support::rvec;
using support::vec;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

OrderFunction on_star_orthant(std::initializer_list<long> values) {
  return {support::orthant(2), support::star_orthant(), ints(values)};
}

}  // namespace

TEST(Evaluate, LinearOnAConeOfOnes) {
  const Complex o = support::orthant(2);
  const OrderFunction ord{o, o, ints({1, 1})};
  EXPECT_EQ(evaluate(ord, rvec({2, 3})), 5);
}

TEST(Evaluate, RayGeneratorGivesRayValue) {
  const auto ord = on_star_orthant({2, 2, 3});
  for (RayId id = 0; id < 3; ++id)
    EXPECT_EQ(evaluate(ord, to_rational(ord.subdivision.ray(id))), ord.ray_values[id]);
}

TEST(Evaluate, ContinuousAcrossSharedFacets) {
  const auto ord = on_star_orthant({2, 2, 3});
  // (3,3) lies on the shared ray; each side's linear form gives the same value
  const RationalVector x = rvec({3, 3});
  EXPECT_EQ(evaluate(ord, x), 9);
  const OrderFunction left{ord.base, fan(2, {vec({1, 0}), vec({1, 1})}, {{0, 1}}), ints({2, 3})};
  const OrderFunction right{ord.base, fan(2, {vec({0, 1}), vec({1, 1})}, {{0, 1}}), ints({2, 3})};
  EXPECT_EQ(evaluate(left, x), evaluate(right, x));
}

TEST(Evaluate, OutsideSupportThrows) {
  const auto ord = on_star_orthant({2, 2, 3});
  EXPECT_THROW(evaluate(ord, rvec({-1, 0})), Error);
}

TEST(Axioms, ValuesOneOneOneBendStrictly) {
  const auto r = verify_order_axioms(on_star_orthant({1, 1, 1}));
  EXPECT_TRUE(r.order_function());
  EXPECT_TRUE(r.strictly_convex);
  EXPECT_EQ(r.interior_facets, 1u);
}

// (1,1,2) is the restriction of the linear form x + y: the bend is flat.
TEST(Axioms, LinearValuesAreFlat) {
  const auto r = verify_order_axioms(on_star_orthant({1, 1, 2}));
  EXPECT_TRUE(r.order_function());
  EXPECT_TRUE(r.convex);
  EXPECT_FALSE(r.strictly_convex);
}

TEST(Axioms, StrictPositiveIntegral) {
  const auto r = verify_order_axioms(on_star_orthant({2, 2, 3}));
  EXPECT_TRUE(r.order_function());
  EXPECT_TRUE(r.strictly_convex);
  EXPECT_TRUE(r.positive);
  EXPECT_TRUE(r.integral);
}

TEST(Axioms, ConcaveValuesFailConvexity) {
  const auto r = verify_order_axioms(on_star_orthant({1, 1, 3}));
  EXPECT_FALSE(r.convex);
  EXPECT_FALSE(r.strictly_convex);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_NE(r.violations.front().find("convexity"), std::string::npos);
}

TEST(Axioms, SmoothConeWithoutInteriorFacets) {
  const Complex o = support::orthant(3);
  const auto r = verify_order_axioms({o, o, ints({1, 1, 1})});
  EXPECT_TRUE(r.order_function());
  EXPECT_TRUE(r.strictly_convex);
  EXPECT_TRUE(r.positive);
  EXPECT_EQ(r.interior_facets, 0u);
}

TEST(Axioms, IntegralityAtParallelepipedPoints) {
  const Complex c = support::two_cone(2);
  // (1,1) = (1,0)/2 + (1,2)/2 gets value 3/2
  const auto r = verify_order_axioms({c, c, ints({1, 2})});
  EXPECT_FALSE(r.integral);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_NE(r.violations.front().find("integrality"), std::string::npos);
  EXPECT_TRUE(verify_order_axioms({c, c, ints({1, 3})}).integral);
}

TEST(Axioms, PositivityFlag) {
  const auto r = verify_order_axioms(on_star_orthant({0, 0, -1}));
  EXPECT_FALSE(r.positive);
}

TEST(Axioms, WrongValueCountThrows) { EXPECT_THROW(verify_order_axioms(on_star_orthant({1, 1})), Error); }

TEST(Axioms, NonSimplicialPieceMustBeLinear) {
  const Complex s = support::square_cone();
  EXPECT_TRUE(verify_order_axioms({s, s, ints({1, 1, 1, 1})}).piecewise_linear);
  const auto bad = verify_order_axioms({s, s, ints({1, 1, 1, 2})});
  EXPECT_FALSE(bad.piecewise_linear);
  EXPECT_FALSE(bad.order_function());
}

TEST(LinearityDomains, StrictFunctionKeepsTheSubdivision) {
  const auto ord = on_star_orthant({2, 2, 3});
  EXPECT_TRUE(linearity_domains(ord) == ord.subdivision);
}

TEST(LinearityDomains, FlatFunctionMergesBack) {
  EXPECT_TRUE(linearity_domains(on_star_orthant({1, 1, 2})) == support::orthant(2));
}

TEST(LinearityDomains, GlobalLinearFormGivesTheBase) {
  const Complex o = support::orthant(3);
  const Complex b = barycentric_subdivision(o);
  std::vector<Integer> values;
  for (const auto& r : b.rays()) values.push_back(2 * r[0] + 3 * r[1] + r[2]);
  EXPECT_TRUE(linearity_domains({o, b, values}) == o);
}

TEST(LinearityDomains, NonConvexThrows) { EXPECT_THROW(linearity_domains(on_star_orthant({1, 1, 3})), Error); }

TEST(StarOrderFunction, OrthantScaleTwo) {
  const auto s = star_order_function(support::orthant(2), {vec({1, 1})}, 2);
  EXPECT_EQ(s.ord.ray_values, ints({2, 2, 3}));
  EXPECT_EQ(s.drops, ints({1}));
  const auto r = verify_order_axioms(s.ord);
  EXPECT_TRUE(r.order_function() && r.strictly_convex && r.positive);
}

TEST(StarOrderFunction, OrthantScaleOne) {
  const auto s = star_order_function(support::orthant(2), {vec({1, 1})}, 1);
  EXPECT_EQ(s.ord.ray_values, ints({1, 1, 1}));
  EXPECT_EQ(minimal_star_order_function(support::orthant(2), {vec({1, 1})}).scale, 1);
}

TEST(StarOrderFunction, CenterOnASharedFace) {
  const Complex c = fan(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({0, 0, -1})}, {{0, 1, 2}, {0, 1, 3}});
  const auto s = minimal_star_order_function(c, {vec({1, 1, 0})});
  const auto r = verify_order_axioms(s.ord);
  EXPECT_TRUE(r.order_function() && r.strictly_convex && r.positive);
  // bends are measured inside cones of the base only
  EXPECT_EQ(r.interior_facets, 2u);
  EXPECT_TRUE(linearity_domains(s.ord) == star_subdivide(c, vec({1, 1, 0})));
}

TEST(StarOrderFunction, DropRestoresIntegrality) {
  // the child <(1,0),(1,2)> holds (1,1) where the tent function of (1,2) is 1/2
  const auto s = minimal_star_order_function(support::two_cone(3), {vec({1, 2})});
  EXPECT_EQ(s.drops, ints({2}));
  EXPECT_TRUE(verify_order_axioms(s.ord).integral);
}

TEST(StarOrderFunction, ScaleInsufficient) {
  try {
    star_order_function(support::two_cone(2), {vec({1, 1})}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "scale insufficient");
  }
  EXPECT_THROW(star_order_function(support::orthant(2), {vec({1, 1})}, 0), Error);
}

TEST(StarOrderFunction, LinearityDomainsAreTheStar) {
  for (const auto& c : support::corpus()) {
    if (!is_simplicial(c.complex) || c.complex.dimension() < 2) continue;
    const Cone& host = c.complex.maximal_cones().back();
    const LatticeVector center = barycenter(c.complex, host);
    const auto s = minimal_star_order_function(c.complex, {center});
    EXPECT_TRUE(linearity_domains(s.ord) == star_subdivide(c.complex, center)) << c.name;
  }
}

TEST(StarOrderFunction, IntegralAtRandomLatticePoints) {
  std::mt19937 rng(41);
  const auto s = minimal_star_order_function(support::two_cone(5), {vec({1, 3})});
  const Complex& sub = s.ord.subdivision;
  for (const auto& cone : sub.maximal_cones()) {
    const IntMatrix g = sub.generators(cone);
    auto pts = parallelepiped_points(g);
    pts.push_back({LatticeVector::Zero(2), RationalVector::Zero(2)});
    std::uniform_int_distribution<long> d(0, 6);
    for (int t = 0; t < 20; ++t) {
      LatticeVector p = pts[static_cast<std::size_t>(t) % pts.size()].point;
      for (Index j = 0; j < g.cols(); ++j) p += Integer(d(rng)) * LatticeVector(g.col(j));
      if (p.isZero()) continue;
      EXPECT_TRUE(is_integer(evaluate(s.ord, to_rational(p))));
    }
  }
}

TEST(Compose, WithIdentityInner) {
  const auto outer = star_order_function(support::orthant(2), {vec({1, 1})}, 2).ord;
  const OrderFunction inner{outer.subdivision, outer.subdivision, ints({1, 1, 1})};
  const auto comp = compose_order_functions(outer, inner);
  EXPECT_TRUE(linearity_domains(comp.ord) == outer.subdivision);
}

TEST(Compose, TwoStarsOfTheOrthant) {
  const auto first = minimal_star_order_function(support::orthant(2), {vec({1, 1})});
  const auto second = minimal_star_order_function(first.ord.subdivision, {vec({2, 1})});
  const auto comp = compose_order_functions(first.ord, second.ord);
  const auto r = verify_order_axioms(comp.ord);
  EXPECT_TRUE(r.order_function() && r.strictly_convex && r.positive);
  EXPECT_LE(comp.multiplier, 4);
  EXPECT_TRUE(linearity_domains(comp.ord) == second.ord.subdivision);
  EXPECT_EQ(comp.ord.ray_values, composed_values(first.ord, second.ord, comp.multiplier));
}

TEST(Compose, BarycentricThreeOrthantAsIteratedStars) {
  const Complex o = support::orthant(3);
  std::optional<OrderFunction> total;
  Complex current = o;
  for (const auto& pass : barycentric_passes(o)) {
    std::vector<LatticeVector> centers;
    for (const auto& c : pass) centers.push_back(c.generator);
    const auto s = minimal_star_order_function(current, centers);
    total = total ? compose_order_functions(*total, s.ord).ord : s.ord;
    current = s.ord.subdivision;
  }
  EXPECT_EQ(current.maximal_cones().size(), 6u);
  const auto r = verify_order_axioms(*total);
  EXPECT_TRUE(r.order_function() && r.strictly_convex && r.positive);
  EXPECT_TRUE(linearity_domains(*total) == current);
}

TEST(Compose, CapExceeded) {
  // the unit function of the outer subdivision is concave across (1,0)
  const Complex base = fan(2, {vec({2, 1}), vec({2, -1})}, {{0, 1}});
  const auto first = minimal_star_order_function(base, {vec({1, 0})});
  const auto second = star_order_function(first.ord.subdivision, {vec({3, 1})}, 10);
  const auto comp = compose_order_functions(first.ord, second.ord);
  ASSERT_GT(comp.multiplier, 1);
  try {
    compose_order_functions(first.ord, second.ord, comp.multiplier / 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "composition cap exceeded");
  }
}

TEST(Compose, MismatchedChainThrows) {
  const auto a = minimal_star_order_function(support::orthant(2), {vec({1, 1})});
  const auto b = minimal_star_order_function(support::orthant(2), {vec({2, 1})});
  EXPECT_THROW(compose_order_functions(a.ord, b.ord), Error);
}

TEST(IdentityOrderFunction, SmallestIntegralMultipleOfUnit) {
  EXPECT_EQ(identity_order_function(support::orthant(2)).ray_values, ints({1, 1}));
  EXPECT_EQ(identity_order_function(support::two_cone(2)).ray_values, ints({1, 1}));
  EXPECT_EQ(unit_value(support::two_cone(2), rvec({1, 1})), Rational(1));
  // the unit function is 3/2 at (1,1,1) in <e1,e2,(1,1,2)>
  const Complex c = fan(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 2})}, {{0, 1, 2}});
  EXPECT_EQ(unit_value(c, rvec({1, 1, 1})), Rational(3, 2));
  EXPECT_EQ(identity_order_function(c).ray_values, ints({2, 2, 2}));
}
