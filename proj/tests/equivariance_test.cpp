#include <gtest/gtest.h>

#include "support.hpp"
#include "toroidal/equivariance.hpp"

using namespace toroidal;
using support::fan;
using support::vec;

namespace {

const std::vector<IntMatrix> trivial{IntMatrix::Identity(2, 2)};

std::vector<IntMatrix> swap_group() { return generate_group({support::swap2()}, 2); }
std::vector<IntMatrix> cycle_group() { return generate_group({support::cycle3()}, 3); }

}  // namespace

TEST(GenerateGroup, Examples) {
  EXPECT_EQ(generate_group({}, 2).size(), 1u);
  EXPECT_EQ(swap_group().size(), 2u);
  EXPECT_EQ(cycle_group().size(), 3u);
  EXPECT_EQ(generate_group({support::cycle3(), support::transposition3()}, 3).size(), 6u);
  EXPECT_EQ(generate_group({support::permutation({1, 2, 3, 0}), support::permutation({1, 0, 2, 3})}, 4).size(), 24u);
}

TEST(GenerateGroup, RejectsNonUnimodular) {
  EXPECT_THROW(generate_group({support::rows({{2, 0}, {0, 1}})}, 2), Error);
  EXPECT_THROW(generate_group({support::rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})}, 2), Error);
}

TEST(GenerateGroup, CapExceeded) {
  EXPECT_THROW(generate_group({support::cycle3(), support::transposition3()}, 3, 5), Error);
  EXPECT_EQ(generate_group({support::cycle3(), support::transposition3()}, 3, 6).size(), 6u);
}

TEST(VerifyAction, SwapOnOrthant) {
  const auto r = verify_action(support::orthant(2), swap_group());
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.ray_permutations[1], (std::vector<RayId>{1, 0}));
}

TEST(VerifyAction, SwapOnIndexTwoCone) {
  const auto r = verify_action(support::two_cone(2), swap_group());
  EXPECT_FALSE(r.valid);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_NE(r.violations.front().find("not a ray"), std::string::npos);
}

TEST(VerifyAction, TrivialGroup) {
  for (const auto& c : support::corpus()) {
    const std::vector<IntMatrix> id{IntMatrix::Identity(c.complex.ambient_rank(), c.complex.ambient_rank())};
    EXPECT_TRUE(verify_action(c.complex, id).valid) << c.name;
  }
}

TEST(FixedConeIdentity, SwapExamples) {
  const Complex star = support::star_orthant();
  EXPECT_TRUE(check_fixed_cone_identity(star, bind_action(star, swap_group())).passed);
  const Complex o = support::orthant(2);
  const auto r = check_fixed_cone_identity(o, bind_action(o, swap_group()));
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.violations.front().find("{0 1}"), std::string::npos);
}

TEST(FixedConeIdentity, ThreeCycleOnBarycentric) {
  const Complex b = barycentric_subdivision(support::orthant(3));
  EXPECT_TRUE(check_fixed_cone_identity(b, bind_action(b, cycle_group())).passed);
}

TEST(GStrict, Examples) {
  const Complex o = support::orthant(2);
  EXPECT_FALSE(check_g_strict(o, bind_action(o, swap_group())).passed);
  const Complex star = support::star_orthant();
  EXPECT_TRUE(check_g_strict(star, bind_action(star, swap_group())).passed);
  for (const auto& c : support::corpus()) {
    const auto n = c.complex.ambient_rank();
    EXPECT_TRUE(check_g_strict(c.complex, bind_action(c.complex, {IntMatrix::Identity(n, n)})).passed) << c.name;
  }
}

TEST(EquivariantSubdivision, Examples) {
  const Complex o = support::orthant(2);
  EXPECT_TRUE(is_equivariant_subdivision(barycentric_subdivision(o), o, swap_group()));
  EXPECT_TRUE(is_equivariant_subdivision(support::star_orthant(), o, swap_group()));
  EXPECT_FALSE(is_equivariant_subdivision(star_subdivide(o, vec({2, 1})), o, swap_group()));
}

TEST(EquivariantSubdivision, BarycentricUnderEveryVerifiedAction) {
  for (const auto& c : support::corpus())
    for (const auto& a : support::standard_actions()) {
      if (a.rank != c.complex.ambient_rank() || !verify_action(c.complex, a.elements).valid) continue;
      EXPECT_TRUE(is_equivariant_subdivision(barycentric_subdivision(c.complex), c.complex, a.elements))
          << c.name << " / " << a.name;
    }
}

TEST(EquivariantStar, MirroredCenters) {
  const Complex star = support::star_orthant();
  const Complex s = equivariant_star_subdivide(star, vec({2, 1}), swap_group());
  EXPECT_EQ(s.ray_count(), 5u);
  EXPECT_TRUE(s.find_ray(vec({2, 1})));
  EXPECT_TRUE(s.find_ray(vec({1, 2})));
  EXPECT_TRUE(is_equivariant_subdivision(s, star, swap_group()));
}

TEST(EquivariantStar, FixedCenter) {
  const Complex o = support::orthant(2);
  EXPECT_TRUE(equivariant_star_subdivide(o, vec({1, 1}), swap_group()) == support::star_orthant());
}

TEST(EquivariantStar, OrbitInOneCone) {
  try {
    equivariant_star_subdivide(support::orthant(2), vec({2, 1}), swap_group());
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "orbit not simultaneous-safe");
  }
}

TEST(EquivariantStar, CommutesWithTheGroup) {
  std::mt19937 rng(43);
  const auto group = generate_group({support::cycle3(), support::transposition3()}, 3);
  Complex c = barycentric_subdivision(support::coordinate_fan(3));
  int done = 0;
  for (int t = 0; t < 20 && done < 5; ++t) {
    try {
      const Complex next = equivariant_star_subdivide(c, support::random_vector(rng, 3, 3), group);
      const auto action = bind_action(next, group);
      for (std::size_t e = 0; e < action.order(); ++e) {
        std::set<Cone> image;
        for (const auto& cone : next.cones()) image.insert(action.image(e, cone));
        EXPECT_EQ(image, next.cones());
      }
      c = next;
      ++done;
    } catch (const Error&) {
    }
  }
  EXPECT_GT(done, 0);
}

TEST(Quotient, TrivialGroup) {
  const Complex c = support::p2_fan();
  const auto q = quotient_structure(c, bind_action(c, trivial));
  EXPECT_EQ(q.ray_representatives.size(), c.ray_count());
  EXPECT_EQ(q.cone_representatives.size(), c.cones().size());
  EXPECT_EQ(q.maximal_orbit_count(), c.maximal_cones().size());
}

TEST(Quotient, SwapOnStarOrthant) {
  const Complex star = support::star_orthant();
  const auto q = quotient_structure(star, bind_action(star, swap_group()));
  EXPECT_EQ(q.ray_representatives.size(), 2u);
  EXPECT_EQ(q.ray_orbit_sizes, (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(q.maximal_orbit_count(), 1u);
  // the maximal orbit links to both ray orbits
  std::set<std::size_t> linked;
  for (const auto& l : q.face_links)
    if (q.maximal[l.cone]) linked.insert(l.face);
  EXPECT_EQ(linked.size(), 2u);
}

TEST(Quotient, ThreeCycleOnBarycentric) {
  const Complex b = barycentric_subdivision(support::orthant(3));
  const auto q = quotient_structure(b, bind_action(b, cycle_group()));
  EXPECT_EQ(q.maximal_orbit_count(), 2u);
  for (std::size_t i = 0; i < q.cone_representatives.size(); ++i)
    if (q.maximal[i]) EXPECT_EQ(q.cone_orbit_sizes[i], 3u);
  for (const auto& basis : q.lattice_bases) EXPECT_EQ(cone_index(basis), 1);
}

TEST(Quotient, RequiresStrictness) {
  const Complex o = support::orthant(2);
  EXPECT_THROW(quotient_structure(o, bind_action(o, swap_group())), Error);
}

TEST(InvariantOrderFunction, SwapExtension) {
  const Complex star = support::star_orthant();
  const auto ord = invariant_order_function(support::orthant(2), star, swap_group(), {{0, 2}, {2, 3}});
  EXPECT_EQ(ord.ray_values, (std::vector<Integer>{2, 2, 3}));
}

TEST(InvariantOrderFunction, TrivialGroupIsTheIdentityExtension) {
  const Complex star = support::star_orthant();
  const auto ord = invariant_order_function(support::orthant(2), star, trivial, {{0, 1}, {1, 5}, {2, 4}});
  EXPECT_EQ(ord.ray_values, (std::vector<Integer>{1, 5, 4}));
}

TEST(InvariantOrderFunction, MissingOrInconsistentValues) {
  const Complex star = support::star_orthant();
  EXPECT_THROW(invariant_order_function(support::orthant(2), star, swap_group(), {{0, 2}}), Error);
  EXPECT_THROW(invariant_order_function(support::orthant(2), star, swap_group(), {{0, 2}, {1, 3}, {2, 3}}), Error);
}

TEST(InvariantOrderFunction, ThreeCycleOnBarycentric) {
  const Complex o = support::orthant(3);
  const Complex b = barycentric_subdivision(o);
  const auto labels = barycentric_edge_bijection(o, b);
  // value by the dimension of the original cone: a strictly convex choice
  const std::map<Index, long> by_dim{{1, 6}, {2, 11}, {3, 15}};
  std::map<RayId, Integer> reps;
  const auto action = bind_action(b, cycle_group());
  const auto orbit_of = ray_orbits(action, b.ray_count());
  for (RayId id = 0; id < b.ray_count(); ++id)
    if (orbit_of[id] == id) reps[id] = by_dim.at(o.dimension(labels.at(id)));
  const auto ord = invariant_order_function(o, b, cycle_group(), reps);
  const auto r = verify_order_axioms(ord);
  EXPECT_TRUE(r.order_function() && r.strictly_convex && r.positive) << (r.violations.empty() ? "" : r.violations[0]);

  std::mt19937 rng(47);
  for (const auto& g : cycle_group())
    for (int t = 0; t < 30; ++t) {
      const auto& cone = b.maximal_cones()[static_cast<std::size_t>(t) % b.maximal_cones().size()];
      const RationalVector x = support::random_point(rng, b, cone);
      EXPECT_EQ(evaluate(ord, RationalVector(g.cast<Rational>() * x)), evaluate(ord, x));
    }
}

TEST(Properties, StrictImpliesFixedConeIdentity) {
  std::mt19937 rng(53);
  int strict = 0;
  for (int t = 0; t < 60; ++t) {
    const Index n = 2 + t % 2;
    const auto group = generate_group({support::random_signed_permutation(rng, n)}, n);
    const Complex c = support::random_invariant_complex(rng, n, group, 3);
    const auto action = bind_action(c, group);
    if (!check_g_strict(c, action).passed) continue;
    ++strict;
    EXPECT_TRUE(check_fixed_cone_identity(c, action).passed);
  }
  EXPECT_GT(strict, 10);
}

TEST(Properties, BarycentricIsAlwaysStrict) {
  for (const auto& c : support::corpus())
    for (const auto& a : support::standard_actions()) {
      if (a.rank != c.complex.ambient_rank() || !verify_action(c.complex, a.elements).valid) continue;
      const Complex b = barycentric_subdivision(c.complex);
      EXPECT_TRUE(check_g_strict(b, bind_action(b, a.elements)).passed) << c.name << " / " << a.name;
    }
}

TEST(Properties, OrbitSizesDivideTheGroupOrder) {
  const auto group = generate_group({support::cycle3(), support::transposition3()}, 3);
  const Complex b = barycentric_subdivision(support::coordinate_fan(3));
  const auto q = quotient_structure(b, bind_action(b, group));
  for (auto s : q.ray_orbit_sizes) EXPECT_EQ(group.size() % s, 0u);
  for (auto s : q.cone_orbit_sizes) EXPECT_EQ(group.size() % s, 0u);
}
