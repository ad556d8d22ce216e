#pragma once

// Fixtures and independent oracles shared by the unit and acceptance tests.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toroidal/complex.hpp"
#include "toroidal/equivariance.hpp"
#include "toroidal/lattice.hpp"
#include "toroidal/linalg.hpp"
#include "toroidal/subdivision.hpp"

namespace support {

using namespace toroidal;

inline LatticeVector vec(std::initializer_list<long> xs) {
  LatticeVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v[i++] = x;
  return v;
}

inline RationalVector rvec(std::initializer_list<Rational> xs) {
  RationalVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

inline IntMatrix cols(const std::vector<LatticeVector>& vs) { return columns(vs, vs.front().size()); }

inline IntMatrix rows(std::initializer_list<std::initializer_list<long>> rs) {
  IntMatrix m(static_cast<Index>(rs.size()), static_cast<Index>(rs.begin()->size()));
  Index i = 0;
  for (const auto& r : rs) {
    Index j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline Complex fan(Index rank, std::vector<LatticeVector> rays, const std::vector<std::vector<RayId>>& cones) {
  std::vector<Cone> cs;
  for (const auto& c : cones) cs.emplace_back(c);
  return Complex(rank, std::move(rays), cs);
}

inline Complex orthant(Index d) {
  std::vector<LatticeVector> rays;
  std::vector<RayId> ids;
  for (Index i = 0; i < d; ++i) {
    rays.push_back(LatticeVector::Unit(d, i));
    ids.push_back(static_cast<RayId>(i));
  }
  return fan(d, rays, {ids});
}

// Complete fan of the coordinate hyperplanes: rays +-e_i, one cone per orthant.
inline Complex coordinate_fan(Index d) {
  std::vector<LatticeVector> rays;
  for (Index i = 0; i < d; ++i) {
    rays.push_back(LatticeVector::Unit(d, i));
    rays.push_back(-LatticeVector::Unit(d, i));
  }
  std::vector<std::vector<RayId>> cones;
  for (long mask = 0; mask < (1L << d); ++mask) {
    std::vector<RayId> c;
    for (Index i = 0; i < d; ++i) c.push_back(static_cast<RayId>(2 * i + ((mask >> i) & 1)));
    cones.push_back(c);
  }
  return fan(d, rays, cones);
}

inline Complex two_cone(long r) { return fan(2, {vec({1, 0}), vec({1, r})}, {{0, 1}}); }

inline Complex square_cone() {
  return fan(3, {vec({1, 1, 1}), vec({-1, 1, 1}), vec({-1, -1, 1}), vec({1, -1, 1})}, {{0, 1, 2, 3}});
}

inline Complex hexagon_cone() {
  return fan(3,
             {vec({1, 0, 1}), vec({0, 1, 1}), vec({-1, 1, 1}), vec({-1, 0, 1}), vec({0, -1, 1}), vec({1, -1, 1})},
             {{0, 1, 2, 3, 4, 5}});
}

// Face fan of the cube [-1,1]^3: six square cones.
inline Complex cube_fan() {
  std::vector<LatticeVector> rays;
  for (long x : {1, -1})
    for (long y : {1, -1})
      for (long z : {1, -1}) rays.push_back(vec({x, y, z}));
  // ray index = 4*(x<0) + 2*(y<0) + (z<0)
  return fan(3, rays, {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5}, {2, 3, 6, 7}, {0, 2, 4, 6}, {1, 3, 5, 7}});
}

// Cone over the cube in rank 4.
inline Complex cube_cone() {
  std::vector<LatticeVector> rays;
  std::vector<RayId> ids;
  for (long x : {1, -1})
    for (long y : {1, -1})
      for (long z : {1, -1}) {
        ids.push_back(rays.size());
        rays.push_back(vec({x, y, z, 1}));
      }
  return fan(4, rays, {ids});
}

inline Complex p2_fan() {
  return fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}});
}

inline Complex hirzebruch(long a) {
  return fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, a}), vec({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline Complex star_orthant() { return star_subdivide(orthant(2), vec({1, 1})); }

// Permutation matrix sending e_i to e_image[i].
inline IntMatrix permutation(const std::vector<int>& image) {
  const auto n = static_cast<Index>(image.size());
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(image[static_cast<std::size_t>(i)], i) = 1;
  return m;
}

inline IntMatrix swap2() { return permutation({1, 0}); }
inline IntMatrix cycle3() { return permutation({1, 2, 0}); }
inline IntMatrix transposition3() { return permutation({1, 0, 2}); }

struct NamedAction {
  std::string name;
  Index rank;
  std::vector<IntMatrix> elements;
};

inline std::vector<NamedAction> standard_actions() {
  return {{"swap", 2, generate_group({swap2()}, 2)},
          {"3-cycle", 3, generate_group({cycle3()}, 3)},
          {"S3", 3, generate_group({cycle3(), transposition3()}, 3)}};
}

struct Case {
  std::string name;
  Complex complex;
};

// Twenty complexes of rank <= 4, simplicial and not, complete and not.
inline std::vector<Case> corpus() {
  return {
      {"2-orthant", orthant(2)},
      {"3-orthant", orthant(3)},
      {"4-orthant", orthant(4)},
      {"square cone", square_cone()},
      {"cube face fan", cube_fan()},
      {"hexagon cone", hexagon_cone()},
      {"cone over cube", cube_cone()},
      {"coordinate fan 2", coordinate_fan(2)},
      {"coordinate fan 3", coordinate_fan(3)},
      {"projective plane", p2_fan()},
      {"hirzebruch 2", hirzebruch(2)},
      {"<(1,0),(1,2)>", two_cone(2)},
      {"<(1,0),(1,5)>", two_cone(5)},
      {"<e1,e2,(1,1,3)>", fan(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 3})}, {{0, 1, 2}})},
      {"<e1,e2,(1,2,5)>", fan(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 2, 5})}, {{0, 1, 2}})},
      {"two 3-cones", fan(3, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({1, 1, -2})}, {{0, 1, 2}, {0, 1, 3}})},
      {"star orthant", star_orthant()},
      {"rays only", fan(2, {vec({1, 0}), vec({0, 1}), vec({-1, -1})}, {{0}, {1}, {2}})},
      {"2-cone in rank 3", fan(3, {vec({1, 0, 0}), vec({1, 2, 0})}, {{0, 1}})},
      {"<e1,e2,e3,(1,1,1,2)>",
       fan(4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0}), vec({1, 1, 1, 2})}, {{0, 1, 2, 3}})},
  };
}

// Cone sets compared through ray generators, independent of ray ids.
inline std::set<std::set<std::vector<Integer>>> geometric_cones(const Complex& c) {
  std::set<std::set<std::vector<Integer>>> out;
  for (const auto& cone : c.cones()) {
    std::set<std::vector<Integer>> rays;
    for (RayId id : cone.rays) rays.insert(to_std(c.ray(id)));
    out.insert(rays);
  }
  return out;
}

// ---------------------------------------------------------------- oracles

inline Rational determinant(RationalMatrix m) {
  const Index n = m.rows();
  Rational det = 1;
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.row(p).swap(m.row(k));
      det = -det;
    }
    det *= m(k, k);
    for (Index i = k + 1; i < n; ++i) {
      const Rational f = m(i, k) / m(k, k);
      m.row(i) -= f * m.row(k);
    }
  }
  return det;
}

inline std::vector<std::vector<Index>> subsets(Index n, Index k) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> cur;
  std::function<void(Index)> rec = [&](Index start) {
    if (static_cast<Index>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (Index i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// gcd of all k x k minors.
inline Integer minor_gcd(const IntMatrix& m, Index k) {
  Integer g = 0;
  for (const auto& r : subsets(m.rows(), k))
    for (const auto& c : subsets(m.cols(), k)) {
      RationalMatrix sub(k, k);
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) sub(i, j) = Rational(m(r[i], c[j]));
      g = gcd(g, mp::numerator(determinant(sub)));
    }
  return g;
}

// Nonzero elementary divisors from determinantal divisors d_k = D_k / D_{k-1}.
inline std::vector<Integer> elementary_divisors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer previous = 1;
  for (Index k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    const Integer dk = minor_gcd(m, k);
    if (dk == 0) break;
    out.push_back(dk / previous);
    previous = dk;
  }
  return out;
}

// Index of a simplicial cone: gcd of the maximal minors of its generator matrix.
inline Integer index_by_minors(const IntMatrix& gens) { return minor_gcd(gens, gens.cols()); }

struct BoxPoint {
  LatticeVector point;
  RationalVector coordinates;
};

// Every lattice point of the bounding box of the half-open parallelepiped,
// kept when its coordinates lie in [0,1).
inline std::vector<BoxPoint> box_scan(const IntMatrix& gens) {
  const Index n = gens.rows();
  std::vector<long> lo(n), hi(n);
  for (Index i = 0; i < n; ++i) {
    Integer a = 0, b = 0;
    for (Index j = 0; j < gens.cols(); ++j) (gens(i, j) < 0 ? a : b) += gens(i, j);
    lo[i] = a.convert_to<long>();
    hi[i] = b.convert_to<long>();
  }
  std::vector<BoxPoint> out;
  LatticeVector p(n);
  std::function<void(Index)> rec = [&](Index i) {
    if (i == n) {
      if (p.isZero()) return;
      const auto c = coordinates_in(gens, to_rational(p));
      if (!c) return;
      for (Index j = 0; j < c->size(); ++j)
        if ((*c)[j] < 0 || (*c)[j] >= 1) return;
      out.push_back({p, *c});
      return;
    }
    for (long x = lo[i]; x <= hi[i]; ++x) {
      p[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(a.coordinates, b.coordinates); });
  return out;
}

inline bool primitive_vector(const LatticeVector& v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, v[i]);
  return g == 1;
}

// ---------------------------------------------------------------- random

inline LatticeVector random_vector(std::mt19937& rng, Index n, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  LatticeVector v(n);
  do {
    for (Index i = 0; i < n; ++i) v[i] = d(rng);
  } while (v.isZero());
  return v;
}

// Linearly independent random generators.
inline IntMatrix random_simplicial(std::mt19937& rng, Index n, Index k, long bound) {
  for (;;) {
    std::vector<LatticeVector> vs;
    for (Index j = 0; j < k; ++j) vs.push_back(primitive<Integer>(random_vector(rng, n, bound)));
    IntMatrix m = columns(vs, n);
    if (rank(m) == k) return m;
  }
}

// A random point strictly inside a cone of the complex, as a positive rational
// combination of the cone's rays.
inline RationalVector random_point(std::mt19937& rng, const Complex& c, const Cone& cone) {
  std::uniform_int_distribution<long> d(1, 97);
  RationalVector x = RationalVector::Zero(c.ambient_rank());
  for (RayId id : cone.rays) x += Rational(d(rng), d(rng)) * to_rational(c.ray(id));
  return x;
}

// Signed permutation matrices of rank n.
inline IntMatrix random_signed_permutation(std::mt19937& rng, Index n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  IntMatrix m = IntMatrix::Zero(n, n);
  std::uniform_int_distribution<int> coin(0, 1);
  for (Index i = 0; i < n; ++i) m(perm[static_cast<std::size_t>(i)], i) = coin(rng) ? 1 : -1;
  return m;
}

// Random G-invariant complex: barycentric subdivision of the coordinate fan,
// followed by a few equivariant star subdivisions at random lattice points.
inline Complex random_invariant_complex(std::mt19937& rng, Index n, const std::vector<IntMatrix>& elements,
                                        int stars) {
  Complex c = coordinate_fan(n);
  std::uniform_int_distribution<int> coin(0, 1);
  if (coin(rng)) c = barycentric_subdivision(c);
  for (int s = 0; s < stars; ++s) {
    const LatticeVector p = random_vector(rng, n, 3);
    try {
      c = equivariant_star_subdivide(c, p, elements);
    } catch (const Error&) {
    }
  }
  return c;
}

}  // namespace support
