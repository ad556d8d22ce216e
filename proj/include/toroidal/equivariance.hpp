#pragma once

#include <map>
#include <string>
#include <vector>

#include "toroidal/complex.hpp"
#include "toroidal/order_function.hpp"

namespace toroidal {

inline constexpr std::size_t default_group_cap = 10000;

// Closure of the generators under multiplication, identity first, then in
// breadth-first discovery order. Throws on a non-unimodular generator or when
// the group grows past `cap`.
std::vector<IntMatrix> generate_group(const std::vector<IntMatrix>& generators, Index rank,
                                      std::size_t cap = default_group_cap);

struct ActionReport {
  bool valid = true;
  std::vector<std::vector<RayId>> ray_permutations;  // per element: ray id -> image id
  std::vector<std::string> violations;
};

ActionReport verify_action(const Complex& complex, const std::vector<IntMatrix>& elements);

struct GroupAction {
  std::vector<IntMatrix> elements;
  std::vector<std::vector<RayId>> ray_permutations;

  std::size_t order() const { return elements.size(); }
  Cone image(std::size_t element, const Cone& cone) const;
};

// Throws with the first violation when the elements do not act on the complex.
GroupAction bind_action(const Complex& complex, const std::vector<IntMatrix>& elements);

struct CheckReport {
  bool passed = true;
  std::vector<std::string> violations;
};

CheckReport check_fixed_cone_identity(const Complex& complex, const GroupAction& action);
CheckReport check_g_strict(const Complex& complex, const GroupAction& action);

// Orbit label of every ray: the smallest ray id in its orbit.
std::vector<RayId> ray_orbits(const GroupAction& action, std::size_t ray_count);

bool is_equivariant_subdivision(const Complex& fine, const Complex& coarse, const std::vector<IntMatrix>& elements);

// Distinct primitive images of a point, in lexicographic order.
std::vector<LatticeVector> orbit(const std::vector<IntMatrix>& elements, const LatticeVector& point);

// No two of the points lie in a common cone.
bool simultaneous_safe(const Complex& complex, const std::vector<LatticeVector>& points);

Complex equivariant_star_subdivide(const Complex& complex, const LatticeVector& center,
                                   const std::vector<IntMatrix>& elements);

struct QuotientStructure {
  struct FaceLink {
    std::size_t cone;     // index into cone_representatives
    std::size_t face;     // index into cone_representatives
    std::size_t element;  // g with g(representative of face) a facet of the cone representative
  };
  std::vector<RayId> ray_representatives;
  std::vector<std::size_t> ray_orbit_sizes;
  std::vector<Cone> cone_representatives;
  std::vector<std::size_t> cone_orbit_sizes;
  std::vector<bool> maximal;
  std::vector<FaceLink> face_links;
  std::vector<IntMatrix> lattice_bases;  // saturation basis per cone representative

  std::size_t maximal_orbit_count() const;
};

QuotientStructure quotient_structure(const Complex& complex, const GroupAction& action);

// Extends values given on some ray of each orbit of `subdivision` to all rays.
OrderFunction invariant_order_function(const Complex& base, const Complex& subdivision,
                                       const std::vector<IntMatrix>& elements,
                                       const std::map<RayId, Integer>& representative_values);

// ord(g ray) == ord(ray) for every element and ray of the subdivision.
bool is_invariant(const OrderFunction& ord, const GroupAction& action_on_subdivision);

}  // namespace toroidal
