#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "toroidal/complex.hpp"

namespace toroidal {

struct Center {
  LatticeVector generator;
  Cone host;  // cone of the input complex whose relative interior holds the center
};

struct SubdivisionStep {
  enum class Kind { centered, barycentric_stage };
  Kind kind = Kind::centered;
  std::vector<Center> centers;
  std::uint64_t input_hash = 0;
  std::uint64_t output_hash = 0;
};

// Star subdivision at the ray through `center`. Every cone containing the
// center is replaced by the joins of its faces missing the center with the
// new ray, which is appended with the next free id. A center that is already
// a ray leaves the complex unchanged. Throws "center not in support".
Complex star_subdivide(const Complex& complex, const LatticeVector& center);

Complex star_subdivide(const Complex& complex, const std::vector<LatticeVector>& centers);

// Primitive generator of the ray through the sum of the cone's primitive
// edge generators.
LatticeVector barycenter(const Complex& complex, const Cone& cone);

// Centers of each barycentric pass: barycenters of the original cones of
// dimension m, m-1, ..., 2, hosted by those cones.
std::vector<std::vector<Center>> barycentric_passes(const Complex& complex);

// Iterated star subdivisions at barycenters of original cones, by
// decreasing dimension.
Complex barycentric_subdivision(const Complex& complex);

// The same complex built recursively over the face poset: the subdivision
// of a cone is that of its boundary plus the joins of each boundary cone
// with the cone's barycenter.
Complex barycentric_subdivision_inductive(const Complex& complex);

// For each ray of `subdivided`, the cone of `base` whose relative interior
// contains it. Throws unless this is a bijection onto the nonzero cones
// inverse to taking barycenters.
std::map<RayId, Cone> barycentric_edge_bijection(const Complex& base, const Complex& subdivided);

}  // namespace toroidal
