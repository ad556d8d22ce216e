#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toroidal/cone.hpp"
#include "toroidal/types.hpp"

namespace toroidal {

using RayId = std::size_t;

// A cone of a complex, identified by the sorted ids of its extreme rays.
// The empty id set is the zero cone.
struct Cone {
  std::vector<RayId> rays;

  Cone() = default;
  explicit Cone(std::vector<RayId> ids);

  std::size_t size() const { return rays.size(); }
  bool has(RayId id) const;
  bool is_face_of(const Cone& other) const;  // ray subset

  auto operator<=>(const Cone&) const = default;
};

Cone join(const Cone& cone, RayId extra);
Cone meet(const Cone& a, const Cone& b);
std::string to_string(const Cone& cone);

// A conical polyhedral complex embedded in one ambient lattice. Rays are
// owned by the complex and referenced by dense ids; the cone set holds every
// nonzero cone and is closed under taking faces.
class Complex {
 public:
  Complex() = default;
  // Closes `cones` under taking faces. Geometry is not validated here; see
  // validate_complex.
  Complex(Index ambient_rank, std::vector<LatticeVector> rays, const std::vector<Cone>& cones);

  Index ambient_rank() const { return rank_; }
  std::size_t ray_count() const { return rays_.size(); }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const LatticeVector& ray(RayId id) const { return rays_.at(id); }
  const std::set<Cone>& cones() const { return cones_; }
  const std::vector<Cone>& maximal_cones() const { return maximal_; }

  bool has_cone(const Cone& cone) const { return cones_.count(cone) != 0; }
  std::optional<RayId> find_ray(const LatticeVector& generator) const;

  IntMatrix generators(const Cone& cone) const;
  Index dimension(const Cone& cone) const;
  Index dimension() const;  // maximum over cones
  bool is_simplicial(const Cone& cone) const { return dimension(cone) == static_cast<Index>(cone.size()); }

  DualDescription dual(const Cone& cone) const { return dual_description(generators(cone)); }
  bool cone_contains(const Cone& cone, const RationalVector& x) const;

  // Smallest cone containing x (the one whose relative interior holds x),
  // or nullopt when x is outside the support. Returns the zero cone for x = 0.
  std::optional<Cone> carrier(const RationalVector& x) const;

  // A maximal cone containing x, preferring the first in cone order.
  std::optional<Cone> maximal_cone_containing(const RationalVector& x) const;

  friend bool operator==(const Complex& a, const Complex& b);

 private:
  Index rank_ = 0;
  std::vector<LatticeVector> rays_;
  std::set<Cone> cones_;
  std::vector<Cone> maximal_;
};

// Faces of a cone of the complex, including the zero cone and the cone itself.
std::vector<Cone> faces(const Complex& complex, const Cone& cone);

// Facet normals and span equations for a cone of the complex.
DualDescription dual_description(const Complex& complex, const Cone& cone);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_complex(const Complex& complex);

struct SubdivisionReport {
  bool holds = false;
  std::vector<std::string> witnesses;
};

// Whether `fine` is a subdivision of `coarse` with equal support. Throws on
// rank mismatch.
SubdivisionReport is_subdivision(const Complex& fine, const Complex& coarse);

bool is_simplicial(const Complex& complex);
bool is_smooth(const Complex& complex);

// Tiling test: `pieces` (cones of `complex`, all of the target's dimension
// and inside it) cover the target cone exactly. Appends witnesses on failure.
bool tiles(const Complex& complex, const std::vector<Cone>& pieces, const IntMatrix& target,
           std::vector<std::string>* witnesses);

// Deterministic text form (rank, rays, maximal cones) and its hash.
std::string canonical_text(const Complex& complex);
std::uint64_t content_hash(const Complex& complex);

}  // namespace toroidal
