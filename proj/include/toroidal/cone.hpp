#pragma once

// Geometry of a single pointed cone given by generator columns.

#include <vector>

#include "toroidal/types.hpp"

namespace toroidal {

struct DualDescription {
  Index dimension = 0;
  // Primitive integer covectors, nonnegative on the cone, one per facet.
  std::vector<LatticeVector> facet_normals;
  // Generator column indices lying on each facet.
  std::vector<std::vector<Index>> facet_generators;
  // Primitive integer covectors vanishing on the linear span.
  std::vector<LatticeVector> span_equations;
};

// Facet inequalities and span equations. Throws "not pointed".
DualDescription dual_description(const IntMatrix& gens);

bool contains(const DualDescription& dual, const RationalVector& x);
bool relative_interior_contains(const DualDescription& dual, const RationalVector& x);

// Faces as sorted generator index sets, from the zero face up to the full
// index set. Simplicial cones take the subset shortcut.
std::vector<std::vector<Index>> cone_faces(const IntMatrix& gens);

// Generator indices that are not extreme rays of cone(gens).
std::vector<Index> redundant_generators(const IntMatrix& gens);

// Primitive extreme rays of {x : a x >= 0, e x = 0} (rows are covectors).
// Throws "not pointed" if the region contains a line.
std::vector<LatticeVector> extreme_rays(const IntMatrix& inequalities, const IntMatrix& equalities,
                                        Index ambient);

// Coefficients of x in the columns of independent `gens`, if x is in their span.
std::optional<RationalVector> coordinates_in(const IntMatrix& gens, const RationalVector& x);

}  // namespace toroidal
