#pragma once

#include <string>
#include <vector>

#include "toroidal/complex.hpp"

namespace toroidal {

// A piecewise-linear function on the support of `base`, linear on each cone
// of `subdivision` and given by its integer values on the subdivision's rays.
struct OrderFunction {
  Complex base;
  Complex subdivision;
  std::vector<Integer> ray_values;  // indexed by subdivision ray id
};

// Value at a rational point of the support. Throws "point outside support".
Rational evaluate(const OrderFunction& ord, const RationalVector& x);

struct AxiomReport {
  bool homogeneous = true;       // structural: values on rays, linear on cones
  bool piecewise_linear = true;  // ray values agree with one linear form per cone
  bool integral = true;
  bool convex = true;
  bool strictly_convex = true;
  bool positive = true;
  std::size_t interior_facets = 0;
  std::vector<std::string> violations;

  bool order_function() const { return homogeneous && piecewise_linear && integral && convex; }
};

// Checks integrality on rays and on the parallelepiped points of every
// maximal cone, and the bend across every interior facet lying inside one
// cone of the base. A bend is the value at the far ray minus the linear
// extension from the near side; convexity requires every bend >= 0.
AxiomReport verify_order_axioms(const OrderFunction& ord);

// Coarsest subdivision of the base on whose cones ord is linear. Rays that
// stop being extreme are dropped; survivors are renumbered in id order.
Complex linearity_domains(const OrderFunction& ord);

// Function linear on each cone of `complex` with value 1 on every ray. Throws
// if no such function exists (a non-simplicial cone whose rays do not lie on
// one affine hyperplane).
Rational unit_value(const Complex& complex, const RationalVector& x);

// Smallest positive multiple of the unit function that is integral on all
// lattice points, as an order function of the trivial subdivision.
OrderFunction identity_order_function(const Complex& complex);

struct StarOrderFunction {
  OrderFunction ord;
  Integer scale;
  std::vector<Integer> drops;  // one per center, in center order
};

// Order function for the star subdivision at `centers`: old rays take the
// value `scale`, each center tau takes scale * unit(tau) - drop(tau), where
// the drop is the least positive integer making the drop term integral on
// the lattice points of the new cones through tau. Throws "scale
// insufficient" when the result is not a positive, integral order function
// with strict bends.
StarOrderFunction star_order_function(const Complex& complex, const std::vector<LatticeVector>& centers,
                                      const Integer& scale);

StarOrderFunction minimal_star_order_function(const Complex& complex,
                                              const std::vector<LatticeVector>& centers);

struct Composition {
  OrderFunction ord;
  Integer multiplier;
};

// Order function of base(outer) -> subdivision(inner) with values
// multiplier * outer + inner on the inner rays; the multiplier is searched
// over 1, 2, 4, ... up to `cap` until every bend is strict.
Composition compose_order_functions(const OrderFunction& outer, const OrderFunction& inner,
                                    const Integer& cap = Integer(1) << 20);

// Composite values for a given multiplier, without verification.
std::vector<Integer> composed_values(const OrderFunction& outer, const OrderFunction& inner,
                                     const Integer& multiplier);

}  // namespace toroidal
