#include "toroidal/order_function.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "toroidal/lattice.hpp"
#include "toroidal/linalg.hpp"
#include "toroidal/subdivision.hpp"

namespace toroidal {

namespace {

struct LinearForm {
  RationalVector covector;
  bool consistent = true;
};

// A covector taking the given values on the cone's generators.
LinearForm linear_form(const IntMatrix& gens, const std::vector<Rational>& values) {
  const RationalMatrix g = gens.cast<Rational>();
  const auto basis = independent_columns<Rational>(g);
  RationalMatrix system(static_cast<Index>(basis.size()), g.rows());
  RationalVector rhs(static_cast<Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    system.row(static_cast<Index>(i)) = g.col(basis[i]).transpose();
    rhs[static_cast<Index>(i)] = values[static_cast<std::size_t>(basis[i])];
  }
  LinearForm form;
  form.covector = *solve<Rational>(system, rhs);
  for (Index j = 0; j < g.cols(); ++j)
    if (form.covector.dot(g.col(j)) != values[static_cast<std::size_t>(j)]) form.consistent = false;
  return form;
}

LinearForm form_on(const Complex& complex, const Cone& cone, const std::vector<Integer>& values) {
  std::vector<Rational> local;
  for (RayId id : cone.rays) local.emplace_back(values[id]);
  return linear_form(complex.generators(cone), local);
}

Integer denominator_lcm(const RationalVector& covector, const IntMatrix& lattice_basis) {
  Integer d = 1;
  for (Index j = 0; j < lattice_basis.cols(); ++j)
    d = lcm(d, mp::denominator(covector.dot(lattice_basis.col(j).cast<Rational>())));
  return d;
}

struct Bend {
  std::size_t near;  // index into maximal cones
  std::size_t far;
  Cone facet;
  Rational amount;
};

struct BendAnalysis {
  std::vector<Cone> pieces;
  std::vector<LinearForm> forms;
  std::vector<Bend> bends;
  std::vector<std::string> unplaced;
};

BendAnalysis analyse_bends(const OrderFunction& ord) {
  const Complex& sub = ord.subdivision;
  BendAnalysis out;
  out.pieces = sub.maximal_cones();
  for (const auto& piece : out.pieces) out.forms.push_back(form_on(sub, piece, ord.ray_values));

  std::vector<std::pair<Cone, DualDescription>> hosts;
  for (const auto& c : ord.base.maximal_cones()) hosts.emplace_back(c, ord.base.dual(c));

  std::map<std::size_t, std::vector<std::size_t>> by_host;
  for (std::size_t i = 0; i < out.pieces.size(); ++i) {
    const IntMatrix gens = sub.generators(out.pieces[i]);
    const Index dim = rank(gens);
    bool placed = false;
    for (std::size_t h = 0; h < hosts.size() && !placed; ++h) {
      if (hosts[h].second.dimension != dim) continue;
      bool inside = true;
      for (Index j = 0; j < gens.cols() && inside; ++j)
        inside = contains(hosts[h].second, to_rational(gens.col(j)));
      if (inside) {
        by_host[h].push_back(i);
        placed = true;
      }
    }
    if (!placed) out.unplaced.push_back(to_string(out.pieces[i]));
  }

  for (const auto& [host, members] : by_host) {
    const Index dim = hosts[host].second.dimension;
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const Cone& p = out.pieces[members[a]];
        const Cone& q = out.pieces[members[b]];
        const Cone common = meet(p, q);
        if (static_cast<Index>(common.size()) < dim - 1) continue;
        if (!sub.has_cone(common) && !common.rays.empty()) continue;
        if (sub.dimension(common) != dim - 1) continue;
        RayId far = 0;
        for (RayId id : q.rays)
          if (!common.has(id)) {
            far = id;
            break;
          }
        const Rational extended = out.forms[members[a]].covector.dot(to_rational(sub.ray(far)));
        out.bends.push_back({members[a], members[b], common, Rational(ord.ray_values[far]) - extended});
      }
  }
  return out;
}

}  // namespace

Rational evaluate(const OrderFunction& ord, const RationalVector& x) {
  const auto cone = ord.subdivision.maximal_cone_containing(x);
  if (!cone) throw Error("point outside support");
  return form_on(ord.subdivision, *cone, ord.ray_values).covector.dot(x);
}

AxiomReport verify_order_axioms(const OrderFunction& ord) {
  const Complex& sub = ord.subdivision;
  if (ord.ray_values.size() != sub.ray_count())
    throw Error("order function has " + std::to_string(ord.ray_values.size()) + " values for " +
                std::to_string(sub.ray_count()) + " rays");
  AxiomReport report;
  auto& v = report.violations;

  for (RayId id = 0; id < sub.ray_count(); ++id)
    if (ord.ray_values[id] <= 0) {
      report.positive = false;
      v.push_back("positivity: ray " + std::to_string(id) + " has value " + ord.ray_values[id].str());
    }

  const auto analysis = analyse_bends(ord);
  for (const auto& piece : analysis.unplaced) {
    report.convex = false;
    v.push_back("convexity: cone " + piece + " lies in no cone of the base");
  }

  for (std::size_t i = 0; i < analysis.pieces.size(); ++i) {
    const Cone& piece = analysis.pieces[i];
    const IntMatrix gens = sub.generators(piece);
    if (!analysis.forms[i].consistent) {
      report.piecewise_linear = false;
      v.push_back("piecewise-linearity: values are not linear on cone " + to_string(piece));
      continue;
    }
    if (rank(gens) == gens.cols()) {
      for (const auto& pp : parallelepiped_points(gens)) {
        Rational value = 0;
        for (std::size_t j = 0; j < piece.size(); ++j)
          value += pp.coordinates[static_cast<Index>(j)] * ord.ray_values[piece.rays[j]];
        if (!is_integer(value)) {
          report.integral = false;
          v.push_back("integrality: value " + value.str() + " at lattice point (" + to_string(pp.point) +
                      ") of cone " + to_string(piece));
        }
      }
    } else {
      if (denominator_lcm(analysis.forms[i].covector, saturation_basis(gens)) != 1) {
        report.integral = false;
        v.push_back("integrality: non-integral values on lattice points of cone " + to_string(piece));
      }
    }
  }

  report.interior_facets = analysis.bends.size();
  for (const auto& bend : analysis.bends) {
    if (bend.amount < 0) {
      report.convex = false;
      v.push_back("convexity: bend " + bend.amount.str() + " across facet " + to_string(bend.facet) +
                  " between " + to_string(analysis.pieces[bend.near]) + " and " +
                  to_string(analysis.pieces[bend.far]));
    }
    if (bend.amount <= 0) report.strictly_convex = false;
  }
  if (!report.convex || !report.piecewise_linear) report.strictly_convex = false;
  return report;
}

Complex linearity_domains(const OrderFunction& ord) {
  const auto report = verify_order_axioms(ord);
  if (!report.piecewise_linear || !report.convex)
    throw Error("order function is not convex on the base cones");
  const Complex& sub = ord.subdivision;
  const auto analysis = analyse_bends(ord);

  std::vector<std::size_t> parent(analysis.pieces.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (const auto& bend : analysis.bends)
    if (bend.amount == 0) parent[find(bend.near)] = find(bend.far);

  std::map<std::size_t, std::vector<Cone>> groups;
  for (std::size_t i = 0; i < analysis.pieces.size(); ++i) groups[find(i)].push_back(analysis.pieces[i]);

  std::vector<Cone> merged;
  std::set<RayId> kept;
  for (const auto& [root, members] : groups) {
    if (members.size() == 1) {
      merged.push_back(members.front());
      kept.insert(members.front().rays.begin(), members.front().rays.end());
      continue;
    }
    std::vector<RayId> ids;
    for (const auto& m : members) ids.insert(ids.end(), m.rays.begin(), m.rays.end());
    Cone all(std::move(ids));
    const IntMatrix gens = sub.generators(all);
    const auto redundant = redundant_generators(gens);
    std::vector<RayId> extreme;
    for (std::size_t j = 0; j < all.size(); ++j)
      if (!std::binary_search(redundant.begin(), redundant.end(), static_cast<Index>(j)))
        extreme.push_back(all.rays[j]);
    Cone hull(std::move(extreme));
    if (!tiles(sub, members, sub.generators(hull), nullptr)) throw Error("non-convex linearity domain");
    kept.insert(hull.rays.begin(), hull.rays.end());
    merged.push_back(std::move(hull));
  }

  std::map<RayId, RayId> renumber;
  std::vector<LatticeVector> rays;
  for (RayId id : kept) {
    renumber[id] = rays.size();
    rays.push_back(sub.ray(id));
  }
  std::vector<Cone> cones;
  for (const auto& c : merged) {
    std::vector<RayId> ids;
    for (RayId id : c.rays) ids.push_back(renumber.at(id));
    cones.emplace_back(std::move(ids));
  }
  return Complex(sub.ambient_rank(), std::move(rays), cones);
}

namespace {

LinearForm unit_form(const Complex& complex, const Cone& cone) {
  const IntMatrix gens = complex.generators(cone);
  auto form = linear_form(gens, std::vector<Rational>(cone.size(), Rational(1)));
  if (!form.consistent)
    throw Error("no unit function: rays of cone " + to_string(cone) + " do not lie on one affine hyperplane");
  return form;
}

// lcm of denominators of the unit function over all lattice points.
Integer unit_denominator(const Complex& complex) {
  Integer d = 1;
  for (const auto& cone : complex.maximal_cones())
    d = lcm(d, denominator_lcm(unit_form(complex, cone).covector, saturation_basis(complex.generators(cone))));
  return d;
}

// Least k > 0 with k * (tent function of ray t) integral on the lattice
// points of every cone through t.
Integer center_drop(const Complex& sub, RayId t) {
  Integer k = 1;
  for (const auto& cone : sub.maximal_cones()) {
    if (!cone.has(t)) continue;
    std::vector<Rational> tent;
    for (RayId id : cone.rays) tent.emplace_back(id == t ? 1 : 0);
    const IntMatrix gens = sub.generators(cone);
    const auto form = linear_form(gens, tent);
    if (!form.consistent) throw Error("tent function is not linear on cone " + to_string(cone));
    k = lcm(k, denominator_lcm(form.covector, saturation_basis(gens)));
  }
  return k;
}

struct StarData {
  Complex subdivided;
  std::vector<RayId> center_ids;
  std::vector<Rational> units;
  std::vector<Integer> drops;
};

StarData prepare_star(const Complex& complex, const std::vector<LatticeVector>& centers) {
  StarData data;
  data.subdivided = star_subdivide(complex, centers);
  for (const auto& c : centers) {
    const LatticeVector tau = primitive<Integer>(c);
    if (complex.find_ray(tau)) throw Error("center " + to_string(tau) + " is already a ray");
    const auto id = data.subdivided.find_ray(tau);
    if (std::find(data.center_ids.begin(), data.center_ids.end(), *id) != data.center_ids.end())
      throw Error("repeated center " + to_string(tau));
    data.center_ids.push_back(*id);
    data.units.push_back(unit_value(complex, to_rational(tau)));
    data.drops.push_back(center_drop(data.subdivided, *id));
  }
  return data;
}

}  // namespace

Rational unit_value(const Complex& complex, const RationalVector& x) {
  const auto cone = complex.maximal_cone_containing(x);
  if (!cone) throw Error("point outside support");
  return unit_form(complex, *cone).covector.dot(x);
}

OrderFunction identity_order_function(const Complex& complex) {
  const Integer d = unit_denominator(complex);
  return {complex, complex, std::vector<Integer>(complex.ray_count(), d)};
}

StarOrderFunction star_order_function(const Complex& complex, const std::vector<LatticeVector>& centers,
                                      const Integer& scale) {
  auto data = prepare_star(complex, centers);
  std::vector<Integer> values(data.subdivided.ray_count(), scale);
  for (std::size_t j = 0; j < data.center_ids.size(); ++j) {
    const Rational value = Rational(scale) * data.units[j] - Rational(data.drops[j]);
    if (!is_integer(value)) throw Error("scale insufficient");
    values[data.center_ids[j]] = mp::numerator(value);
  }
  OrderFunction ord{complex, std::move(data.subdivided), std::move(values)};
  const auto report = verify_order_axioms(ord);
  if (!report.order_function() || !report.strictly_convex || !report.positive) throw Error("scale insufficient");
  return {std::move(ord), scale, std::move(data.drops)};
}

StarOrderFunction minimal_star_order_function(const Complex& complex,
                                              const std::vector<LatticeVector>& centers) {
  const auto data = prepare_star(complex, centers);
  const Integer step = unit_denominator(complex);
  Integer scale = step;
  for (;;) {
    bool positive = true;
    for (std::size_t j = 0; j < data.units.size(); ++j)
      if (Rational(scale) * data.units[j] - Rational(data.drops[j]) <= 0) positive = false;
    if (positive) break;
    scale += step;
  }
  return star_order_function(complex, centers, scale);
}

std::vector<Integer> composed_values(const OrderFunction& outer, const OrderFunction& inner,
                                     const Integer& multiplier) {
  std::vector<Integer> values;
  const Complex& sub = inner.subdivision;
  for (RayId id = 0; id < sub.ray_count(); ++id) {
    const Rational outer_value = evaluate(outer, to_rational(sub.ray(id)));
    if (!is_integer(outer_value)) throw Error("outer order function is not integral at ray " + std::to_string(id));
    values.push_back(multiplier * mp::numerator(outer_value) + inner.ray_values.at(id));
  }
  return values;
}

Composition compose_order_functions(const OrderFunction& outer, const OrderFunction& inner, const Integer& cap) {
  if (!(outer.subdivision == inner.base)) throw Error("composition: outer subdivision differs from inner base");
  for (const auto* part : {&outer, &inner}) {
    const auto r = verify_order_axioms(*part);
    if (!r.order_function() || !r.strictly_convex)
      throw Error("composition requires strictly convex order functions");
  }
  const auto outer_part = composed_values(outer, OrderFunction{inner.base, inner.subdivision,
                                                               std::vector<Integer>(inner.subdivision.ray_count(), 0)},
                                          1);
  for (Integer m = 1; m <= cap; m *= 2) {
    std::vector<Integer> values(outer_part.size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = m * outer_part[i] + inner.ray_values[i];
    OrderFunction candidate{outer.base, inner.subdivision, std::move(values)};
    const auto r = verify_order_axioms(candidate);
    if (r.order_function() && r.strictly_convex) return {std::move(candidate), m};
  }
  throw Error("composition cap exceeded");
}

}  // namespace toroidal
