#include "toroidal/equivariance.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "toroidal/lattice.hpp"
#include "toroidal/subdivision.hpp"

namespace toroidal {

namespace {

std::string matrix_text(const IntMatrix& m) {
  std::string out;
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) out += " ; ";
    out += to_string(LatticeVector(m.row(i).transpose()));
  }
  return out;
}

bool same_matrix(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

std::vector<IntMatrix> generate_group(const std::vector<IntMatrix>& generators, Index rank, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.rows() != rank || g.cols() != rank)
      throw Error("group generator is not " + std::to_string(rank) + "x" + std::to_string(rank));
    if (!is_unimodular(g)) throw Error("non-unimodular generator: " + matrix_text(g));
  }
  std::vector<IntMatrix> elements{IntMatrix::Identity(rank, rank)};
  std::deque<std::size_t> queue{0};
  auto known = [&](const IntMatrix& m) {
    return std::any_of(elements.begin(), elements.end(), [&](const IntMatrix& e) { return same_matrix(e, m); });
  };
  while (!queue.empty()) {
    const IntMatrix current = elements[queue.front()];
    queue.pop_front();
    for (const auto& g : generators) {
      IntMatrix next = g * current;
      if (known(next)) continue;
      if (elements.size() >= cap) throw Error("group order exceeds cap " + std::to_string(cap));
      elements.push_back(std::move(next));
      queue.push_back(elements.size() - 1);
    }
  }
  return elements;
}

ActionReport verify_action(const Complex& complex, const std::vector<IntMatrix>& elements) {
  ActionReport report;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const IntMatrix& g = elements[e];
    std::vector<RayId> perm(complex.ray_count(), 0);
    if (g.rows() != complex.ambient_rank() || g.cols() != complex.ambient_rank()) {
      report.violations.push_back("element " + std::to_string(e) + " has the wrong size");
      report.ray_permutations.push_back(perm);
      continue;
    }
    bool rays_ok = true;
    for (RayId id = 0; id < complex.ray_count(); ++id) {
      const LatticeVector img = g * complex.ray(id);
      const auto found = complex.find_ray(img);
      if (!found) {
        rays_ok = false;
        report.violations.push_back("element " + std::to_string(e) + " maps ray " + std::to_string(id) + " (" +
                                    to_string(complex.ray(id)) + ") to (" + to_string(img) + "), not a ray");
      } else {
        perm[id] = *found;
      }
    }
    if (rays_ok) {
      for (const auto& cone : complex.cones()) {
        std::vector<RayId> ids;
        for (RayId id : cone.rays) ids.push_back(perm[id]);
        const Cone img(std::move(ids));
        if (!complex.has_cone(img))
          report.violations.push_back("element " + std::to_string(e) + " maps cone " + to_string(cone) + " to " +
                                      to_string(img) + ", not a cone");
      }
    }
    report.ray_permutations.push_back(std::move(perm));
  }
  report.valid = report.violations.empty();
  return report;
}

Cone GroupAction::image(std::size_t element, const Cone& cone) const {
  std::vector<RayId> ids;
  for (RayId id : cone.rays) ids.push_back(ray_permutations[element][id]);
  return Cone(std::move(ids));
}

GroupAction bind_action(const Complex& complex, const std::vector<IntMatrix>& elements) {
  auto report = verify_action(complex, elements);
  if (!report.valid) throw Error("invalid action: " + report.violations.front());
  return {elements, std::move(report.ray_permutations)};
}

CheckReport check_fixed_cone_identity(const Complex& complex, const GroupAction& action) {
  CheckReport report;
  for (std::size_t e = 0; e < action.order(); ++e)
    for (const auto& cone : complex.cones()) {
      if (action.image(e, cone) != cone) continue;
      for (RayId id : cone.rays)
        if (action.ray_permutations[e][id] != id) {
          report.violations.push_back("element " + std::to_string(e) + " maps cone " + to_string(cone) +
                                      " to itself but moves ray " + std::to_string(id));
          break;
        }
    }
  report.passed = report.violations.empty();
  return report;
}

std::vector<RayId> ray_orbits(const GroupAction& action, std::size_t ray_count) {
  std::vector<RayId> label(ray_count);
  for (RayId id = 0; id < ray_count; ++id) {
    RayId least = id;
    for (const auto& perm : action.ray_permutations) least = std::min(least, perm[id]);
    label[id] = least;
  }
  return label;
}

CheckReport check_g_strict(const Complex& complex, const GroupAction& action) {
  CheckReport report;
  const auto label = ray_orbits(action, complex.ray_count());
  for (const auto& cone : complex.maximal_cones())
    for (std::size_t i = 0; i < cone.size(); ++i)
      for (std::size_t j = i + 1; j < cone.size(); ++j)
        if (label[cone.rays[i]] == label[cone.rays[j]])
          report.violations.push_back("cone " + to_string(cone) + " has rays " + std::to_string(cone.rays[i]) +
                                      " and " + std::to_string(cone.rays[j]) + " in one orbit");
  report.passed = report.violations.empty();
  return report;
}

bool is_equivariant_subdivision(const Complex& fine, const Complex& coarse, const std::vector<IntMatrix>& elements) {
  if (!verify_action(coarse, elements).valid) return false;
  return verify_action(fine, elements).valid;
}

std::vector<LatticeVector> orbit(const std::vector<IntMatrix>& elements, const LatticeVector& point) {
  std::vector<LatticeVector> points;
  const LatticeVector p = primitive<Integer>(point);
  for (const auto& g : elements) {
    LatticeVector img = g * p;
    if (std::none_of(points.begin(), points.end(), [&](const LatticeVector& q) { return equal(q, img); }))
      points.push_back(std::move(img));
  }
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  return points;
}

bool simultaneous_safe(const Complex& complex, const std::vector<LatticeVector>& points) {
  for (const auto& cone : complex.maximal_cones()) {
    const auto dual = complex.dual(cone);
    int inside = 0;
    for (const auto& p : points)
      if (contains(dual, to_rational(p))) ++inside;
    if (inside > 1) return false;
  }
  return true;
}

Complex equivariant_star_subdivide(const Complex& complex, const LatticeVector& center,
                                   const std::vector<IntMatrix>& elements) {
  const auto points = orbit(elements, center);
  if (!simultaneous_safe(complex, points)) throw Error("orbit not simultaneous-safe");
  return star_subdivide(complex, points);
}

std::size_t QuotientStructure::maximal_orbit_count() const {
  return static_cast<std::size_t>(std::count(maximal.begin(), maximal.end(), true));
}

QuotientStructure quotient_structure(const Complex& complex, const GroupAction& action) {
  const auto fixed = check_fixed_cone_identity(complex, action);
  if (!fixed.passed) throw Error("quotient needs the fixed-cone identity: " + fixed.violations.front());
  const auto strict = check_g_strict(complex, action);
  if (!strict.passed) throw Error("quotient needs G-strictness: " + strict.violations.front());

  QuotientStructure q;
  const auto label = ray_orbits(action, complex.ray_count());
  for (RayId id = 0; id < complex.ray_count(); ++id)
    if (label[id] == id) {
      q.ray_representatives.push_back(id);
      q.ray_orbit_sizes.push_back(static_cast<std::size_t>(std::count(label.begin(), label.end(), id)));
    }

  std::map<Cone, std::size_t> cone_orbit;  // cone -> index of its representative
  const auto& maximal = complex.maximal_cones();
  for (const auto& cone : complex.cones()) {
    if (cone_orbit.count(cone)) continue;
    const std::size_t index = q.cone_representatives.size();
    std::set<Cone> members;
    for (std::size_t e = 0; e < action.order(); ++e) members.insert(action.image(e, cone));
    for (const auto& m : members) cone_orbit[m] = index;
    q.cone_representatives.push_back(cone);
    q.cone_orbit_sizes.push_back(members.size());
    q.maximal.push_back(std::find(maximal.begin(), maximal.end(), cone) != maximal.end());
    q.lattice_bases.push_back(saturation_basis(complex.generators(cone)));
  }

  for (std::size_t c = 0; c < q.cone_representatives.size(); ++c) {
    const Cone& rep = q.cone_representatives[c];
    const Index dim = complex.dimension(rep);
    for (const auto& face : faces(complex, rep)) {
      if (face.rays.empty() || complex.dimension(face) != dim - 1) continue;
      const std::size_t f = cone_orbit.at(face);
      for (std::size_t e = 0; e < action.order(); ++e)
        if (action.image(e, q.cone_representatives[f]) == face) {
          q.face_links.push_back({c, f, e});
          break;
        }
    }
  }
  return q;
}

OrderFunction invariant_order_function(const Complex& base, const Complex& subdivision,
                                       const std::vector<IntMatrix>& elements,
                                       const std::map<RayId, Integer>& representative_values) {
  const auto action = bind_action(subdivision, elements);
  const auto label = ray_orbits(action, subdivision.ray_count());
  std::map<RayId, Integer> per_orbit;
  for (const auto& [id, value] : representative_values) {
    if (id >= subdivision.ray_count()) throw Error("value given for unknown ray " + std::to_string(id));
    auto [it, inserted] = per_orbit.emplace(label[id], value);
    if (!inserted && it->second != value)
      throw Error("inconsistent values on the orbit of ray " + std::to_string(label[id]));
  }
  std::vector<Integer> values;
  for (RayId id = 0; id < subdivision.ray_count(); ++id) {
    const auto it = per_orbit.find(label[id]);
    if (it == per_orbit.end()) throw Error("no value for the orbit of ray " + std::to_string(id));
    values.push_back(it->second);
  }
  OrderFunction ord{base, subdivision, std::move(values)};
  if (!is_invariant(ord, action)) throw Error("extended order function is not invariant");
  return ord;
}

bool is_invariant(const OrderFunction& ord, const GroupAction& action) {
  for (const auto& perm : action.ray_permutations)
    for (RayId id = 0; id < perm.size(); ++id)
      if (ord.ray_values.at(perm[id]) != ord.ray_values.at(id)) return false;
  return true;
}

}  // namespace toroidal
