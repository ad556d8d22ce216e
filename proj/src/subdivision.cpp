#include "toroidal/subdivision.hpp"

#include <algorithm>
#include <functional>

#include "toroidal/lattice.hpp"
#include "toroidal/linalg.hpp"

namespace toroidal {

Complex star_subdivide(const Complex& complex, const LatticeVector& center) {
  if (center.size() != complex.ambient_rank()) throw Error("center has wrong length");
  const LatticeVector tau = primitive<Integer>(center);
  if (complex.find_ray(tau)) return complex;

  const RationalVector x = to_rational(tau);
  const RayId fresh = complex.ray_count();
  std::vector<Cone> cones;
  bool touched = false;
  for (const auto& cone : complex.cones()) {
    if (!complex.cone_contains(cone, x)) {
      cones.push_back(cone);
      continue;
    }
    touched = true;
    for (const auto& face : faces(complex, cone)) {
      if (!complex.cone_contains(face, x)) cones.push_back(join(face, fresh));
    }
  }
  if (!touched) throw Error("center not in support");

  auto rays = complex.rays();
  rays.push_back(tau);
  return Complex(complex.ambient_rank(), std::move(rays), cones);
}

Complex star_subdivide(const Complex& complex, const std::vector<LatticeVector>& centers) {
  Complex out = complex;
  for (const auto& c : centers) out = star_subdivide(out, c);
  return out;
}

LatticeVector barycenter(const Complex& complex, const Cone& cone) {
  if (cone.rays.empty()) throw Error("barycenter of the zero cone");
  LatticeVector sum = LatticeVector::Zero(complex.ambient_rank());
  for (RayId id : cone.rays) sum += primitive<Integer>(complex.ray(id));
  return primitive<Integer>(sum);
}

std::vector<std::vector<Center>> barycentric_passes(const Complex& complex) {
  std::vector<std::vector<Center>> passes;
  for (Index d = complex.dimension(); d >= 2; --d) {
    std::vector<Center> pass;
    for (const auto& cone : complex.cones())
      if (complex.dimension(cone) == d) pass.push_back({barycenter(complex, cone), cone});
    if (!pass.empty()) passes.push_back(std::move(pass));
  }
  return passes;
}

Complex barycentric_subdivision(const Complex& complex) {
  Complex out = complex;
  for (const auto& pass : barycentric_passes(complex))
    for (const auto& c : pass) out = star_subdivide(out, c.generator);
  return out;
}

Complex barycentric_subdivision_inductive(const Complex& complex) {
  // Cones of the subdivision are sets of original cones, one per barycenter.
  using Chain = std::vector<Cone>;
  std::map<Cone, std::set<Chain>> memo;

  std::function<const std::set<Chain>&(const Cone&)> subdivide = [&](const Cone& cone) -> const std::set<Chain>& {
    if (auto it = memo.find(cone); it != memo.end()) return it->second;
    std::set<Chain> result;
    if (cone.size() == 1) {
      result.insert(Chain{cone});
    } else {
      std::set<Chain> boundary;
      for (const auto& face : complex.cones())
        if (face != cone && face.is_face_of(cone)) {
          const auto& sub = subdivide(face);
          boundary.insert(sub.begin(), sub.end());
        }
      result = boundary;
      for (auto chain : boundary) {
        chain.push_back(cone);
        std::sort(chain.begin(), chain.end());
        result.insert(std::move(chain));
      }
      result.insert(Chain{cone});
    }
    return memo.emplace(cone, std::move(result)).first->second;
  };

  // Same id convention as the star construction: original rays keep their
  // ids, new barycenters follow by decreasing dimension then cone order.
  std::map<Cone, RayId> ids;
  auto rays = complex.rays();
  for (const auto& cone : complex.cones())
    if (cone.size() == 1) ids[cone] = cone.rays.front();
  for (Index d = complex.dimension(); d >= 2; --d)
    for (const auto& cone : complex.cones())
      if (complex.dimension(cone) == d) {
        ids[cone] = rays.size();
        rays.push_back(barycenter(complex, cone));
      }

  std::vector<Cone> cones;
  for (const auto& cone : complex.maximal_cones())
    for (const auto& chain : subdivide(cone)) {
      std::vector<RayId> members;
      for (const auto& c : chain) members.push_back(ids.at(c));
      cones.emplace_back(std::move(members));
    }
  return Complex(complex.ambient_rank(), std::move(rays), cones);
}

std::map<RayId, Cone> barycentric_edge_bijection(const Complex& base, const Complex& subdivided) {
  std::map<Cone, DualDescription> duals;
  for (const auto& cone : base.cones()) duals.emplace(cone, base.dual(cone));

  std::map<RayId, Cone> map;
  std::set<Cone> hit;
  for (RayId id = 0; id < subdivided.ray_count(); ++id) {
    const RationalVector x = to_rational(subdivided.ray(id));
    const Cone* owner = nullptr;
    for (const auto& [cone, dual] : duals)
      if (relative_interior_contains(dual, x)) {
        owner = &cone;
        break;
      }
    if (!owner) throw Error("not the barycentric subdivision: ray " + std::to_string(id) + " lies in no cone");
    if (!equal(barycenter(base, *owner), subdivided.ray(id)))
      throw Error("not the barycentric subdivision: ray " + std::to_string(id) + " is not a barycenter");
    if (!hit.insert(*owner).second)
      throw Error("not the barycentric subdivision: two rays in cone " + to_string(*owner));
    map.emplace(id, *owner);
  }
  if (hit.size() != base.cones().size())
    throw Error("not the barycentric subdivision: some cone has no barycenter ray");
  return map;
}

}  // namespace toroidal
