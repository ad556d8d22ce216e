#include "toroidal/complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "toroidal/lattice.hpp"
#include "toroidal/linalg.hpp"

namespace toroidal {

Cone::Cone(std::vector<RayId> ids) : rays(std::move(ids)) {
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

bool Cone::has(RayId id) const { return std::binary_search(rays.begin(), rays.end(), id); }

bool Cone::is_face_of(const Cone& other) const {
  return std::includes(other.rays.begin(), other.rays.end(), rays.begin(), rays.end());
}

Cone join(const Cone& cone, RayId extra) {
  auto ids = cone.rays;
  ids.push_back(extra);
  return Cone(std::move(ids));
}

Cone meet(const Cone& a, const Cone& b) {
  std::vector<RayId> common;
  std::set_intersection(a.rays.begin(), a.rays.end(), b.rays.begin(), b.rays.end(),
                        std::back_inserter(common));
  return Cone(std::move(common));
}

std::string to_string(const Cone& cone) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < cone.rays.size(); ++i) os << (i ? " " : "") << cone.rays[i];
  os << '}';
  return os.str();
}

namespace {

bool well_formed(const Cone& cone, const std::vector<LatticeVector>& rays, Index rank) {
  for (RayId id : cone.rays)
    if (id >= rays.size() || rays[id].size() != rank) return false;
  return true;
}

std::vector<Cone> compute_maximal(const std::set<Cone>& cones) {
  std::vector<Cone> maximal;
  for (const auto& c : cones) {
    bool covered = false;
    for (const auto& other : cones) {
      if (other.size() > c.size() && c.is_face_of(other)) {
        covered = true;
        break;
      }
    }
    if (!covered) maximal.push_back(c);
  }
  return maximal;
}

}  // namespace

Complex::Complex(Index ambient_rank, std::vector<LatticeVector> rays, const std::vector<Cone>& cones)
    : rank_(ambient_rank), rays_(std::move(rays)) {
  for (const auto& cone : cones) {
    if (cone.rays.empty()) continue;
    cones_.insert(cone);
    if (!well_formed(cone, rays_, rank_)) continue;
    try {
      const auto local = cone_faces(generators(cone));
      for (const auto& face : local) {
        if (face.empty()) continue;
        std::vector<RayId> ids;
        for (Index i : face) ids.push_back(cone.rays[static_cast<std::size_t>(i)]);
        cones_.insert(Cone(std::move(ids)));
      }
    } catch (const Error&) {
      // Not a pointed cone; validate_complex reports it.
    }
  }
  maximal_ = compute_maximal(cones_);
}

bool operator==(const Complex& a, const Complex& b) {
  if (a.rank_ != b.rank_ || a.rays_.size() != b.rays_.size() || a.cones_ != b.cones_) return false;
  for (std::size_t i = 0; i < a.rays_.size(); ++i)
    if (!equal(a.rays_[i], b.rays_[i])) return false;
  return true;
}

std::optional<RayId> Complex::find_ray(const LatticeVector& generator) const {
  for (RayId i = 0; i < rays_.size(); ++i)
    if (equal(rays_[i], generator)) return i;
  return std::nullopt;
}

IntMatrix Complex::generators(const Cone& cone) const {
  IntMatrix m(rank_, static_cast<Index>(cone.size()));
  for (std::size_t j = 0; j < cone.size(); ++j) {
    const auto& r = rays_.at(cone.rays[j]);
    if (r.size() != rank_) throw Error("ray " + std::to_string(cone.rays[j]) + " has wrong length");
    m.col(static_cast<Index>(j)) = r;
  }
  return m;
}

Index Complex::dimension(const Cone& cone) const {
  if (cone.rays.empty()) return 0;
  return rank(generators(cone));
}

Index Complex::dimension() const {
  Index d = 0;
  for (const auto& c : maximal_) d = std::max(d, dimension(c));
  return d;
}

bool Complex::cone_contains(const Cone& cone, const RationalVector& x) const {
  if (cone.rays.empty()) return x.isZero();
  const IntMatrix gens = generators(cone);
  if (rank(gens) == gens.cols()) {
    const auto coeffs = coordinates_in(gens, x);
    if (!coeffs) return false;
    return std::all_of(coeffs->begin(), coeffs->end(), [](const Rational& c) { return c >= 0; });
  }
  return contains(dual_description(gens), x);
}

std::optional<Cone> Complex::maximal_cone_containing(const RationalVector& x) const {
  for (const auto& c : maximal_)
    if (cone_contains(c, x)) return c;
  return std::nullopt;
}

std::optional<Cone> Complex::carrier(const RationalVector& x) const {
  if (x.isZero()) return Cone{};
  const auto host = maximal_cone_containing(x);
  if (!host) return std::nullopt;
  const IntMatrix gens = generators(*host);
  if (rank(gens) == gens.cols()) {
    const auto coeffs = coordinates_in(gens, x);
    std::vector<RayId> support;
    for (std::size_t j = 0; j < host->size(); ++j)
      if ((*coeffs)[static_cast<Index>(j)] != 0) support.push_back(host->rays[j]);
    return Cone(std::move(support));
  }
  std::vector<Cone> candidates;
  for (const auto& c : cones_)
    if (c.is_face_of(*host)) candidates.push_back(c);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Cone& a, const Cone& b) { return a.size() < b.size(); });
  for (const auto& c : candidates)
    if (cone_contains(c, x)) return c;
  return *host;
}

std::vector<Cone> faces(const Complex& complex, const Cone& cone) {
  std::vector<Cone> out;
  for (const auto& local : cone_faces(complex.generators(cone))) {
    std::vector<RayId> ids;
    for (Index i : local) ids.push_back(cone.rays[static_cast<std::size_t>(i)]);
    out.emplace_back(std::move(ids));
  }
  return out;
}

DualDescription dual_description(const Complex& complex, const Cone& cone) {
  return complex.dual(cone);
}

namespace {

IntMatrix rows_of(const std::vector<LatticeVector>& covectors, Index ambient) {
  IntMatrix m(static_cast<Index>(covectors.size()), ambient);
  for (std::size_t i = 0; i < covectors.size(); ++i) m.row(static_cast<Index>(i)) = covectors[i].transpose();
  return m;
}

bool is_local_face(const Complex& complex, const Cone& face, const Cone& cone) {
  if (!face.is_face_of(cone)) return false;
  for (const auto& f : faces(complex, cone))
    if (f == face) return true;
  return false;
}

}  // namespace

ValidationReport validate_complex(const Complex& complex) {
  ValidationReport report;
  auto& v = report.violations;
  const Index n = complex.ambient_rank();

  std::map<std::vector<Integer>, RayId> seen;
  for (RayId id = 0; id < complex.ray_count(); ++id) {
    const auto& r = complex.ray(id);
    const std::string tag = "ray " + std::to_string(id);
    if (r.size() != n) {
      v.push_back(tag + ": length " + std::to_string(r.size()) + " differs from rank " + std::to_string(n));
      continue;
    }
    if (r.isZero()) {
      v.push_back(tag + ": zero ray");
      continue;
    }
    if (!equal(primitive<Integer>(r), r)) v.push_back(tag + ": not primitive");
    auto [it, fresh] = seen.emplace(to_std(r), id);
    if (!fresh) v.push_back(tag + ": duplicates ray " + std::to_string(it->second));
  }
  if (!v.empty()) return report;

  std::vector<const Cone*> good;
  std::map<Cone, DualDescription> duals;
  for (const auto& cone : complex.maximal_cones()) {
    bool ids_ok = true;
    for (RayId id : cone.rays)
      if (id >= complex.ray_count()) {
        v.push_back("cone " + to_string(cone) + ": unknown ray id " + std::to_string(id));
        ids_ok = false;
      }
    if (!ids_ok) continue;
    const IntMatrix gens = complex.generators(cone);
    try {
      duals.emplace(cone, dual_description(gens));
    } catch (const Error&) {
      v.push_back("cone " + to_string(cone) + ": not pointed");
      continue;
    }
    bool extreme = true;
    for (Index i : redundant_generators(gens)) {
      v.push_back("cone " + to_string(cone) + ": ray " + std::to_string(cone.rays[static_cast<std::size_t>(i)]) +
                  " is not an extreme ray");
      extreme = false;
    }
    if (!extreme) continue;
    for (const auto& f : faces(complex, cone))
      if (!f.rays.empty() && !complex.has_cone(f))
        v.push_back("cone " + to_string(cone) + ": face " + to_string(f) + " missing");
    good.push_back(&cone);
  }

  for (std::size_t a = 0; a < good.size(); ++a) {
    for (std::size_t b = a + 1; b < good.size(); ++b) {
      const Cone& s = *good[a];
      const Cone& t = *good[b];
      const auto& ds = duals.at(s);
      const auto& dt = duals.at(t);
      std::vector<LatticeVector> ineq = ds.facet_normals;
      ineq.insert(ineq.end(), dt.facet_normals.begin(), dt.facet_normals.end());
      std::vector<LatticeVector> eq = ds.span_equations;
      eq.insert(eq.end(), dt.span_equations.begin(), dt.span_equations.end());
      const auto rays = extreme_rays(rows_of(ineq, n), rows_of(eq, n), n);

      const Cone common = meet(s, t);
      bool ok = rays.size() == common.size();
      if (ok) {
        for (RayId id : common.rays)
          if (std::none_of(rays.begin(), rays.end(), [&](const auto& r) { return equal(r, complex.ray(id)); }))
            ok = false;
      }
      if (ok && !common.rays.empty())
        ok = is_local_face(complex, common, s) && is_local_face(complex, common, t);
      if (!ok)
        v.push_back("cones " + to_string(s) + " and " + to_string(t) +
                    ": intersection is not a common face");
    }
  }
  return report;
}

bool tiles(const Complex& complex, const std::vector<Cone>& pieces, const IntMatrix& target,
           std::vector<std::string>* witnesses) {
  auto witness = [&](std::string text) {
    if (witnesses) witnesses->push_back(std::move(text));
  };
  if (pieces.empty()) {
    witness("no pieces cover the cone");
    return false;
  }
  const auto dual = dual_description(target);
  const Index d = dual.dimension;

  std::map<Cone, std::vector<Cone>> facet_owners;
  bool ok = true;
  for (const auto& piece : pieces) {
    if (complex.dimension(piece) != d) {
      witness("piece " + to_string(piece) + " has the wrong dimension");
      ok = false;
      continue;
    }
    for (const auto& f : faces(complex, piece))
      if (complex.dimension(f) == d - 1) facet_owners[f].push_back(piece);
  }

  for (const auto& [facet, owners] : facet_owners) {
    bool boundary = facet.rays.empty();
    if (!boundary) {
      const IntMatrix gens = complex.generators(facet);
      for (const auto& normal : dual.facet_normals) {
        if ((normal.transpose() * gens).isZero()) {
          boundary = true;
          break;
        }
      }
    }
    const std::size_t expected = boundary ? 1 : 2;
    if (owners.size() < expected) {
      witness("facet " + to_string(facet) + " of piece " + to_string(owners.front()) + " is uncovered");
      ok = false;
    } else if (owners.size() > expected) {
      witness("facet " + to_string(facet) + " is shared by " + std::to_string(owners.size()) + " pieces");
      ok = false;
    }
  }
  return ok;
}

SubdivisionReport is_subdivision(const Complex& fine, const Complex& coarse) {
  if (fine.ambient_rank() != coarse.ambient_rank()) throw Error("rank mismatch");
  SubdivisionReport report;
  report.holds = true;

  std::vector<std::pair<Cone, DualDescription>> hosts;
  for (const auto& c : coarse.maximal_cones()) hosts.emplace_back(c, coarse.dual(c));

  auto inside = [&](const Cone& piece, const DualDescription& dual) {
    const IntMatrix gens = fine.generators(piece);
    for (Index j = 0; j < gens.cols(); ++j)
      if (!contains(dual, to_rational(gens.col(j)))) return false;
    return true;
  };

  for (const auto& piece : fine.maximal_cones()) {
    const bool placed = std::any_of(hosts.begin(), hosts.end(),
                                    [&](const auto& h) { return inside(piece, h.second); });
    if (!placed) {
      report.holds = false;
      report.witnesses.push_back("cone " + to_string(piece) + " is not contained in any cone");
    }
  }

  for (const auto& [host, dual] : hosts) {
    std::vector<Cone> pieces;
    for (const auto& piece : fine.maximal_cones())
      if (fine.dimension(piece) == dual.dimension && inside(piece, dual)) pieces.push_back(piece);
    std::vector<std::string> local;
    if (!tiles(fine, pieces, coarse.generators(host), &local)) {
      report.holds = false;
      for (auto& w : local) report.witnesses.push_back("in cone " + to_string(host) + ": " + w);
    }
  }
  return report;
}

bool is_simplicial(const Complex& complex) {
  return std::all_of(complex.maximal_cones().begin(), complex.maximal_cones().end(),
                     [&](const Cone& c) { return complex.is_simplicial(c); });
}

bool is_smooth(const Complex& complex) {
  if (!is_simplicial(complex)) return false;
  return std::all_of(complex.maximal_cones().begin(), complex.maximal_cones().end(),
                     [&](const Cone& c) { return cone_index(complex.generators(c)) == 1; });
}

std::string canonical_text(const Complex& complex) {
  std::ostringstream os;
  os << "rank " << complex.ambient_rank() << '\n';
  for (const auto& r : complex.rays()) os << "ray " << to_string(r) << '\n';
  for (const auto& c : complex.maximal_cones()) {
    os << "cone";
    for (RayId id : c.rays) os << ' ' << id;
    os << '\n';
  }
  return os.str();
}

std::uint64_t content_hash(const Complex& complex) { return fnv1a(canonical_text(complex)); }

}  // namespace toroidal
