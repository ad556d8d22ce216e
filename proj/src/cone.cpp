#include "toroidal/cone.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "toroidal/lattice.hpp"
#include "toroidal/linalg.hpp"

namespace toroidal {

namespace {

// Calls visit(subset) for every k-subset of {0..n-1}, in lexicographic order.
template <typename Visit>
void for_each_subset(Index n, Index k, Visit&& visit) {
  if (k < 0 || k > n) return;
  std::vector<Index> idx(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    visit(idx);
    Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

IntMatrix select_columns(const IntMatrix& m, const std::vector<Index>& cols) {
  IntMatrix out(m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = m.col(cols[j]);
  return out;
}

IntMatrix stack_rows(const std::vector<LatticeVector>& rows, Index ambient) {
  IntMatrix out(static_cast<Index>(rows.size()), ambient);
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = rows[i].transpose();
  return out;
}

}  // namespace

std::optional<RationalVector> coordinates_in(const IntMatrix& gens, const RationalVector& x) {
  return solve<Rational>(gens.cast<Rational>(), x);
}

DualDescription dual_description(const IntMatrix& gens) {
  const Index n = gens.rows();
  const Index k = gens.cols();
  DualDescription dual;

  const RationalMatrix g = gens.cast<Rational>();
  const RationalMatrix annihilator = nullspace<Rational>(g.transpose());
  for (Index c = 0; c < annihilator.cols(); ++c)
    dual.span_equations.push_back(clear_denominators(annihilator.col(c)));

  const auto basis_cols = independent_columns<Rational>(g);
  const Index d = static_cast<Index>(basis_cols.size());
  dual.dimension = d;
  if (d == 0) return dual;

  RationalMatrix basis(n, d);
  for (Index j = 0; j < d; ++j) basis.col(j) = g.col(basis_cols[static_cast<std::size_t>(j)]);

  std::set<std::vector<Index>> seen;
  for_each_subset(k, d - 1, [&](const std::vector<Index>& subset) {
    RationalMatrix constraint(d - 1, d);
    for (Index r = 0; r < d - 1; ++r)
      constraint.row(r) = g.col(subset[static_cast<std::size_t>(r)]).transpose() * basis;
    const RationalMatrix kernel = nullspace<Rational>(constraint);
    if (kernel.cols() != 1) return;
    RationalVector normal = basis * kernel.col(0);
    const RationalVector values = g.transpose() * normal;
    bool nonneg = true, nonpos = true;
    for (const auto& val : values) {
      if (val < 0) nonneg = false;
      if (val > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) return;
    if (!nonneg) normal = -normal;
    std::vector<Index> zero;
    for (Index i = 0; i < k; ++i)
      if (values[i] == 0) zero.push_back(i);
    if (!seen.insert(zero).second) return;
    dual.facet_normals.push_back(clear_denominators(normal));
    dual.facet_generators.push_back(std::move(zero));
  });

  if (d == 1 && dual.facet_normals.empty()) throw Error("not pointed");
  if (d > 1 && rank(stack_rows(dual.facet_normals, n)) != d) throw Error("not pointed");
  return dual;
}

bool contains(const DualDescription& dual, const RationalVector& x) {
  for (const auto& eq : dual.span_equations)
    if (eq.cast<Rational>().dot(x) != 0) return false;
  for (const auto& normal : dual.facet_normals)
    if (normal.cast<Rational>().dot(x) < 0) return false;
  return true;
}

bool relative_interior_contains(const DualDescription& dual, const RationalVector& x) {
  if (dual.dimension == 0) return false;
  for (const auto& eq : dual.span_equations)
    if (eq.cast<Rational>().dot(x) != 0) return false;
  for (const auto& normal : dual.facet_normals)
    if (normal.cast<Rational>().dot(x) <= 0) return false;
  return true;
}

std::vector<std::vector<Index>> cone_faces(const IntMatrix& gens) {
  const Index k = gens.cols();
  std::set<std::vector<Index>> faces;
  if (rank(gens) == k) {
    for (Index size = 0; size <= k; ++size)
      for_each_subset(k, size, [&](const std::vector<Index>& s) { faces.insert(s); });
  } else {
    const auto dual = dual_description(gens);
    std::vector<Index> all(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i) all[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<Index>> queue{all};
    faces.insert(all);
    while (!queue.empty()) {
      const auto face = queue.back();
      queue.pop_back();
      for (const auto& facet : dual.facet_generators) {
        std::vector<Index> meet;
        std::set_intersection(face.begin(), face.end(), facet.begin(), facet.end(),
                              std::back_inserter(meet));
        if (faces.insert(meet).second) queue.push_back(std::move(meet));
      }
    }
  }
  std::vector<std::vector<Index>> out(faces.begin(), faces.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

std::vector<Index> redundant_generators(const IntMatrix& gens) {
  const auto dual = dual_description(gens);
  std::vector<Index> redundant;
  for (Index i = 0; i < gens.cols(); ++i) {
    // Extreme iff the facets through the generator cut out a 1-dimensional face.
    std::vector<Index> face;
    bool first = true;
    for (const auto& facet : dual.facet_generators) {
      if (!std::binary_search(facet.begin(), facet.end(), i)) continue;
      if (first) {
        face = facet;
        first = false;
      } else {
        std::vector<Index> meet;
        std::set_intersection(face.begin(), face.end(), facet.begin(), facet.end(),
                              std::back_inserter(meet));
        face = std::move(meet);
      }
    }
    if (first) {
      if (dual.dimension != 1) redundant.push_back(i);
      else {
        // A 1-dimensional cone has a single extreme ray; duplicates are redundant.
        for (Index j = 0; j < i; ++j)
          if (primitive<Integer>(gens.col(j)) == primitive<Integer>(gens.col(i))) {
            redundant.push_back(i);
            break;
          }
      }
      continue;
    }
    if (rank(select_columns(gens, face)) != 1) {
      redundant.push_back(i);
      continue;
    }
    for (Index j : face) {
      if (j >= i) break;
      if (primitive<Integer>(gens.col(j)) == primitive<Integer>(gens.col(i))) {
        redundant.push_back(i);
        break;
      }
    }
  }
  return redundant;
}

std::vector<LatticeVector> extreme_rays(const IntMatrix& inequalities, const IntMatrix& equalities,
                                        Index ambient) {
  const Index eq_rank = equalities.rows() ? rank(equalities) : 0;
  const Index need = ambient - 1 - eq_rank;
  std::vector<LatticeVector> rays;
  if (need < 0) return rays;

  const RationalMatrix ineq = inequalities.cast<Rational>();
  std::set<std::vector<Integer>> seen;
  for_each_subset(inequalities.rows(), need, [&](const std::vector<Index>& subset) {
    RationalMatrix system(equalities.rows() + need, ambient);
    for (Index r = 0; r < equalities.rows(); ++r) system.row(r) = equalities.row(r).cast<Rational>();
    for (Index r = 0; r < need; ++r)
      system.row(equalities.rows() + r) = ineq.row(subset[static_cast<std::size_t>(r)]);
    const RationalMatrix kernel = nullspace<Rational>(system);
    if (kernel.cols() != 1) return;
    const RationalVector values = ineq * kernel.col(0);
    bool nonneg = true, nonpos = true;
    for (const auto& v : values) {
      if (v < 0) nonneg = false;
      if (v > 0) nonpos = false;
    }
    if (nonneg && nonpos) throw Error("not pointed");
    if (!nonneg && !nonpos) return;
    RationalVector dir = kernel.col(0);
    if (!nonneg) dir = -dir;
    LatticeVector ray = clear_denominators(dir);
    if (seen.insert(to_std(ray)).second) rays.push_back(std::move(ray));
  });
  std::sort(rays.begin(), rays.end(), [](const auto& a, const auto& b) { return lex_less(a, b); });
  return rays;
}

}  // namespace toroidal
