#include "toroidal/lattice.hpp"

#include <algorithm>

#include "toroidal/linalg.hpp"

namespace toroidal {

LatticeVector clear_denominators(const RationalVector& v) {
  Integer common = 1;
  for (const auto& c : v) common = lcm(common, mp::denominator(c));
  LatticeVector scaled(v.size());
  for (Index i = 0; i < v.size(); ++i) scaled[i] = mp::numerator(v[i] * common);
  return primitive(scaled);
}

namespace {

struct Diagonal {
  std::vector<Integer> divisors;  // nonzero elementary divisors
  SmithForm<Integer> form;
};

Diagonal simplicial_diagonal(const IntMatrix& gens) {
  Diagonal out{{}, smith_normal_form(gens)};
  const Index steps = std::min(gens.rows(), gens.cols());
  for (Index i = 0; i < steps; ++i)
    if (out.form.d(i, i) != 0) out.divisors.push_back(out.form.d(i, i));
  if (static_cast<Index>(out.divisors.size()) != gens.cols()) throw Error("not simplicial");
  return out;
}

}  // namespace

Integer cone_index(const IntMatrix& gens) {
  Integer index = 1;
  for (const auto& d : simplicial_diagonal(gens).divisors) index *= d;
  return index;
}

bool is_smooth_cone(const IntMatrix& gens) { return cone_index(gens) == 1; }

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const Index n = m.rows();
  RationalMatrix augmented(n, 2 * n);
  augmented << m.cast<Rational>(), RationalMatrix::Identity(n, n);
  const auto echelon = row_reduce(augmented);
  if (static_cast<Index>(echelon.pivots.size()) < n || echelon.pivots[n - 1] != n - 1)
    throw Error("matrix is not invertible");
  IntMatrix inverse(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Rational& q = echelon.reduced(i, n + j);
      if (!is_integer(q)) throw Error("matrix is not unimodular");
      inverse(i, j) = mp::numerator(q);
    }
  return inverse;
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const auto form = smith_normal_form(m);
  for (Index i = 0; i < m.rows(); ++i)
    if (form.d(i, i) != 1) return false;
  return true;
}

IntMatrix saturation_basis(const IntMatrix& gens) {
  const auto form = smith_normal_form(gens);
  Index r = 0;
  while (r < std::min(gens.rows(), gens.cols()) && form.d(r, r) != 0) ++r;
  return inverse_unimodular(form.u).leftCols(r);
}

std::vector<ParallelepipedPoint> parallelepiped_points(const IntMatrix& gens) {
  const auto diag = simplicial_diagonal(gens);
  const Index k = gens.cols();
  const auto& divisors = diag.divisors;
  const RationalMatrix v = diag.form.v.cast<Rational>();

  std::vector<ParallelepipedPoint> points;
  // Mixed-radix walk over residues y_i in [0, d_i); y = 0 is skipped.
  std::vector<Integer> residue(static_cast<std::size_t>(k), Integer(0));
  for (;;) {
    Index pos = 0;
    while (pos < k) {
      auto& digit = residue[static_cast<std::size_t>(pos)];
      digit += 1;
      if (digit < divisors[static_cast<std::size_t>(pos)]) break;
      digit = 0;
      ++pos;
    }
    if (pos == k) break;

    RationalVector z(k);
    for (Index i = 0; i < k; ++i)
      z[i] = Rational(residue[static_cast<std::size_t>(i)]) / divisors[static_cast<std::size_t>(i)];
    RationalVector a = v * z;
    for (auto& c : a) c -= Rational(toroidal::floor(c));

    const RationalVector w = gens.cast<Rational>() * a;
    LatticeVector point(w.size());
    for (Index i = 0; i < w.size(); ++i) point[i] = mp::numerator(w[i]);
    points.push_back({std::move(point), std::move(a)});
  }
  std::sort(points.begin(), points.end(), [](const auto& x, const auto& y) {
    return lex_less(x.coordinates, y.coordinates);
  });
  return points;
}

}  // namespace toroidal
