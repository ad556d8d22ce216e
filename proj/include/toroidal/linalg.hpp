#pragma once

// Exact linear algebra over a field scalar (Rational in practice).

#include <optional>
#include <utility>
#include <vector>

#include "toroidal/types.hpp"

namespace toroidal {

template <typename Field>
struct RowEchelon {
  Matrix<Field> reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form by Gauss-Jordan elimination.
template <typename Field>
RowEchelon<Field> row_reduce(Matrix<Field> m) {
  RowEchelon<Field> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = -1;
    for (Index i = row; i < m.rows(); ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(row));
    const Field inv = Field(1) / m(row, col);
    m.row(row) *= inv;
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Field factor = m(i, col);
      m.row(i) -= factor * m.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename Field>
Index rank(const Matrix<Field>& m) {
  return static_cast<Index>(row_reduce(m).pivots.size());
}

inline Index rank(const IntMatrix& m) { return rank<Rational>(m.cast<Rational>()); }

// Columns form a basis of {x : m x = 0}.
template <typename Field>
Matrix<Field> nullspace(const Matrix<Field>& m) {
  const auto echelon = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : echelon.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free;
  for (Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);

  Matrix<Field> basis = Matrix<Field>::Zero(m.cols(), static_cast<Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Index f = free[k];
    basis(f, static_cast<Index>(k)) = Field(1);
    for (std::size_t r = 0; r < echelon.pivots.size(); ++r)
      basis(echelon.pivots[r], static_cast<Index>(k)) = -echelon.reduced(static_cast<Index>(r), f);
  }
  return basis;
}

// Some x with a x = b, or nullopt when the system is inconsistent. Free
// variables are set to zero, so the solution is unique when a has full
// column rank.
template <typename Field>
std::optional<Vector<Field>> solve(const Matrix<Field>& a, const Vector<Field>& b) {
  Matrix<Field> augmented(a.rows(), a.cols() + 1);
  augmented << a, b;
  const auto echelon = row_reduce(augmented);
  if (!echelon.pivots.empty() && echelon.pivots.back() == a.cols()) return std::nullopt;
  Vector<Field> x = Vector<Field>::Zero(a.cols());
  for (std::size_t r = 0; r < echelon.pivots.size(); ++r)
    x(echelon.pivots[r]) = echelon.reduced(static_cast<Index>(r), a.cols());
  return x;
}

// Indices of a maximal linearly independent subset of the columns, chosen
// greedily left to right.
template <typename Field>
std::vector<Index> independent_columns(const Matrix<Field>& m) {
  return row_reduce(m).pivots;
}

inline std::vector<Index> independent_columns(const IntMatrix& m) {
  return independent_columns<Rational>(m.cast<Rational>());
}

// Scales a nonzero rational vector to the primitive integer vector with the
// same direction.
LatticeVector clear_denominators(const RationalVector& v);

}  // namespace toroidal
