#pragma once

#include <numeric>
#include <type_traits>
#include <utility>
#include <vector>

#include "toroidal/types.hpp"

namespace toroidal {

namespace detail {

template <typename Scalar>
Scalar gcd_abs(const Scalar& a, const Scalar& b) {
  if constexpr (std::is_integral_v<Scalar>) {
    return std::gcd(a, b);
  } else {
    return mp::gcd(a, b);
  }
}

template <typename Scalar>
Scalar abs_of(const Scalar& a) {
  return a < 0 ? Scalar(-a) : a;
}

}  // namespace detail

// The primitive lattice point on the ray through v.
template <typename Scalar>
Vector<Scalar> primitive(const Vector<Scalar>& v) {
  Scalar g = 0;
  for (const auto& c : v) g = detail::gcd_abs(g, detail::abs_of(c));
  if (g == 0) throw Error("zero ray");
  Vector<Scalar> out = v;
  for (auto& c : out) c /= g;
  return out;
}

template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> d;  // diagonal, d_i | d_{i+1}, nonnegative
  Matrix<Scalar> u;  // unimodular, rows(m) x rows(m)
  Matrix<Scalar> v;  // unimodular, cols(m) x cols(m)
};

// Smith normal form with transforms: u * m * v == d.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& m) {
  using detail::abs_of;
  const Index rows = m.rows();
  const Index cols = m.cols();
  Matrix<Scalar> d = m;
  Matrix<Scalar> u = Matrix<Scalar>::Identity(rows, rows);
  Matrix<Scalar> v = Matrix<Scalar>::Identity(cols, cols);

  const Index steps = std::min(rows, cols);
  for (Index t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Index pr = -1, pc = -1;
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j)
          if (d(i, j) != 0 && (pr < 0 || abs_of(d(i, j)) < abs_of(d(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) {
        return {std::move(d), std::move(u), std::move(v)};
      }
      if (pr != t) {
        d.row(pr).swap(d.row(t));
        u.row(pr).swap(u.row(t));
      }
      if (pc != t) {
        d.col(pc).swap(d.col(t));
        v.col(pc).swap(v.col(t));
      }

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Scalar q = d(i, t) / d(t, t);
        d.row(i) -= q * d.row(t);
        u.row(i) -= q * u.row(t);
        if (d(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Scalar q = d(t, j) / d(t, t);
        d.col(j) -= q * d.col(t);
        v.col(j) -= q * v.col(t);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      d.row(t) += d.row(bad);
      u.row(t) += u.row(bad);
    }
    if (d(t, t) < 0) {
      d.row(t) *= Scalar(-1);
      u.row(t) *= Scalar(-1);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

// Lattice multiplicity of the simplicial cone spanned by the columns of
// `gens` inside the saturation of their span. Throws "not simplicial".
Integer cone_index(const IntMatrix& gens);

bool is_smooth_cone(const IntMatrix& gens);

struct ParallelepipedPoint {
  LatticeVector point;
  RationalVector coordinates;  // each in [0, 1)
};

// Nonzero lattice points of the half-open fundamental parallelepiped of the
// columns of `gens`, sorted lexicographically by coordinates. Enumerates the
// quotient group read off the Smith form.
std::vector<ParallelepipedPoint> parallelepiped_points(const IntMatrix& gens);

// Columns form a basis of span(gens) intersected with the ambient lattice.
IntMatrix saturation_basis(const IntMatrix& gens);

IntMatrix inverse_unimodular(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

}  // namespace toroidal
