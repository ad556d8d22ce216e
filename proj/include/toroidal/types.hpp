#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace toroidal {

namespace mp = boost::multiprecision;

// Expression templates are disabled so the scalars compose cleanly with
// Eigen's own expression machinery.
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using LatticeVector = Vector<Integer>;
using IntMatrix = Matrix<Integer>;
using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

using Index = Eigen::Index;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Derived>
RationalVector to_rational(const Eigen::MatrixBase<Derived>& v) {
  return v.template cast<Rational>();
}

// Columns of the result are the given vectors; all must have length `rows`.
IntMatrix columns(const std::vector<LatticeVector>& vectors, Index rows);

std::vector<Integer> to_std(const LatticeVector& v);
LatticeVector from_std(const std::vector<Integer>& v);

bool lex_less(const LatticeVector& a, const LatticeVector& b);
bool lex_less(const RationalVector& a, const RationalVector& b);
bool equal(const LatticeVector& a, const LatticeVector& b);

// Space separated decimal coordinates.
std::string to_string(const LatticeVector& v);
std::string to_string(const RationalVector& v);

// 64-bit FNV-1a; used for content hashes in certificates.
std::uint64_t fnv1a(std::string_view text);
std::string hex64(std::uint64_t value);

Integer floor(const Rational& q);
bool is_integer(const Rational& q);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace toroidal
