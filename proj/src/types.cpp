#include "toroidal/types.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace toroidal {

IntMatrix columns(const std::vector<LatticeVector>& vectors, Index rows) {
  IntMatrix m(rows, static_cast<Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != rows) throw Error("vector length does not match ambient rank");
    m.col(static_cast<Index>(j)) = vectors[j];
  }
  return m;
}

std::vector<Integer> to_std(const LatticeVector& v) { return {v.begin(), v.end()}; }

LatticeVector from_std(const std::vector<Integer>& v) {
  LatticeVector out(static_cast<Index>(v.size()));
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

bool lex_less(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool equal(const LatticeVector& a, const LatticeVector& b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  for (Index i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].str();
  return os.str();
}

std::string to_string(const RationalVector& v) {
  std::ostringstream os;
  for (Index i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].str();
  return os.str();
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

Integer floor(const Rational& q) {
  Integer n = mp::numerator(q);
  Integer d = mp::denominator(q);
  Integer f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

bool is_integer(const Rational& q) { return mp::denominator(q) == 1; }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return mp::abs(a / mp::gcd(a, b) * b);
}

}  // namespace toroidal
