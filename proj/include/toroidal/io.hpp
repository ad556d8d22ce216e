#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "toroidal/complex.hpp"
#include "toroidal/resolution.hpp"

namespace toroidal {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Line-oriented fan file:
//
//   toroidal-fan 1
//   rank 2
//   ray 1 0
//   ray 1 2
//   cone 0 1
//   generator 0 1 ; 1 0
//
// Ray order is significant; cones list ray indices (maximal cones suffice);
// each generator line is a square matrix given row by row. '#' starts a
// comment.
struct FanFile {
  Index rank = 0;
  std::vector<LatticeVector> rays;
  std::vector<Cone> cones;
  std::vector<IntMatrix> generators;

  Complex complex() const { return Complex(rank, rays, cones); }
};

FanFile parse_fan(std::istream& in);
FanFile parse_fan(const std::string& text);
FanFile read_fan_file(const std::string& path);

void write_fan(std::ostream& out, const Complex& complex, const std::vector<IntMatrix>& generators = {});
std::string fan_text(const Complex& complex, const std::vector<IntMatrix>& generators = {});

ResolutionCertificate parse_certificate(std::istream& in);
ResolutionCertificate parse_certificate(const std::string& text);
ResolutionCertificate read_certificate_file(const std::string& path);

void write_certificate(std::ostream& out, const ResolutionCertificate& certificate);
std::string certificate_text(const ResolutionCertificate& certificate);

}  // namespace toroidal
