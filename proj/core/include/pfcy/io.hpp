#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pfcy/groebner.hpp"
#include "pfcy/pfaffian.hpp"

namespace pfcy {

// Ideal file:
//   ring x0,x1,x2,x3,x4,x5,x6 over GF(32003) order degrevlex
//   # comment
//   <polynomial>
//   ...
// One generator per line; blank lines and lines starting with '#' are skipped.
struct IdealFile {
  PrimeField field;
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::degrevlex();
  std::vector<Polynomial> generators;
  std::vector<std::string> comments;

  GradedIdeal ideal() const;
};

IdealFile parse_ideal(std::istream& in);
IdealFile read_ideal_file(const std::string& path);
void write_ideal(std::ostream& out, const IdealFile& f);
IdealFile ideal_file_of(const GradedIdeal& I, std::vector<std::string> comments = {});

// Matrix file: the ring header, then "size N", then "i j <polynomial>" for the
// nonzero entries above the diagonal.
struct MatrixFile {
  PrimeField field;
  std::vector<std::string> variables;
  SkewPolyMatrix matrix;
};

MatrixFile parse_matrix(std::istream& in);
MatrixFile read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const SkewPolyMatrix& M);

}  // namespace pfcy
