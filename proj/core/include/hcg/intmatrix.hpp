// Dense integer matrices over arbitrary-precision integers, with the two
// canonical forms the library leans on: Smith normal form (diagonalisation
// by unimodular row/column operations) and row-style Hermite normal form
// (canonical basis of the row lattice).
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hcg/numeric.hpp"

namespace hcg {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(size_t n);
  // Builds a matrix from explicit rows; all rows must share one length.
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Int> row(size_t i) const;
  void append_row(const std::vector<Int>& r);

  IntMatrix transpose() const;
  bool operator==(const IntMatrix& o) const = default;
  std::string to_string() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Exact determinant of a square matrix (fraction-free via rational elimination).
Int det(const IntMatrix& m);

// U * M * V = D with U, V unimodular and D diagonal, d_i >= 0,
// d_i | d_{i+1}.  Pivoting picks the nonzero entry of smallest absolute
// value in the working submatrix, ties broken in row-major order.
struct SmithForm {
  IntMatrix u, d, v;
  // Diagonal of d padded with zeros to `n` entries.
  std::vector<Int> diagonal(size_t n) const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Canonical row-style Hermite normal form of the row lattice: pivots
// positive, entries above each pivot reduced into [0, pivot), zero rows
// dropped.  Two matrices span the same row lattice iff their forms agree.
IntMatrix hermite_normal_form(const IntMatrix& m);

}  // namespace hcg
