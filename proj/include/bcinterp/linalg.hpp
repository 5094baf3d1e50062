#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bcinterp/rational.hpp"

namespace bcinterp {

// Raised when an exact elimination meets a zero pivot column, i.e. the
// interpolation data are degenerate for the given parameters.
class degeneracy_error : public std::runtime_error {
 public:
  degeneracy_error(std::string what, int pivot_col)
      : std::runtime_error(std::move(what)), pivot_col_(pivot_col) {}
  int pivot_col() const { return pivot_col_; }

 private:
  int pivot_col_;
};

class Matrix {
 public:
  Matrix(int rows, int cols);
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

// Fraction-free (Bareiss) forward elimination with partial pivoting by exact
// magnitude, recorded so that many right-hand sides can be solved against one
// factorization.  All divisions are exact; a zero pivot raises degeneracy_error
// naming the offending column.
class FactoredMatrix {
 public:
  static FactoredMatrix factor(Matrix a);
  int size() const { return n_; }
  std::vector<Rational> solve(std::vector<Rational> rhs) const;

 private:
  FactoredMatrix() = default;
  int n_ = 0;
  Matrix u_{1, 1};                            // upper-triangular result
  std::vector<int> swap_with_;                // row swapped into position k at step k
  std::vector<std::vector<Rational>> mult_;   // column entries below the pivot, per step
  std::vector<Rational> pivot_;               // pivot value used at step k
  std::vector<Rational> divisor_;             // previous pivot divided out at step k
};

// One-shot factor + solve + exact residual check (defensive; never expected to fail).
std::vector<Rational> solve_square(const Matrix& a, const std::vector<Rational>& b);

}  // namespace bcinterp
