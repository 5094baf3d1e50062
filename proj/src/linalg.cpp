#include "bcinterp/linalg.hpp"

namespace bcinterp {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("Matrix: bad dimensions");
  data_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

FactoredMatrix FactoredMatrix::factor(Matrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("FactoredMatrix: matrix not square");
  const int n = a.rows();
  FactoredMatrix f;
  f.n_ = n;
  f.swap_with_.assign(n, 0);
  f.mult_.assign(n, {});
  f.pivot_.assign(n, Rational(0));
  f.divisor_.assign(n, Rational(1));

  Rational prev(1);
  for (int k = 0; k < n; ++k) {
    int best = k;
    Rational best_abs = rat_abs(a.at(k, k));
    for (int r = k + 1; r < n; ++r) {
      Rational cand = rat_abs(a.at(r, k));
      if (cand > best_abs) {
        best = r;
        best_abs = cand;
      }
    }
    if (best_abs == 0)
      throw degeneracy_error("singular system: pivot column " + std::to_string(k) +
                                 " vanished during elimination",
                             k);
    f.swap_with_[k] = best;
    if (best != k)
      for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(best, j));

    const Rational pivot = a.at(k, k);
    f.pivot_[k] = pivot;
    f.divisor_[k] = prev;
    f.mult_[k].reserve(n - k - 1);
    for (int i = k + 1; i < n; ++i) {
      f.mult_[k].push_back(a.at(i, k));
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = Rational((a.at(i, j) * pivot - a.at(i, k) * a.at(k, j)) / prev);
      a.at(i, k) = 0;
    }
    prev = pivot;
  }
  f.u_ = std::move(a);
  return f;
}

std::vector<Rational> FactoredMatrix::solve(std::vector<Rational> rhs) const {
  if (static_cast<int>(rhs.size()) != n_)
    throw std::invalid_argument("FactoredMatrix::solve: size mismatch");
  for (int k = 0; k < n_; ++k) {
    if (swap_with_[k] != k) std::swap(rhs[k], rhs[swap_with_[k]]);
    for (int i = k + 1; i < n_; ++i)
      rhs[i] = Rational((rhs[i] * pivot_[k] - mult_[k][i - k - 1] * rhs[k]) / divisor_[k]);
  }
  std::vector<Rational> x(n_);
  for (int i = n_ - 1; i >= 0; --i) {
    Rational acc = rhs[i];
    for (int j = i + 1; j < n_; ++j) acc -= u_.at(i, j) * x[j];
    x[i] = Rational(acc / u_.at(i, i));
  }
  return x;
}

std::vector<Rational> solve_square(const Matrix& a, const std::vector<Rational>& b) {
  const auto x = FactoredMatrix::factor(a).solve(b);
  for (int i = 0; i < a.rows(); ++i) {
    Rational acc(0);
    for (int j = 0; j < a.cols(); ++j) acc += a.at(i, j) * x[j];
    if (acc != b[i]) throw std::logic_error("solve_square: nonzero residual");
  }
  return x;
}

}  // namespace bcinterp
