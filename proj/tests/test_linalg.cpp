#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>
#include <vector>

#include "bcinterp/linalg.hpp"

using namespace bcinterp;

namespace {

Matrix random_matrix(int n, std::mt19937_64& eng) {
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a.at(i, j) = Rational(static_cast<long>(eng() % 19) - 9, static_cast<long>(1 + eng() % 7));
  return a;
}

std::vector<Rational> random_rhs(int n, std::mt19937_64& eng) {
  std::vector<Rational> b(n);
  for (Rational& v : b) v = Rational(static_cast<long>(eng() % 11) - 5, static_cast<long>(1 + eng() % 4));
  return b;
}

std::vector<Rational> apply(const Matrix& a, const std::vector<Rational>& x) {
  std::vector<Rational> y(a.rows(), Rational(0));
  for (int i = 0; i < a.rows(); ++i) {
    Rational acc(0);
    for (int j = 0; j < a.cols(); ++j) acc += a.at(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

}  // namespace

TEST_CASE("solve on small explicit systems") {
  Matrix id(2, 2);
  id.at(0, 0) = 1;
  id.at(1, 1) = 1;
  CHECK(solve_square(id, {Rational(3), Rational(-4)}) ==
        std::vector<Rational>{Rational(3), Rational(-4)});

  Matrix a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 5;
  // inverse is [[-5,2],[3,-1]]
  CHECK(solve_square(a, {Rational(1), Rational(0)}) ==
        std::vector<Rational>{Rational(-5), Rational(3)});
  CHECK(solve_square(a, {Rational(0), Rational(1)}) ==
        std::vector<Rational>{Rational(2), Rational(-1)});
}

TEST_CASE("degenerate systems raise with the pivot column") {
  Matrix zero(3, 3);
  CHECK_THROWS_AS(FactoredMatrix::factor(zero), degeneracy_error);

  // Second column is twice the first; elimination dies at 0-based column 1.
  Matrix dep(2, 2);
  dep.at(0, 0) = 1;
  dep.at(0, 1) = 2;
  dep.at(1, 0) = 2;
  dep.at(1, 1) = 4;
  try {
    FactoredMatrix::factor(dep);
    FAIL("expected degeneracy_error");
  } catch (const degeneracy_error& e) {
    CHECK(e.pivot_col() == 1);
    CHECK(std::string(e.what()).find("pivot") != std::string::npos);
  }
}

TEST_CASE("factorization solves exactly, including repeated use") {
  std::mt19937_64 eng(12);
  int solved = 0;
  while (solved < 8) {
    const int n = 2 + static_cast<int>(eng() % 5);
    const Matrix a = random_matrix(n, eng);
    std::optional<FactoredMatrix> fac;
    try {
      fac = FactoredMatrix::factor(a);
    } catch (const degeneracy_error&) {
      continue;  // singular draw; try another
    }
    ++solved;
    CHECK(fac->size() == n);
    for (int round = 0; round < 3; ++round) {
      const std::vector<Rational> b = random_rhs(n, eng);
      const std::vector<Rational> x = fac->solve(b);
      CHECK(apply(a, x) == b);
      CHECK(solve_square(a, b) == x);
    }
  }
}

TEST_CASE("pivoting handles a leading zero") {
  Matrix a(2, 2);
  a.at(0, 0) = 0;
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  a.at(1, 1) = 0;
  CHECK(solve_square(a, {Rational(5), Rational(7)}) ==
        std::vector<Rational>{Rational(7), Rational(5)});
}

TEST_CASE("matrix storage") {
  Matrix a(2, 3);
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 3);
  CHECK(a.at(1, 2) == Rational(0));
  a.at(1, 2) = Rational(1, 3);
  CHECK(a.at(1, 2) == Rational(1, 3));
}
