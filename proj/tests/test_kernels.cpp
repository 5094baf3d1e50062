#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "bcinterp/hecke.hpp"
#include "bcinterp/kernels.hpp"
#include "bcinterp/points.hpp"
#include "bcinterp/vanish.hpp"

using namespace bcinterp;

namespace {

struct Workload {
  std::vector<LaurentPoly> basis;
  std::vector<Node> nodes;
  LaurentPoly dense;

  Workload(int n, int d, const InterpParams& p) : dense(n) {
    int k = 0;
    for (const ExponentVector& a : enumerate_ball(n, d)) {
      basis.push_back(LaurentPoly::monomial(n, a, Rational(1)));
      nodes.push_back(node_general(a, p));
      dense.add_term(a, Rational(++k, 3));
    }
  }
};

}  // namespace

TEST_CASE("thread limit is sane") {
  CHECK(kernels::thread_limit() >= 1);
  CHECK(kernels::parallel_enabled() == (kernels::thread_limit() > 1));
}

TEST_CASE("serial and parallel kernels agree exactly") {
  const InterpParams p = pseudo_random_draw(2, 6);
  const Workload w(2, 4, p);

  const Matrix a_s = kernels::assemble_matrix_serial(w.basis, w.nodes);
  const Matrix a_p = kernels::assemble_matrix_parallel(w.basis, w.nodes);
  const Matrix a_d = kernels::assemble_matrix(w.basis, w.nodes);
  REQUIRE(a_s.rows() == a_p.rows());
  REQUIRE(a_s.cols() == a_p.cols());
  for (int i = 0; i < a_s.rows(); ++i)
    for (int j = 0; j < a_s.cols(); ++j) {
      CHECK(a_s.at(i, j) == a_p.at(i, j));
      CHECK(a_s.at(i, j) == a_d.at(i, j));
    }

  CHECK(kernels::eval_at_nodes_serial(w.dense, w.nodes) ==
        kernels::eval_at_nodes_parallel(w.dense, w.nodes));
  CHECK(kernels::eval_at_nodes_serial(w.dense, w.nodes) ==
        kernels::eval_at_nodes(w.dense, w.nodes));

  const FactoredMatrix fac = FactoredMatrix::factor(a_s);
  std::vector<std::vector<Rational>> rhs;
  for (size_t i = 0; i < w.basis.size(); i += 7) {
    std::vector<Rational> col(w.basis.size(), Rational(0));
    col[i] = 1;
    rhs.push_back(col);
  }
  const auto x_s = kernels::solve_many_serial(fac, rhs);
  const auto x_p = kernels::solve_many_parallel(fac, rhs);
  const auto x_d = kernels::solve_many(fac, rhs);
  CHECK(x_s == x_p);
  CHECK(x_s == x_d);
  for (size_t r = 0; r < rhs.size(); ++r) CHECK(fac.solve(rhs[r]) == x_s[r]);
}

TEST_CASE("assembled matrix holds basis evaluations") {
  const InterpParams p = pseudo_random_draw(2, 2);
  const Workload w(2, 3, p);
  const Matrix a = kernels::assemble_matrix(w.basis, w.nodes);
  REQUIRE(a.rows() == static_cast<int>(w.nodes.size()));
  REQUIRE(a.cols() == static_cast<int>(w.basis.size()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      CHECK(a.at(i, j) == w.basis[j].eval(w.nodes[i]));
}

TEST_CASE("symmetrizer variants agree") {
  const InterpParams p = pseudo_random_draw(2, 8);
  const HeckeParams hp{p.t(), p.s()};
  const Workload w(2, 3, p);
  CHECK(symmetrize_serial(w.dense, hp) == symmetrize_parallel(w.dense, hp));
  CHECK(symmetrize_serial(w.dense, hp) == symmetrize(w.dense, hp));

  const InterpParams p3 = pseudo_random_draw(3, 8);
  const HeckeParams hp3{p3.t(), p3.s()};
  const Workload w3(3, 2, p3);
  CHECK(symmetrize_serial(w3.dense, hp3) == symmetrize_parallel(w3.dense, hp3));
}
