// Wall-time comparison of the serial reference kernels against the
// OpenMP-parallel ones, on an interpolation-sized workload.  Exact arithmetic
// means both variants must agree bit for bit; any mismatch is a hard error.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcinterp/hecke.hpp"
#include "bcinterp/kernels.hpp"
#include "bcinterp/laurent.hpp"
#include "bcinterp/linalg.hpp"
#include "bcinterp/points.hpp"
#include "bcinterp/vanish.hpp"

namespace {

using namespace bcinterp;

double best_ms(int repeat, const std::function<void()>& fn) {
  double best = 0.0;
  for (int r = 0; r < repeat; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const std::chrono::duration<double, std::milli> took =
        std::chrono::steady_clock::now() - start;
    if (r == 0 || took.count() < best) best = took.count();
  }
  return best;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-16s %10.2f ms %10.2f ms   x%.2f   %s\n", name.c_str(), serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              identical ? "identical" : "MISMATCH");
}

bool same_matrix(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int n = 2;
  int d = 5;
  int repeat = 3;
  unsigned seed = 1;

  CLI::App app{"Serial vs parallel kernel timings"};
  app.add_option("--n", n, "number of variables")->capture_default_str();
  app.add_option("--d", d, "degree of the index ball")->capture_default_str();
  app.add_option("--repeat", repeat, "repetitions, best time kept")->capture_default_str();
  app.add_option("--seed", seed, "parameter draw seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  const InterpParams p =
      pseudo_random_draw(n, seed, std::max(kDefaultGenericityWindow, 2 * d + 4));
  const std::vector<ExponentVector> ball = enumerate_ball(n, d);

  std::vector<LaurentPoly> basis;
  basis.reserve(ball.size());
  std::vector<Node> nodes;
  nodes.reserve(ball.size());
  LaurentPoly dense(n);
  int k = 0;
  for (const ExponentVector& a : ball) {
    basis.push_back(LaurentPoly::monomial(n, a, Rational(1)));
    nodes.push_back(node_general(a, p));
    dense.add_term(a, Rational(++k, 2));
  }

  std::printf("workload: n=%d, ball degree %d (%zu basis elements), threads=%d\n\n", n, d,
              ball.size(), kernels::thread_limit());
  std::printf("%-16s %13s %13s %6s\n", "kernel", "serial", "parallel", "");

  Matrix a_serial(1, 1), a_parallel(1, 1);
  const double t1s = best_ms(repeat, [&] { a_serial = kernels::assemble_matrix_serial(basis, nodes); });
  const double t1p =
      best_ms(repeat, [&] { a_parallel = kernels::assemble_matrix_parallel(basis, nodes); });
  report("assemble", t1s, t1p, same_matrix(a_serial, a_parallel));

  const FactoredMatrix fac = FactoredMatrix::factor(a_serial);
  std::vector<std::vector<Rational>> rhs(ball.size(),
                                         std::vector<Rational>(ball.size(), Rational(0)));
  for (size_t i = 0; i < ball.size(); ++i) rhs[i][i] = 1;
  std::vector<std::vector<Rational>> x_serial, x_parallel;
  const double t2s = best_ms(repeat, [&] { x_serial = kernels::solve_many_serial(fac, rhs); });
  const double t2p = best_ms(repeat, [&] { x_parallel = kernels::solve_many_parallel(fac, rhs); });
  report("solve-many", t2s, t2p, x_serial == x_parallel);

  std::vector<Rational> e_serial, e_parallel;
  const double t3s = best_ms(repeat, [&] { e_serial = kernels::eval_at_nodes_serial(dense, nodes); });
  const double t3p =
      best_ms(repeat, [&] { e_parallel = kernels::eval_at_nodes_parallel(dense, nodes); });
  report("eval-at-nodes", t3s, t3p, e_serial == e_parallel);

  const HeckeParams hp{p.t(), p.s()};
  LaurentPoly s_serial(n), s_parallel(n);
  const double t4s = best_ms(repeat, [&] { s_serial = symmetrize_serial(dense, hp); });
  const double t4p = best_ms(repeat, [&] { s_parallel = symmetrize_parallel(dense, hp); });
  report("symmetrize", t4s, t4p, s_serial == s_parallel);

  const bool ok = same_matrix(a_serial, a_parallel) && x_serial == x_parallel &&
                  e_serial == e_parallel && s_serial == s_parallel;
  return ok ? 0 : 1;
}
