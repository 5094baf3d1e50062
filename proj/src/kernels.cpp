#include "bcinterp/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bcinterp::kernels {

int thread_limit() {
#ifdef _OPENMP
  static const int limit = [] {
    if (const char* env = std::getenv("BCINTERP_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return omp_get_max_threads();
  }();
  return limit;
#else
  return 1;
#endif
}

bool parallel_enabled() { return thread_limit() > 1; }

Matrix assemble_matrix_serial(const std::vector<LaurentPoly>& basis,
                              const std::vector<Node>& nodes) {
  if (basis.empty() || nodes.empty())
    throw std::invalid_argument("assemble_matrix: empty basis or node set");
  Matrix m(static_cast<int>(nodes.size()), static_cast<int>(basis.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = basis[j].eval(nodes[i]);
  return m;
}

Matrix assemble_matrix_parallel(const std::vector<LaurentPoly>& basis,
                                const std::vector<Node>& nodes) {
  if (basis.empty() || nodes.empty())
    throw std::invalid_argument("assemble_matrix: empty basis or node set");
  Matrix m(static_cast<int>(nodes.size()), static_cast<int>(basis.size()));
  const int rows = m.rows(), cols = m.cols();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
#endif
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = basis[j].eval(nodes[i]);
  return m;
}

Matrix assemble_matrix(const std::vector<LaurentPoly>& basis, const std::vector<Node>& nodes) {
  return parallel_enabled() ? assemble_matrix_parallel(basis, nodes)
                            : assemble_matrix_serial(basis, nodes);
}

std::vector<Rational> eval_at_nodes_serial(const LaurentPoly& f, const std::vector<Node>& pts) {
  std::vector<Rational> out(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) out[i] = f.eval(pts[i]);
  return out;
}

std::vector<Rational> eval_at_nodes_parallel(const LaurentPoly& f, const std::vector<Node>& pts) {
  std::vector<Rational> out(pts.size());
  const long count = static_cast<long>(pts.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
#endif
  for (long i = 0; i < count; ++i) out[i] = f.eval(pts[i]);
  return out;
}

std::vector<Rational> eval_at_nodes(const LaurentPoly& f, const std::vector<Node>& pts) {
  return parallel_enabled() ? eval_at_nodes_parallel(f, pts) : eval_at_nodes_serial(f, pts);
}

std::vector<std::vector<Rational>> solve_many_serial(
    const FactoredMatrix& f, const std::vector<std::vector<Rational>>& rhs) {
  std::vector<std::vector<Rational>> out(rhs.size());
  for (size_t i = 0; i < rhs.size(); ++i) out[i] = f.solve(rhs[i]);
  return out;
}

std::vector<std::vector<Rational>> solve_many_parallel(
    const FactoredMatrix& f, const std::vector<std::vector<Rational>>& rhs) {
  std::vector<std::vector<Rational>> out(rhs.size());
  const long count = static_cast<long>(rhs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
#endif
  for (long i = 0; i < count; ++i) out[i] = f.solve(rhs[i]);
  return out;
}

std::vector<std::vector<Rational>> solve_many(const FactoredMatrix& f,
                                              const std::vector<std::vector<Rational>>& rhs) {
  return parallel_enabled() ? solve_many_parallel(f, rhs) : solve_many_serial(f, rhs);
}

}  // namespace bcinterp::kernels
