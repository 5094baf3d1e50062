#pragma once

#include <vector>

#include "bcinterp/laurent.hpp"
#include "bcinterp/linalg.hpp"
#include "bcinterp/points.hpp"

// Data-parallel inner loops, each with a serial reference implementation.
// Arithmetic is exact, so the parallel variants must produce results
// identical to the serial ones; tests enforce that and bench_kernels
// compares wall time.
namespace bcinterp::kernels {

// Worker cap: BCINTERP_THREADS (>= 1) if set, otherwise the OpenMP default;
// 1 when built without OpenMP.
int thread_limit();
bool parallel_enabled();  // thread_limit() > 1

// Evaluation matrix: entry (i,j) = basis[j] evaluated at nodes[i].
Matrix assemble_matrix_serial(const std::vector<LaurentPoly>& basis,
                              const std::vector<Node>& nodes);
Matrix assemble_matrix_parallel(const std::vector<LaurentPoly>& basis,
                                const std::vector<Node>& nodes);
Matrix assemble_matrix(const std::vector<LaurentPoly>& basis, const std::vector<Node>& nodes);

// One polynomial evaluated at many points.
std::vector<Rational> eval_at_nodes_serial(const LaurentPoly& f, const std::vector<Node>& pts);
std::vector<Rational> eval_at_nodes_parallel(const LaurentPoly& f, const std::vector<Node>& pts);
std::vector<Rational> eval_at_nodes(const LaurentPoly& f, const std::vector<Node>& pts);

// Many right-hand sides against one shared (read-only) factorization.
std::vector<std::vector<Rational>> solve_many_serial(const FactoredMatrix& f,
                                                     const std::vector<std::vector<Rational>>& rhs);
std::vector<std::vector<Rational>> solve_many_parallel(
    const FactoredMatrix& f, const std::vector<std::vector<Rational>>& rhs);
std::vector<std::vector<Rational>> solve_many(const FactoredMatrix& f,
                                              const std::vector<std::vector<Rational>>& rhs);

}  // namespace bcinterp::kernels
