#pragma once

#include <string>
#include <vector>

#include "bcinterp/interp.hpp"
#include "bcinterp/points.hpp"

namespace bcinterp {

enum class CellClass { alpha_point, origin, node_zero, extra_zero, nonzero };
const char* cell_class_name(CellClass c);

struct GridCell {
  ExponentVector beta;
  CellClass cls = CellClass::nonzero;
  std::vector<Rational> values;  // exact value of G_α at the node of β, one per draw
  bool zero_all_draws = false;
  bool disagreement = false;  // zero under some draws but not all
};

// Exact evaluation grid of one G_α over the box {-radius..radius}^n, for a
// set of seeded principal-parameter draws.  Cells in lexicographic order.
struct VanishGrid {
  ExponentVector alpha;
  int radius = 0;
  std::vector<unsigned> seeds;
  std::vector<InterpParams> draws;
  std::vector<GridCell> cells;

  const GridCell& cell(const ExponentVector& beta) const;
  std::vector<ExponentVector> extra_zeros() const;
  std::vector<ExponentVector> zero_cells() const;  // zero under every draw
  bool any_disagreement() const;
};

// Deterministic principal draw: q, s, t from {1/100,...,99/100}, redrawn until
// the genericity certificate clears the window.
InterpParams pseudo_random_draw(int n, unsigned seed, int window = kDefaultGenericityWindow);

VanishGrid scan(const ExponentVector& alpha, int radius, const std::vector<unsigned>& seeds);

// Closed/strict sign-constraint regions attached to an index vector β:
// closed: μ_i ≥ β_i where β_i > 0, μ_i ≤ β_i where β_i < 0, free where β_i = 0;
// strict: >, < and μ_i ≠ 0 respectively.
bool in_closed_region(const ExponentVector& beta, const ExponentVector& mu);
bool in_strict_region(const ExponentVector& beta, const ExponentVector& mu);

// Sandwich test of the observed zero set against the regions of the orbit
// of α: (i) no zero cell may meet a strict region, (ii) every cell outside
// all closed regions must be zero, (iii) no zero cell may meet the closed
// region of α itself.  Also reports, per orbit member, the induced candidate
// region (closed region minus zero set) without asserting it is unique.
struct ConjectureVerdict {
  bool pass = false;
  std::vector<ExponentVector> zero_inside_strict;
  std::vector<ExponentVector> nonzero_outside_closed;
  std::vector<ExponentVector> zero_in_closed_alpha;
  struct Candidate {
    ExponentVector beta;
    int forced = 0;    // cells covered by no other orbit member's closed region
    int optional = 0;  // cells shared with other closed regions
    std::vector<ExponentVector> cells;
  };
  std::vector<Candidate> candidates;
};
ConjectureVerdict check_conjecture(const VanishGrid& grid);

// Mirror symmetry of zero sets for n = 2: flipping the sign of α_2 flips the
// sign of β_2 in the zero set, draw by draw.
struct SymmetryVerdict {
  bool pass = false;
  std::vector<ExponentVector> mismatched;
};
SymmetryVerdict check_zero_symmetry(const ExponentVector& alpha, int radius,
                                    const std::vector<unsigned>& seeds);

// Same comparison on grids the caller already holds; `mirrored.alpha` must be
// `plain.alpha` with the sign of the second entry flipped, over the same
// radius and seeds.  Mismatched cells are reported in mirrored coordinates.
SymmetryVerdict compare_zero_mirror(const VanishGrid& plain, const VanishGrid& mirrored);

std::string render_text(const VanishGrid& grid);  // n = 2
std::string render_csv(const VanishGrid& grid);
std::string render_svg(const VanishGrid& grid);   // n = 2

}  // namespace bcinterp
