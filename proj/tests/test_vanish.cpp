#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "bcinterp/interp.hpp"
#include "bcinterp/points.hpp"
#include "bcinterp/vanish.hpp"

using namespace bcinterp;

TEST_CASE("seeded draws are deterministic, bounded and generic") {
  const InterpParams a = pseudo_random_draw(2, 1);
  const InterpParams b = pseudo_random_draw(2, 1);
  CHECK(a == b);
  CHECK(a.is_principal());
  CHECK(a.genericity().ok);
  for (const Rational& v : {a.q(), a.s(), a.t()}) {
    CHECK(v > 0);
    CHECK(v < 1);
    CHECK(Integer(100) % denominator(v) == 0);  // drawn from {1/100, ..., 99/100}
  }
  CHECK(!(a == pseudo_random_draw(2, 2)));
}

TEST_CASE("grid classification partitions the box") {
  const ExponentVector alpha{2, 0};
  const VanishGrid grid = scan(alpha, 3, {1, 2});
  CHECK(grid.cells.size() == 49);
  CHECK(grid.draws.size() == 2);

  int alpha_cells = 0, origin_cells = 0, ball_cells = 0;
  for (const GridCell& cell : grid.cells) {
    REQUIRE(cell.values.size() == 2);
    if (cell.beta == alpha) {
      ++alpha_cells;
      CHECK(cell.cls == CellClass::alpha_point);
      for (const Rational& v : cell.values) CHECK(v == 1);
    } else if (cell.beta == ExponentVector{0, 0}) {
      ++origin_cells;
      CHECK(cell.cls == CellClass::origin);
      for (const Rational& v : cell.values) CHECK(v == 0);
    } else if (weight(cell.beta) <= 2) {
      ++ball_cells;
      CHECK(cell.cls == CellClass::node_zero);
      CHECK(cell.zero_all_draws);
      for (const Rational& v : cell.values) CHECK(v == 0);
    } else {
      CHECK((cell.cls == CellClass::extra_zero || cell.cls == CellClass::nonzero));
      CHECK(cell.zero_all_draws == (cell.cls == CellClass::extra_zero));
    }
    CHECK(!cell.disagreement);
  }
  CHECK(alpha_cells == 1);
  CHECK(origin_cells == 1);
  CHECK(ball_cells == 11);  // 13 ball points minus alpha and the origin
  CHECK(!grid.any_disagreement());

  // Direct evaluation agrees with the recorded values.
  InterpCache cache(grid.draws[0]);
  const LaurentPoly& g = cache.G(alpha);
  for (const ExponentVector& beta : {ExponentVector{3, 1}, ExponentVector{-2, 3}})
    CHECK(grid.cell(beta).values[0] == g.eval(node_general(beta, grid.draws[0])));

  CHECK_THROWS_AS(grid.cell({4, 0}), std::out_of_range);
}

TEST_CASE("zero cell listings") {
  const VanishGrid grid = scan({2, 0}, 3, {1, 2});
  const std::vector<ExponentVector> zeros = grid.zero_cells();
  const std::vector<ExponentVector> extras = grid.extra_zeros();
  CHECK(std::includes(zeros.begin(), zeros.end(), extras.begin(), extras.end()));
  for (const ExponentVector& beta : extras) {
    CHECK(weight(beta) > 2);
    CHECK(grid.cell(beta).cls == CellClass::extra_zero);
  }
  for (const ExponentVector& beta : zeros) CHECK(grid.cell(beta).zero_all_draws);
}

TEST_CASE("scan preconditions") {
  CHECK_THROWS_AS(scan({2, 0}, 3, {1}), std::invalid_argument);
  CHECK_THROWS_AS(scan({2, 0}, -1, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(scan({}, 3, {1, 2}), std::invalid_argument);
}

TEST_CASE("radius zero grids") {
  const VanishGrid self = scan({0, 0}, 0, {1, 2});
  REQUIRE(self.cells.size() == 1);
  CHECK(self.cells[0].cls == CellClass::alpha_point);

  const VanishGrid off = scan({1, 0}, 0, {1, 2});
  REQUIRE(off.cells.size() == 1);
  CHECK(off.cells[0].cls == CellClass::origin);
}

TEST_CASE("closed and strict sign regions") {
  const ExponentVector beta{4, 0};
  CHECK(in_closed_region(beta, {4, 0}));
  CHECK(in_closed_region(beta, {4, -7}));
  CHECK(in_closed_region(beta, {10, 3}));
  CHECK(!in_closed_region(beta, {3, 0}));

  CHECK(!in_strict_region(beta, {4, 1}));   // needs mu_1 > 4
  CHECK(!in_strict_region(beta, {5, 0}));   // needs mu_2 != 0
  CHECK(in_strict_region(beta, {5, -2}));

  const ExponentVector neg{-2, 1};
  CHECK(in_closed_region(neg, {-2, 1}));
  CHECK(in_closed_region(neg, {-5, 9}));
  CHECK(!in_closed_region(neg, {-1, 1}));
  CHECK(!in_closed_region(neg, {-2, 0}));
  CHECK(in_strict_region(neg, {-3, 2}));
  CHECK(!in_strict_region(neg, {-2, 2}));
}

TEST_CASE("conjecture sandwich holds on a small grid") {
  const VanishGrid grid = scan({2, 0}, 4, {1, 2});
  const ConjectureVerdict verdict = check_conjecture(grid);
  CHECK(verdict.pass);
  CHECK(verdict.zero_inside_strict.empty());
  CHECK(verdict.nonzero_outside_closed.empty());
  CHECK(verdict.zero_in_closed_alpha.empty());
  // One candidate region per orbit member of (2,0).
  CHECK(verdict.candidates.size() == 4);
  for (const auto& cand : verdict.candidates) CHECK(dominant(cand.beta) == Partition({2, 0}));
}

TEST_CASE("mirror symmetry of zero sets") {
  const SymmetryVerdict verdict = check_zero_symmetry({2, 1}, 4, {1, 2});
  CHECK(verdict.pass);
  CHECK(verdict.mismatched.empty());

  // Reusing grids gives the same verdict.
  const VanishGrid plain = scan({2, 1}, 4, {1, 2});
  const VanishGrid flipped = scan({2, -1}, 4, {1, 2});
  const SymmetryVerdict reused = compare_zero_mirror(plain, flipped);
  CHECK(reused.pass);

  // A grid is its own mirror when the second entry vanishes.
  const VanishGrid self = scan({2, 0}, 3, {1, 2});
  CHECK(compare_zero_mirror(self, self).pass);

  CHECK_THROWS_AS(compare_zero_mirror(plain, self), std::invalid_argument);
}

TEST_CASE("text rendering") {
  const VanishGrid grid = scan({2, 0}, 3, {1, 2});
  const std::string text = render_text(grid);
  const size_t rows = std::count(text.begin(), text.end(), '\n');
  CHECK(rows == 7);
  CHECK(text.size() == 7 * 8);
  CHECK(std::count(text.begin(), text.end(), 'A') == 1);
  CHECK(std::count(text.begin(), text.end(), 'O') == 1);
  CHECK(std::count(text.begin(), text.end(), '#') == 11);
  CHECK(render_text(grid) == text);  // deterministic
}

TEST_CASE("csv rendering") {
  const VanishGrid grid = scan({2, 0}, 2, {1, 2});
  const std::string csv = render_csv(grid);
  const size_t rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == 26);  // header plus 25 cells
  CHECK(csv.rfind("beta1,beta2,class,draw1_value,draw2_value", 0) == 0);
  CHECK(csv.find("alpha") != std::string::npos);
  CHECK(csv.find("origin") != std::string::npos);
}

TEST_CASE("svg rendering") {
  const VanishGrid grid = scan({2, 0}, 2, {1, 2});
  const std::string svg = render_svg(grid);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  const auto occurrences = [&svg](const std::string& needle) {
    size_t count = 0, pos = 0;
    while ((pos = svg.find(needle, pos)) != std::string::npos) {
      ++count;
      pos += needle.size();
    }
    return count;
  };
  // One rect per cell plus the five legend swatches.
  CHECK(occurrences("<rect") == 25 + 5);
  // Cell fills track the classification; the legend contributes one swatch of
  // each colour.
  CHECK(occurrences("#8b4513") == 1 + 1);  // alpha cell
  CHECK(occurrences("#228b22") == 1 + 1);  // origin
  CHECK(occurrences("#cc0000") == 1 + grid.extra_zeros().size());
}

TEST_CASE("renders reject arities other than two when they must") {
  const VanishGrid grid1 = scan({2}, 2, {1, 2});
  CHECK_THROWS_AS(render_text(grid1), std::invalid_argument);
  CHECK_THROWS_AS(render_svg(grid1), std::invalid_argument);
  const std::string csv = render_csv(grid1);  // csv handles any arity
  CHECK(csv.rfind("beta1,class", 0) == 0);
}
