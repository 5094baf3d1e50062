#include "bcinterp/vanish.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "bcinterp/kernels.hpp"
#include "bcinterp/weyl.hpp"

namespace bcinterp {

namespace {

std::vector<ExponentVector> grid_points(int n, int radius) {
  std::vector<ExponentVector> out;
  const long side = 2L * radius + 1;
  long total = 1;
  for (int i = 0; i < n; ++i) total *= side;
  out.reserve(total);
  ExponentVector beta(n, -radius);
  for (long c = 0; c < total; ++c) {
    out.push_back(beta);
    for (int i = n - 1; i >= 0; --i) {
      if (beta[i] < radius) {
        ++beta[i];
        break;
      }
      beta[i] = -radius;
    }
  }
  return out;
}

long grid_index(const ExponentVector& beta, int radius) {
  long idx = 0;
  const long side = 2L * radius + 1;
  for (int e : beta) {
    if (e < -radius || e > radius) throw std::out_of_range("grid cell outside window");
    idx = idx * side + (e + radius);
  }
  return idx;
}

}  // namespace

const char* cell_class_name(CellClass c) {
  switch (c) {
    case CellClass::alpha_point: return "alpha_point";
    case CellClass::origin: return "origin";
    case CellClass::node_zero: return "node_zero";
    case CellClass::extra_zero: return "extra_zero";
    case CellClass::nonzero: return "nonzero";
  }
  return "?";
}

const GridCell& VanishGrid::cell(const ExponentVector& beta) const {
  return cells.at(grid_index(beta, radius));
}

std::vector<ExponentVector> VanishGrid::extra_zeros() const {
  std::vector<ExponentVector> out;
  for (const auto& c : cells)
    if (c.cls == CellClass::extra_zero) out.push_back(c.beta);
  return out;
}

std::vector<ExponentVector> VanishGrid::zero_cells() const {
  std::vector<ExponentVector> out;
  for (const auto& c : cells)
    if (c.zero_all_draws) out.push_back(c.beta);
  return out;
}

bool VanishGrid::any_disagreement() const {
  for (const auto& c : cells)
    if (c.disagreement) return true;
  return false;
}

InterpParams pseudo_random_draw(int n, unsigned seed, int window) {
  std::mt19937_64 engine(seed);
  auto hundredth = [&engine] {
    return Rational(static_cast<long>(1 + engine() % 99), 100);
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Rational q = hundredth();
    const Rational s = hundredth();
    const Rational t = hundredth();
    InterpParams p = InterpParams::principal(n, q, s, t);
    if (p.genericity(window).ok) return p;
  }
  throw std::runtime_error("pseudo_random_draw: no generic draw found");
}

VanishGrid scan(const ExponentVector& alpha, int radius, const std::vector<unsigned>& seeds) {
  const int n = static_cast<int>(alpha.size());
  if (n < 1) throw std::invalid_argument("scan: empty index vector");
  if (radius < 0) throw std::invalid_argument("scan: negative radius");
  if (seeds.size() < 2) throw std::invalid_argument("scan: need at least two seeded draws");

  VanishGrid grid;
  grid.alpha = alpha;
  grid.radius = radius;
  grid.seeds = seeds;

  const auto points = grid_points(n, radius);
  grid.cells.resize(points.size());
  for (size_t i = 0; i < points.size(); ++i) grid.cells[i].beta = points[i];

  const int window = std::max(kDefaultGenericityWindow, 2 * (weight(alpha) + radius) + 4);
  for (unsigned seed : seeds) {
    InterpParams p = pseudo_random_draw(n, seed, window);
    InterpCache cache(p);
    const LaurentPoly& g = cache.G(alpha);
    std::vector<Node> nodes;
    nodes.reserve(points.size());
    for (const auto& beta : points) nodes.push_back(node_general(beta, p));
    const auto values = kernels::eval_at_nodes(g, nodes);
    for (size_t i = 0; i < points.size(); ++i) grid.cells[i].values.push_back(values[i]);
    grid.draws.push_back(std::move(p));
  }

  const int d = weight(alpha);
  const ExponentVector zero_vec(n, 0);
  for (auto& cell : grid.cells) {
    size_t zeros = 0;
    for (const auto& v : cell.values)
      if (v == 0) ++zeros;
    cell.zero_all_draws = zeros == cell.values.size();
    cell.disagreement = zeros != 0 && !cell.zero_all_draws;
    if (cell.beta == alpha)
      cell.cls = CellClass::alpha_point;
    else if (cell.beta == zero_vec)
      cell.cls = CellClass::origin;
    else if (weight(cell.beta) <= d)
      cell.cls = CellClass::node_zero;
    else
      cell.cls = cell.zero_all_draws ? CellClass::extra_zero : CellClass::nonzero;
  }
  return grid;
}

bool in_closed_region(const ExponentVector& beta, const ExponentVector& mu) {
  for (size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] > 0 && mu[i] < beta[i]) return false;
    if (beta[i] < 0 && mu[i] > beta[i]) return false;
  }
  return true;
}

bool in_strict_region(const ExponentVector& beta, const ExponentVector& mu) {
  for (size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] > 0 && mu[i] <= beta[i]) return false;
    if (beta[i] < 0 && mu[i] >= beta[i]) return false;
    if (beta[i] == 0 && mu[i] == 0) return false;
  }
  return true;
}

ConjectureVerdict check_conjecture(const VanishGrid& grid) {
  const auto members = orbit(dominant(grid.alpha));
  ConjectureVerdict verdict;

  for (const auto& cell : grid.cells) {
    if (cell.zero_all_draws) {
      for (const auto& beta : members)
        if (in_strict_region(beta, cell.beta)) {
          verdict.zero_inside_strict.push_back(cell.beta);
          break;
        }
      if (in_closed_region(grid.alpha, cell.beta))
        verdict.zero_in_closed_alpha.push_back(cell.beta);
    } else {
      bool covered = false;
      for (const auto& beta : members)
        if (in_closed_region(beta, cell.beta)) {
          covered = true;
          break;
        }
      if (!covered) verdict.nonzero_outside_closed.push_back(cell.beta);
    }
  }

  for (const auto& beta : members) {
    ConjectureVerdict::Candidate cand;
    cand.beta = beta;
    for (const auto& cell : grid.cells) {
      if (cell.zero_all_draws || !in_closed_region(beta, cell.beta)) continue;
      cand.cells.push_back(cell.beta);
      bool shared = false;
      for (const auto& other : members)
        if (other != beta && in_closed_region(other, cell.beta)) {
          shared = true;
          break;
        }
      (shared ? cand.optional : cand.forced)++;
    }
    verdict.candidates.push_back(std::move(cand));
  }

  verdict.pass = verdict.zero_inside_strict.empty() && verdict.nonzero_outside_closed.empty() &&
                 verdict.zero_in_closed_alpha.empty();
  return verdict;
}

SymmetryVerdict check_zero_symmetry(const ExponentVector& alpha, int radius,
                                    const std::vector<unsigned>& seeds) {
  if (alpha.size() != 2) throw std::invalid_argument("check_zero_symmetry: needs n = 2");
  const ExponentVector mirrored{alpha[0], -alpha[1]};
  return compare_zero_mirror(scan(alpha, radius, seeds), scan(mirrored, radius, seeds));
}

SymmetryVerdict compare_zero_mirror(const VanishGrid& plain, const VanishGrid& flipped) {
  if (plain.alpha.size() != 2 || flipped.alpha.size() != 2)
    throw std::invalid_argument("compare_zero_mirror: needs n = 2");
  if (flipped.alpha[0] != plain.alpha[0] || flipped.alpha[1] != -plain.alpha[1] ||
      flipped.radius != plain.radius || flipped.seeds != plain.seeds)
    throw std::invalid_argument("compare_zero_mirror: grids are not mirror partners");

  SymmetryVerdict verdict;
  verdict.pass = true;
  for (const auto& cell : flipped.cells) {
    const ExponentVector partner{cell.beta[0], -cell.beta[1]};
    const GridCell& twin = plain.cell(partner);
    for (size_t d = 0; d < cell.values.size(); ++d) {
      if ((cell.values[d] == 0) != (twin.values[d] == 0)) {
        verdict.pass = false;
        verdict.mismatched.push_back(cell.beta);
        break;
      }
    }
  }
  return verdict;
}

std::string render_text(const VanishGrid& grid) {
  if (grid.alpha.size() != 2) throw std::invalid_argument("render_text: needs n = 2");
  std::string out;
  const int r = grid.radius;
  for (int b2 = r; b2 >= -r; --b2) {
    for (int b1 = -r; b1 <= r; ++b1) {
      switch (grid.cell({b1, b2}).cls) {
        case CellClass::alpha_point: out += 'A'; break;
        case CellClass::origin: out += 'O'; break;
        case CellClass::node_zero: out += '#'; break;
        case CellClass::extra_zero: out += '*'; break;
        case CellClass::nonzero: out += '.'; break;
      }
    }
    out += '\n';
  }
  return out;
}

std::string render_csv(const VanishGrid& grid) {
  const size_t n = grid.alpha.size();
  std::string out;
  for (size_t i = 1; i <= n; ++i) out += "beta" + std::to_string(i) + ",";
  out += "class";
  for (size_t d = 1; d <= grid.draws.size(); ++d) out += ",draw" + std::to_string(d) + "_value";
  out += '\n';
  for (const auto& cell : grid.cells) {
    for (int e : cell.beta) out += std::to_string(e) + ",";
    out += cell_class_name(cell.cls);
    for (const auto& v : cell.values) out += "," + to_string(v);
    out += '\n';
  }
  return out;
}

std::string render_svg(const VanishGrid& grid) {
  if (grid.alpha.size() != 2) throw std::invalid_argument("render_svg: needs n = 2");
  const int r = grid.radius;
  const int cellpx = 12, margin = 24, legend = 40;
  const int side = (2 * r + 1) * cellpx;
  const int width = side + 2 * margin;
  const int height = side + 2 * margin + legend;

  auto color = [](CellClass c) {
    switch (c) {
      case CellClass::alpha_point: return "#8b4513";
      case CellClass::origin: return "#228b22";
      case CellClass::node_zero: return "#000000";
      case CellClass::extra_zero: return "#cc0000";
      case CellClass::nonzero: return "#f5f5f5";
    }
    return "#f5f5f5";
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
  out += "<!-- beta1 increases rightward, beta2 upward -->\n";
  for (int b2 = r; b2 >= -r; --b2) {
    for (int b1 = -r; b1 <= r; ++b1) {
      const GridCell& cell = grid.cell({b1, b2});
      const int x = margin + (b1 + r) * cellpx;
      const int y = margin + (r - b2) * cellpx;
      out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
             std::to_string(cellpx) + "\" height=\"" + std::to_string(cellpx) + "\" fill=\"" +
             color(cell.cls) + "\" stroke=\"#cccccc\" stroke-width=\"0.5\"><title>(" +
             std::to_string(b1) + "," + std::to_string(b2) + ") " + cell_class_name(cell.cls) +
             "</title></rect>\n";
    }
  }
  const std::pair<CellClass, const char*> entries[] = {
      {CellClass::alpha_point, "alpha"},
      {CellClass::origin, "origin"},
      {CellClass::node_zero, "node zero"},
      {CellClass::extra_zero, "extra zero"},
      {CellClass::nonzero, "nonzero"},
  };
  int lx = margin;
  const int ly = side + 2 * margin + 10;
  for (const auto& [cls, label] : entries) {
    out += "<rect x=\"" + std::to_string(lx) + "\" y=\"" + std::to_string(ly) +
           "\" width=\"10\" height=\"10\" fill=\"" + std::string(color(cls)) +
           "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
    out += "<text x=\"" + std::to_string(lx + 14) + "\" y=\"" + std::to_string(ly + 9) +
           "\" font-size=\"10\" font-family=\"sans-serif\">" + label + "</text>\n";
    lx += 14 + 10 * static_cast<int>(std::string(label).size());
  }
  out += "</svg>\n";
  return out;
}

}  // namespace bcinterp
