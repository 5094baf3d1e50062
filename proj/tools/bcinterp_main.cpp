// Command-line front end: compute single polynomials, run verification
// suites, and scan vanishing grids.  All arithmetic is exact; every rational
// argument is an explicit fraction "p/q" (no decimals).
//
// Exit codes: 0 success, 2 configuration error, 3 degenerate parameters,
// 4 verification failure (failed suite or draw-dependent zero set).

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcinterp/interp.hpp"
#include "bcinterp/json_io.hpp"
#include "bcinterp/linalg.hpp"
#include "bcinterp/points.hpp"
#include "bcinterp/rational.hpp"
#include "bcinterp/vanish.hpp"
#include "bcinterp/verify.hpp"

namespace {

using namespace bcinterp;

std::vector<std::string> split_commas(const std::string& text, const std::string& flag) {
  if (text.empty()) throw std::invalid_argument(flag + ": empty list");
  std::vector<std::string> items;
  size_t pos = 0;
  while (true) {
    const size_t comma = std::min(text.find(',', pos), text.size());
    items.push_back(text.substr(pos, comma - pos));
    if (items.back().empty()) throw std::invalid_argument(flag + ": empty entry in list");
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return items;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  for (const std::string& item : split_commas(text, flag)) {
    try {
      size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument("trailing characters");
      out.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument(flag + ": bad integer '" + item + "'");
    }
  }
  return out;
}

std::vector<unsigned> parse_seed_list(const std::string& text, const std::string& flag) {
  std::vector<unsigned> out;
  for (const std::string& item : split_commas(text, flag)) {
    try {
      size_t used = 0;
      const unsigned long value = std::stoul(item, &used);
      if (used != item.size() || value > 0xffffffffUL)
        throw std::invalid_argument("out of range");
      out.push_back(static_cast<unsigned>(value));
    } catch (const std::exception&) {
      throw std::invalid_argument(flag + ": bad seed '" + item + "'");
    }
  }
  return out;
}

Rational parse_rat_flag(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(flag + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    atomic_write_file(out, text);
}

struct ComputeConfig {
  std::string kind;
  int n = 0;  // 0 = infer from the index
  std::string alpha_text, lambda_text;
  std::string q_text, s_text, t_text, tau_text;
  bool principal = false;
  std::string out;
};

int run_compute(const ComputeConfig& cfg) {
  const bool is_g = cfg.kind == "G";
  const std::string index_flag = is_g ? "--alpha" : "--lambda";
  const std::string& index_text = is_g ? cfg.alpha_text : cfg.lambda_text;
  if (index_text.empty())
    throw std::invalid_argument(index_flag + ": required for compute " + cfg.kind);
  if (is_g && !cfg.lambda_text.empty())
    throw std::invalid_argument("--lambda: not used by compute G");
  if (!is_g && !cfg.alpha_text.empty())
    throw std::invalid_argument("--alpha: not used by compute R");

  const std::vector<int> index = parse_int_list(index_text, index_flag);
  const int n = static_cast<int>(index.size());
  if (cfg.n != 0 && cfg.n != n)
    throw std::invalid_argument("--n: does not match the length of " + index_flag);

  if (cfg.q_text.empty()) throw std::invalid_argument("--q: required");
  const Rational q = parse_rat_flag(cfg.q_text, "--q");

  InterpParams p = [&] {
    if (!cfg.tau_text.empty()) {
      if (cfg.principal || !cfg.s_text.empty() || !cfg.t_text.empty())
        throw std::invalid_argument("--tau: conflicts with --principal/--s/--t");
      std::vector<Rational> tau;
      for (const std::string& item : split_commas(cfg.tau_text, "--tau"))
        tau.push_back(parse_rat_flag(item, "--tau"));
      if (static_cast<int>(tau.size()) != n)
        throw std::invalid_argument("--tau: needs one entry per variable");
      return InterpParams::general(q, std::move(tau));
    }
    if (cfg.s_text.empty())
      throw std::invalid_argument("--s: required unless --tau is given");
    const Rational s = parse_rat_flag(cfg.s_text, "--s");
    if (cfg.t_text.empty() && n > 1)
      throw std::invalid_argument("--t: required for more than one variable");
    const Rational t = cfg.t_text.empty() ? s : parse_rat_flag(cfg.t_text, "--t");
    return InterpParams::principal(n, q, s, t);
  }();

  InterpCache cache(p);
  const LaurentPoly f = is_g ? cache.G(index) : cache.R(Partition(index));

  nlohmann::json doc;
  doc["manifest"] = {
      {"kind", cfg.kind},
      {"index", index},
      {"degree", weight(index)},
      {"parameters", params_to_json(p)},
  };
  doc["polynomial"] = poly_to_json(f);
  emit(doc.dump(2) + "\n", cfg.out);
  return 0;
}

struct VerifyConfig {
  std::string suite;
  SuiteOptions opt;
  std::string seeds_text;
  std::string out;
};

int run_verify(VerifyConfig cfg) {
  if (!cfg.seeds_text.empty()) cfg.opt.seeds = parse_seed_list(cfg.seeds_text, "--seeds");
  const SuiteReport rep = run_suite(cfg.suite, cfg.opt);
  emit(report_to_json(rep).dump(2) + "\n", cfg.out);
  return rep.pass ? 0 : 4;
}

struct ScanConfig {
  std::string alpha_text;
  int radius = 10;
  std::string seeds_text = "1,2";
  std::string format = "text";
  std::string out;
};

int run_scan(const ScanConfig& cfg) {
  const std::vector<int> alpha = parse_int_list(cfg.alpha_text, "--alpha");
  if (cfg.radius < 0) throw std::invalid_argument("--radius: must be >= 0");
  const std::vector<unsigned> seeds = parse_seed_list(cfg.seeds_text, "--seeds");

  const VanishGrid grid = scan(alpha, cfg.radius, seeds);

  std::string doc;
  if (cfg.format == "text")
    doc = render_text(grid);
  else if (cfg.format == "csv")
    doc = render_csv(grid);
  else
    doc = render_svg(grid);

  nlohmann::json verdict;
  verdict["alpha"] = grid.alpha;
  verdict["radius"] = grid.radius;
  verdict["seeds"] = grid.seeds;
  {
    nlohmann::json draws = nlohmann::json::array();
    for (const InterpParams& d : grid.draws) draws.push_back(params_to_json(d));
    verdict["draws"] = draws;
  }
  verdict["cells"] = grid.cells.size();
  verdict["extra_zeros"] = grid.extra_zeros();
  verdict["disagreements"] =
      std::count_if(grid.cells.begin(), grid.cells.end(),
                    [](const GridCell& c) { return c.disagreement; });

  const ConjectureVerdict cv = check_conjecture(grid);
  {
    nlohmann::json cj;
    cj["pass"] = cv.pass;
    cj["zero_inside_strict"] = cv.zero_inside_strict;
    cj["nonzero_outside_closed"] = cv.nonzero_outside_closed;
    cj["zero_in_closed_alpha"] = cv.zero_in_closed_alpha;
    nlohmann::json cands = nlohmann::json::array();
    for (const auto& c : cv.candidates)
      cands.push_back({{"beta", c.beta}, {"forced", c.forced}, {"optional", c.optional}});
    cj["candidates"] = cands;
    verdict["conjecture"] = cj;
  }

  if (alpha.size() == 2) {
    const ExponentVector mirrored{alpha[0], -alpha[1]};
    const SymmetryVerdict sv = mirrored == grid.alpha
                                   ? compare_zero_mirror(grid, grid)
                                   : compare_zero_mirror(grid, scan(mirrored, cfg.radius, seeds));
    verdict["symmetry"] = {{"pass", sv.pass}, {"mismatched", sv.mismatched}};
  }

  const std::string verdict_text = verdict.dump(2) + "\n";
  if (!cfg.out.empty()) {
    atomic_write_file(cfg.out, doc);
    std::cout << verdict_text;
  } else {
    std::cout << doc;
    std::cerr << verdict_text;
  }
  return grid.any_disagreement() ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for BC-type interpolation Laurent polynomials"};
  app.require_subcommand(1);

  ComputeConfig ccfg;
  VerifyConfig vcfg;
  ScanConfig scfg;

  CLI::App* compute =
      app.add_subcommand("compute", "Compute one interpolation polynomial and emit JSON");
  compute->add_option("kind", ccfg.kind, "G (nonsymmetric) or R (symmetric)")
      ->required()
      ->check(CLI::IsMember({"G", "R"}));
  compute->add_option("--n", ccfg.n, "number of variables (checked against the index)");
  compute->add_option("--alpha", ccfg.alpha_text, "index vector for G, comma separated");
  compute->add_option("--lambda", ccfg.lambda_text, "partition for R, comma separated");
  compute->add_option("--q", ccfg.q_text, "base point, a fraction in (0,1)");
  compute->add_option("--s", ccfg.s_text, "principal parameter s");
  compute->add_option("--t", ccfg.t_text, "principal parameter t");
  compute->add_option("--tau", ccfg.tau_text, "explicit node parameters, comma separated");
  compute->add_flag("--principal", ccfg.principal,
                    "derive tau from --s/--t (the default when --tau is absent)");
  compute->add_option("--out", ccfg.out, "write here atomically; stdout when absent");

  CLI::App* verify =
      app.add_subcommand("verify", "Run one verification suite and emit a JSON report");
  verify->add_option("suite", vcfg.suite, "weyl | nodes | interp | hecke | symexp | vanishing-symmetry | knop-remark")
      ->required();
  verify->add_option("--n", vcfg.opt.n, "arity for the orbit-expansion suite")
      ->capture_default_str();
  verify->add_option("--dmax", vcfg.opt.dmax, "degree bound for the orbit-expansion suite")
      ->capture_default_str();
  verify->add_option("--seed", vcfg.opt.seed, "seed for parameter draws")->capture_default_str();
  verify->add_option("--seeds", vcfg.seeds_text, "seed list for grid suites (default 1,2)");
  verify->add_option("--radius", vcfg.opt.radius, "box radius for grid suites")
      ->capture_default_str();
  verify->add_option("--out", vcfg.out, "write the report here atomically; stdout when absent");

  CLI::App* scan_cmd =
      app.add_subcommand("scan", "Evaluate one G over an integer box and classify its zeros");
  scan_cmd->add_option("--alpha", scfg.alpha_text, "index vector, comma separated")->required();
  scan_cmd->add_option("--radius", scfg.radius, "box half-width")->capture_default_str();
  scan_cmd->add_option("--seeds", scfg.seeds_text, "seeded draws, at least two")
      ->capture_default_str();
  scan_cmd->add_option("--format", scfg.format, "grid rendering")
      ->check(CLI::IsMember({"text", "csv", "svg"}))
      ->capture_default_str();
  scan_cmd->add_option("--out", scfg.out,
                       "write the grid here atomically (verdict JSON then goes to stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(ccfg);
    if (verify->parsed()) return run_verify(vcfg);
    return run_scan(scfg);
  } catch (const bcinterp::degeneracy_error& e) {
    std::cerr << "degenerate parameters: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
