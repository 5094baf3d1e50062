#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace bcinterp {

struct CheckReport {
  std::string name;
  bool pass = false;
  long cases = 0;      // instances exercised
  std::string detail;  // first counterexample, empty when clean
};

struct SuiteReport {
  std::string suite;
  bool pass = false;
  std::vector<CheckReport> checks;
};

// Scope knobs for the identity suites.  n/dmax/seed drive the orbit-expansion
// suite; seed also derives the parameter draws of the other suites; seeds and
// radius drive the grid-based suites.
struct SuiteOptions {
  int n = 2;
  int dmax = 4;
  unsigned seed = 1;
  std::vector<unsigned> seeds = {1, 2};
  int radius = 10;
};

const std::vector<std::string>& suite_names();

// Runs one named suite; throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& opt = {});

nlohmann::json report_to_json(const SuiteReport& report);

}  // namespace bcinterp
