#pragma once

#include <string>
#include <vector>

#include "penner/minimizer.hpp"

namespace penner {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> lines;

  void check(bool ok, const std::string& what);
  void note(const std::string& what) { lines.push_back("       " + what); }
};

// Flow-difference conjugacy classes by brute force, l = 3, 5, 7.
SuiteResult verify_conjugacy_suite();

// Exact skein-derived polynomial identities: the torus-link Alexander
// difference, the cycle difference (t-1)(...) and the enriched (t-1)^3
// variant against the homology-transvection oracle, even l <= 10.
SuiteResult verify_skein_suite();

// Monotonicity: the dilatation function in |x/y| and in the length, and the
// mu_l sequence.
SuiteResult verify_monotonicity_suite();

// Prolongation certificates on cycles and enriched cycles.
SuiteResult verify_prolongation_suite();

std::vector<SuiteResult> verify_all();

}  // namespace penner
