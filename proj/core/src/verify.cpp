#include "penner/verify.hpp"

#include <cmath>
#include <sstream>

#include "penner/skein.hpp"

namespace penner {

void SuiteResult::check(bool ok, const std::string& what) {
  lines.push_back(std::string(ok ? "  ok   " : "  FAIL ") + what);
  passed = passed && ok;
}

SuiteResult verify_conjugacy_suite() {
  SuiteResult suite{"conjugacy"};
  for (int l : {3, 5, 7}) {
    ConjugacyReport report = verify_flowdiff_conjugacy(l);
    std::ostringstream os;
    os << "l=" << l << ": " << report.total_words << " words, " << report.buckets.size()
       << " spectral classes, roots";
    for (const auto& b : report.buckets) {
      os << " |d|=" << b.abs_flow_difference << " -> " << b.largest_root;
    }
    suite.check(report.all_checks_passed, os.str());
    for (const auto& note : report.notes) suite.note(note);
  }
  return suite;
}

SuiteResult verify_skein_suite() {
  SuiteResult suite{"skein"};
  // Symmetry of the closed-form Alexander polynomials under u -> 1/u:
  // the two-component torus links flip sign, the three-component H_d do not.
  bool sym = true;
  for (int i = 0; i <= 10; ++i) sym = sym && torus_alexander(i).is_antisymmetric();
  for (int d = 0; d <= 10; d += 2) {
    HalfLaurent h = h_alexander(d);
    sym = sym && h.mirror() == h;
  }
  suite.check(sym, "Delta(1/u) == -Delta(u) for torus links, == +Delta(u) for H_d");

  // Delta_{H_d} - Delta_{H_{d+2}} == (u - 1/u)(u^(d+1) - u^-(d+1)).
  bool alexdiff = true;
  for (int d = 0; d <= 10; d += 2)
    alexdiff = alexdiff && (h_alexander(d) - h_alexander(d + 2) == cycle_diff_identity(d));
  suite.check(alexdiff, "H_d skein difference identity, even d <= 10");

  // Normalized cycle identity against the homology oracle.
  bool cycle_ok = true;
  for (int l = 4; l <= 10; l += 2) {
    for (int d = 0; d + 2 <= l - 2; d += 2) {
      IntPoly lhs = cycle_char_poly(d, l) - cycle_char_poly(d + 2, l);
      cycle_ok = cycle_ok && (lhs == cycle_char_diff_rhs(d, l));
    }
  }
  suite.check(cycle_ok, "chi_{d,l} - chi_{d+2,l} == (t-1)(t^((l+d)/2) - t^((l-d-2)/2)), l <= 10");

  // Enriched identity with the (t-1)^3 factor.
  bool enriched_ok = true;
  for (int l = 6; l <= 10; l += 2) {
    for (int d = 0; d + 2 <= l - 2; d += 2) {
      IntPoly lhs = enriched_cycle_char_poly(d, l) - enriched_cycle_char_poly(d + 2, l);
      enriched_ok = enriched_ok && (lhs == enriched_diff_identity(d, l));
    }
  }
  suite.check(enriched_ok, "enriched chi difference == (t-1)^3 (t^((l+d)/2) - t^((l-d-2)/2))");

  // Monotonicity consequence: larger |d| pushes the largest root up.
  bool roots_ok = true;
  for (int l = 4; l <= 10; l += 2) {
    double prev = -1;
    for (int d = 0; d <= l - 2; d += 2) {
      double root =
          largest_real_root(cycle_char_poly(d, l), make_rational(1, 1000000000L)).approx();
      if (prev >= 0) roots_ok = roots_ok && root > prev;
      prev = root;
    }
  }
  suite.check(roots_ok, "largest root of chi_{d,l} strictly increasing in d");
  return suite;
}

SuiteResult verify_monotonicity_suite() {
  SuiteResult suite{"monotonicity"};
  bool f_mono = true;
  for (int l = 3; l <= 15; ++l) {
    double prev = 0;
    for (int d = (l % 2 == 0) ? 0 : 1; d < l; d += 2) {
      double v = dilatation_function(d, l, 1e-11);
      if (d > 0) f_mono = f_mono && v > prev;
      prev = v;
    }
  }
  suite.check(f_mono, "f(d,l) strictly increasing in |d| for fixed l <= 15");

  bool from_above = true;
  double prev = dilatation_function(1, 3, 1e-11);
  for (int l = 5; l <= 99; l += 2) {
    double v = dilatation_function(1, l, 1e-11);
    from_above = from_above && v < prev;
    prev = v;
  }
  suite.check(from_above, "f(1,l+2) < f(1,l) for odd l <= 99");

  bool mu_mono = true;
  double prev_mu = mu(3);
  for (int l = 5; l <= 99; l += 2) {
    double m = mu(l);
    mu_mono = mu_mono && m <= prev_mu + 1e-10;
    prev_mu = m;
  }
  suite.check(mu_mono, "mu_l nonincreasing for odd l <= 99");

  bool separated = true;
  for (int l = 3; l <= 49; l += 2)
    separated = separated && mu(l) > dilatation_function(1, l, 1e-11);
  suite.check(separated, "mu_l > f(1,l): enriched cycle dominates the plain cycle");
  return suite;
}

SuiteResult verify_prolongation_suite() {
  SuiteResult suite{"prolongation"};
  for (int l = 5; l <= 9; l += 2) {
    auto candidates = search_prolongation_candidates(l, false);
    int passing = 0, full = 0;
    bool theorem_ok = true, conclusion_ok = true;
    for (const auto& c : candidates) {
      if (c.certified) ++passing;
      if (c.full_window) {
        ++full;
        theorem_ok = theorem_ok && c.certified;
      }
      conclusion_ok = conclusion_ok && c.lambda_prolonged <= c.lambda + 1e-8;
    }
    std::ostringstream os;
    os << "C_" << l << ": " << candidates.size() << " hypothesis vertices, " << passing
       << " certified (" << full << " with full alternating window)";
    suite.check(theorem_ok && conclusion_ok, os.str());
  }
  for (int l = 5; l <= 13; l += 2) {
    auto candidates = search_prolongation_candidates(l, true);
    int passing = 0;
    bool theorem_ok = true, conclusion_ok = true;
    for (const auto& c : candidates) {
      if (c.certified) ++passing;
      if (c.full_window) theorem_ok = theorem_ok && c.certified;
      conclusion_ok = conclusion_ok && c.lambda_prolonged <= c.lambda + 1e-8;
    }
    std::ostringstream os;
    os << "P_" << l << ": " << candidates.size() << " hypothesis vertices, " << passing
       << " certified";
    suite.check(passing > 0 && theorem_ok && conclusion_ok, os.str());
  }
  return suite;
}

std::vector<SuiteResult> verify_all() {
  return {verify_conjugacy_suite(), verify_skein_suite(), verify_monotonicity_suite(),
          verify_prolongation_suite()};
}

}  // namespace penner
