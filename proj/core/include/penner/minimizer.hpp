#pragma once

#include <optional>
#include <string>
#include <vector>

#include "penner/closed_forms.hpp"
#include "penner/penner_core.hpp"

namespace penner {

enum class Family { kCycle, kEnrichedCycle };

struct MinimizerCertificate {
  int genus;
  Family family;
  int cycle_length;
  int flow_difference;
  double dilatation;
  std::optional<AlgebraicReal> certified;  // exact value when available
  std::vector<int> witness_word;
};

// mu_l: Perron-Frobenius eigenvalue of the canonical flow-1 word on the
// enriched cycle P_l (odd l >= 3).
double mu(int l, double tol = 1e-12);
// Rigorous enclosure of mu_l.
PFBounds mu_certified(int l, const Rational& max_width);

// Minimal Penner dilatation on N_g. Even genus: certified root power;
// odd genus: mu_{g-2}. Genus <= 3 carries no pseudo-Anosov classes.
MinimizerCertificate min_penner_dilatation(int g, bool certified = false);

// Perron-Frobenius eigenvector, max entry normalized to 1,
// residual |My - lambda y|_inf <= tol.
std::vector<double> pf_vector(const BigMatrix& m, double tol = 1e-12);

// max over {i : x_i != 0} of (Mx)_i / x_i; an upper bound for the
// Perron-Frobenius eigenvalue for every nonnegative x != 0.
double minmax_ratio(const BigMatrix& m, const std::vector<double>& x);

// Local prolongation at a vertex v whose both cycle edges point outward
// (the alternating source-sink window of the monotonicity argument; such a
// vertex becomes a sink of the prolonged graph). Inserts two vertices so
// the edges become v_{i-1} -- v_new1 -- v_i -- v_new2 -- v_{i+1}, the new
// vertices twisted first and pointing inward; flow difference is preserved.
// The result is relabeled to the canonical C_{l+2} / P_{l+2} layout.
TwistWord prolong_at_sink(const TwistWord& w, int i);

// Proof-side certificate: builds the test vector x (x_new = y_i,
// x_i = min(y_{i-1}, y_{i+1}), rest copied from the PF vector y) and checks
// max_j (rho(G')x)_j / x_j <= lambda(G) + tol, which by the min-max
// characterization certifies lambda(G') <= lambda(G).
// Preconditions: the local window around v_i and the eigenvector condition
// y_i <= min(y_{i-2}, y_{i+2}); violations raise domain_error.
bool check_prolongation_bound(const TwistWord& w, int i, double tol);

struct ProlongationCandidate {
  int l = 0;
  int d = 0;
  bool enriched = false;
  std::vector<char> cw;       // orientation of the cycle edges
  bool pendant_outward = true;
  int vertex = -1;
  bool full_window = false;   // both cycle neighbors are sinks
  bool certified = false;     // min-max certificate outcome
  double lambda = 0;
  double lambda_prolonged = 0;
};

// Sweep all flow-|d| orientations of C_l (or P_l) and collect the vertices
// satisfying the prolongation hypothesis, with their certificate outcomes.
std::vector<ProlongationCandidate> search_prolongation_candidates(int l, bool enriched,
                                                                  double tol = 1e-9);

struct ConjugacyBucket {
  int abs_flow_difference;
  long word_count;
  IntPoly char_poly;
  double largest_root;
};

struct ConjugacyReport {
  int l;
  long total_words;
  std::vector<ConjugacyBucket> buckets;  // sorted by |d|
  bool all_checks_passed;
  std::vector<std::string> notes;
};

// Brute force over all l! twist words on C_l: one characteristic polynomial
// per |flow difference|, largest roots strictly increasing in |d|.
ConjugacyReport verify_flowdiff_conjugacy(int l);

struct ConjectureRow {
  int k;
  int genus;     // 2k + 1
  int l;         // 2k - 1
  double mu_value;
  double gap;    // |mu_l - conjectured limit|
};

// Sweep of mu_{2k-1} for k = 2..k_max against the conjectured limit.
// Certified mode pins down the tail rows by exact enclosures.
std::vector<ConjectureRow> conjecture_sweep(int k_max, bool certified = false, int jobs = 1);

enum class BoundRule { kBipartite, kDoubleEdge, kInducedOddCycle };

struct LowerBoundReport {
  BoundRule rule;
  double bound;          // dilatation lower bound, 1.0 when none applies
  std::optional<int> odd_cycle_length;
  std::optional<int> genus_bound;
  std::string detail;
};

// Case analysis of the minimality proofs, as a report: double edges give the
// sqrt(5)-tree bound (7+3*sqrt(5))/2; otherwise the shortest induced odd
// cycle bounds the dilatation by f(1,k) and the genus by k+1; bipartite
// families cannot fill a nonorientable surface at all.
LowerBoundReport lower_bound_report(const IntersectionGraph& g);

}  // namespace penner
