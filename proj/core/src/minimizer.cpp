#include "penner/minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <thread>

namespace penner {

double mu(int l, double tol) {
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("mu needs odd l >= 3");
  return spectral_radius_float(word_matrix(canonical_word(l, 1, true)), tol);
}

PFBounds mu_certified(int l, const Rational& max_width) {
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("mu needs odd l >= 3");
  return exact_pf_bounds(word_matrix(canonical_word(l, 1, true)), max_width);
}

MinimizerCertificate min_penner_dilatation(int g, bool certified) {
  if (g < 4)
    throw std::invalid_argument(
        "genus " + std::to_string(g) +
        " does not admit pseudo-Anosov mapping classes from Penner's construction");
  MinimizerCertificate cert;
  cert.genus = g;
  cert.flow_difference = 1;
  if (g % 2 == 0) {
    cert.family = Family::kCycle;
    cert.cycle_length = g - 1;
    AlgebraicReal value = even_genus_min(g, make_rational(1, BigInt(10'000'000'000'000L)));
    cert.dilatation = value.approx();
    cert.certified = std::move(value);
    cert.witness_word = canonical_word(g - 1, 1, false).order;
  } else {
    cert.family = Family::kEnrichedCycle;
    cert.cycle_length = g - 2;
    if (certified) {
      PFBounds b = mu_certified(g - 2, make_rational(1, BigInt(10'000'000'000'000L)));
      cert.dilatation = b.midpoint();
    } else {
      cert.dilatation = mu(g - 2);
    }
    cert.witness_word = canonical_word(g - 2, 1, true).order;
  }
  return cert;
}

std::vector<double> pf_vector(const BigMatrix& m, double tol) {
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  if (!is_primitive(m))
    throw NotPerronFrobeniusError("matrix is not primitive; Perron-Frobenius theory unavailable");
  const int n = m.dim();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = to_double(m.at(i, j));
  std::vector<double> x(n, 1.0), y(n);
  for (int iter = 0; iter < 2000000; ++iter) {
    for (int i = 0; i < n; ++i) {
      double acc = 0;
      for (int j = 0; j < n; ++j) acc += a[i][j] * x[j];
      y[i] = acc;
    }
    double norm = *std::max_element(y.begin(), y.end());
    for (int i = 0; i < n; ++i) y[i] /= norm;
    // norm is the ratio at the max-entry coordinate; use it as the
    // eigenvalue estimate for the residual test.
    double residual = 0;
    for (int i = 0; i < n; ++i) {
      double acc = 0;
      for (int j = 0; j < n; ++j) acc += a[i][j] * y[j];
      residual = std::max(residual, std::abs(acc - norm * y[i]));
    }
    x = y;
    if (residual <= tol) return x;
  }
  throw ConvergenceError("pf_vector did not converge");
}

double minmax_ratio(const BigMatrix& m, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != m.dim()) throw std::invalid_argument("dimension mismatch");
  bool any_nonzero = false;
  for (double v : x) {
    if (v < 0) throw std::invalid_argument("vector must be nonnegative");
    if (v != 0) any_nonzero = true;
  }
  if (!any_nonzero) throw std::invalid_argument("vector must be nonzero");
  const int n = m.dim();
  double worst = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    double acc = 0;
    for (int j = 0; j < n; ++j) acc += to_double(m.at(i, j)) * x[j];
    worst = std::max(worst, acc / x[i]);
  }
  return worst;
}

namespace {

struct LocalWindow {
  int l;              // cycle length
  bool enriched;
  int pendant_attach; // -1 for plain cycles
  std::vector<char> cw;
  bool pendant_outward;  // attachment twisted before pendant
};

LocalWindow analyze_cycle_word(const TwistWord& w) {
  LocalWindow win;
  AcyclicOrientation o = orientation_from_word(w);
  if (is_cycle_graph(w.graph)) {
    win.l = w.graph.size();
    win.enriched = false;
    win.pendant_attach = -1;
    win.pendant_outward = true;
  } else if (is_enriched_cycle_graph(w.graph)) {
    win.l = w.graph.size() - 1;
    win.enriched = true;
    win.pendant_attach = 0;
    win.pendant_outward = o.directed(0, win.l);
  } else {
    throw std::invalid_argument("prolongation needs a cycle or enriched cycle");
  }
  win.cw = clockwise_bits(o);
  return win;
}

// The prolongation spot: both cycle edges point away from v_i, i.e. edge
// {i-1,i} anticlockwise and {i,i+1} clockwise; v_i becomes the sink of the
// inserted source-sink path. Pendant at v_i itself is excluded.
void require_window(const LocalWindow& win, int i) {
  if (i < 0 || i >= win.l) throw std::domain_error("vertex is not a cycle vertex");
  if (win.enriched && i == win.pendant_attach)
    throw std::domain_error("prolongation vertex must not carry the pendant");
  int prev_edge = (i + win.l - 1) % win.l;  // edge {i-1, i}
  bool out_left = !win.cw[prev_edge];       // i -> i-1
  bool out_right = win.cw[i];               // i -> i+1
  if (!out_left || !out_right)
    throw std::domain_error("both cycle edges must point away from the vertex");
}

}  // namespace

TwistWord prolong_at_sink(const TwistWord& w, int i) {
  LocalWindow win = analyze_cycle_word(w);
  require_window(win, i);
  const int l = win.l;
  // New cyclic vertex sequence: ..., i-1, new_a, i, new_b, i+1, ...
  // with new_a -> {i-1, i} and new_b -> {i, i+1} (new vertices twisted
  // first, v_i becomes a sink). Flow difference is preserved: the window
  // contributes 2 clockwise and 2 anticlockwise edges instead of 1 + 1.
  const int kNewA = l, kNewB = l + 1;
  std::vector<int> seq;
  seq.reserve(l + 2);
  for (int v = 0; v < l; ++v) {
    if (v == i) {
      seq.push_back(kNewA);
      seq.push_back(i);
      seq.push_back(kNewB);
    } else {
      seq.push_back(v);
    }
  }
  std::vector<char> dir(l + 2);  // 1 iff seq[e] -> seq[e+1]
  for (int e = 0; e < l + 2; ++e) {
    int a = seq[e], b = seq[(e + 1) % (l + 2)];
    if (a == kNewA)
      dir[e] = 1;  // new_a -> i
    else if (b == kNewA)
      dir[e] = 0;  // new_a -> i-1
    else if (a == kNewB)
      dir[e] = 1;  // new_b -> i+1
    else if (b == kNewB)
      dir[e] = 0;  // new_b -> i
    else
      dir[e] = win.cw[a];  // untouched cycle edge {a, a+1 mod l}
  }
  // Relabel to the canonical layout: the vertex at position p along the new
  // cycle becomes p, rotated so old vertex 0 (the pendant attachment for
  // enriched cycles; i != 0 there) stays at 0.
  int zero_pos = 0;
  for (int p = 0; p < l + 2; ++p)
    if (seq[p] == 0) zero_pos = p;
  std::vector<char> cw(l + 2);
  for (int e = 0; e < l + 2; ++e) cw[e] = dir[(zero_pos + e) % (l + 2)];
  return word_from_clockwise_bits(l + 2, cw, win.enriched, win.pendant_outward);
}

bool check_prolongation_bound(const TwistWord& w, int i, double tol) {
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  LocalWindow win = analyze_cycle_word(w);
  require_window(win, i);
  const int l = win.l;
  const int n = w.graph.size();

  BigMatrix m = word_matrix(w);
  double lambda = spectral_radius_float(m, 1e-13);
  std::vector<double> y = pf_vector(m, 1e-12);

  auto cyc = [&](int v) { return ((v % l) + l) % l; };
  // Eigenvector condition from the monotonicity proposition.
  if (!(y[i] <= std::min(y[cyc(i - 2)], y[cyc(i + 2)]) + tol))
    throw std::domain_error("Perron-Frobenius coefficient condition fails at this vertex");

  // Prolonged system, unrelabeled: vertices 0..n-1 plus new_a = n, new_b = n+1,
  // new_a between i-1 and i, new_b between i and i+1, both twisted first.
  const int new_a = n, new_b = n + 1;
  const int left = cyc(i - 1), right = cyc(i + 1);
  std::vector<std::vector<int>> omega(n + 2, std::vector<int>(n + 2, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) omega[a][b] = w.graph.multiplicity(a, b);
  auto disconnect = [&](int a, int b) { omega[a][b] = omega[b][a] = 0; };
  auto connect = [&](int a, int b) { omega[a][b] = omega[b][a] = 1; };
  disconnect(left, i);
  disconnect(i, right);
  connect(left, new_a);
  connect(new_a, i);
  connect(i, new_b);
  connect(new_b, right);
  IntersectionGraph prolonged(std::move(omega));

  AcyclicOrientation o = orientation_from_word(w);
  std::vector<std::vector<char>> to(n + 2, std::vector<char>(n + 2, 0));
  for (int a = 0; a < n; ++a)
    for (int b : w.graph.neighbors(a))
      if (o.directed(a, b)) to[a][b] = 1;
  to[left][i] = to[i][left] = 0;
  to[i][right] = to[right][i] = 0;
  to[new_a][left] = 1;
  to[new_a][i] = 1;
  to[new_b][i] = 1;
  to[new_b][right] = 1;
  AcyclicOrientation op(prolonged, std::move(to));
  TwistWord wp(prolonged, op.lex_min_topological_order());
  BigMatrix mp = word_matrix(wp);

  // Proof's test vector.
  std::vector<double> x(n + 2);
  for (int v = 0; v < n; ++v) x[v] = y[v];
  x[i] = std::min(y[left], y[right]);
  x[new_a] = y[i];
  x[new_b] = y[i];
  return minmax_ratio(mp, x) <= lambda + tol;
}

std::vector<ProlongationCandidate> search_prolongation_candidates(int l, bool enriched,
                                                                  double tol) {
  if (l < 3) throw std::invalid_argument("cycle length must be >= 3");
  if (l > 16) throw ResourceLimitError("prolongation search limited to l <= 16");
  std::vector<ProlongationCandidate> found;
  for (unsigned long mask = 1; mask + 1 < (1ul << l); ++mask) {
    std::vector<char> cw(l);
    for (int e = 0; e < l; ++e) cw[e] = (mask >> e) & 1;
    int d = 0;
    for (char b : cw) d += b ? 1 : -1;
    for (int pendant_case = 0; pendant_case < (enriched ? 2 : 1); ++pendant_case) {
      bool pendant_outward = pendant_case == 0;
      TwistWord w = word_from_clockwise_bits(l, cw, enriched, pendant_outward);
      BigMatrix m = word_matrix(w);
      std::vector<double> y = pf_vector(m, 1e-12);
      AcyclicOrientation o = orientation_from_word(w);
      for (int i = 0; i < l; ++i) {
        if (enriched && i == 0) continue;  // pendant attachment
        int prev_edge = (i + l - 1) % l;
        if (cw[prev_edge] || !cw[i]) continue;  // need both edges out of v_i
        int left = (i + l - 1) % l, right = (i + 1) % l;
        if (!(y[i] <= std::min(y[(i + l - 2) % l], y[(i + 2) % l]) + 1e-12)) continue;
        ProlongationCandidate cand;
        cand.l = l;
        cand.d = d;
        cand.enriched = enriched;
        cand.cw = cw;
        cand.pendant_outward = pendant_outward;
        cand.vertex = i;
        cand.full_window = o.is_sink(left) && o.is_sink(right);
        cand.certified = check_prolongation_bound(w, i, tol);
        cand.lambda = spectral_radius_float(m, 1e-12);
        TwistWord wp = prolong_at_sink(w, i);
        cand.lambda_prolonged = spectral_radius_float(word_matrix(wp), 1e-12);
        found.push_back(std::move(cand));
      }
    }
  }
  return found;
}

ConjugacyReport verify_flowdiff_conjugacy(int l) {
  if (l < 3) throw std::invalid_argument("cycle length must be >= 3");
  if (l > 9) throw ResourceLimitError("word enumeration limited to l <= 9");
  ConjugacyReport report;
  report.l = l;
  report.total_words = 0;
  report.all_checks_passed = true;

  IntersectionGraph g = cycle_graph(l);
  // Words with the same induced orientation have equal matrices (commuting
  // twists); verify that per word against the orientation representative,
  // and compute one characteristic polynomial per orientation.
  struct OrientationData {
    BigMatrix matrix;
    IntPoly cp;
    int d;
  };
  std::map<unsigned long, OrientationData> by_orientation;
  std::map<int, long> bucket_counts;

  std::vector<int> perm(l);
  for (int i = 0; i < l; ++i) perm[i] = i;
  std::vector<int> position(l);
  do {
    for (int k = 0; k < l; ++k) position[perm[k]] = k;
    unsigned long mask = 0;
    for (int e = 0; e < l; ++e)
      if (position[e] < position[(e + 1) % l]) mask |= 1ul << e;
    TwistWord w(g, perm);
    BigMatrix m = word_matrix(w);
    auto it = by_orientation.find(mask);
    if (it == by_orientation.end()) {
      int d = 0;
      for (int e = 0; e < l; ++e) d += (mask >> e) & 1 ? 1 : -1;
      IntPoly cp = m.char_poly();
      by_orientation.emplace(mask, OrientationData{std::move(m), std::move(cp), d});
    } else if (!(m == it->second.matrix)) {
      report.all_checks_passed = false;
      report.notes.push_back("word with same orientation produced a different matrix");
    }
    ++report.total_words;
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Bucket by |d|; all characteristic polynomials within a bucket must agree.
  std::map<int, IntPoly> bucket_poly;
  for (const auto& [mask, data] : by_orientation) {
    int ad = std::abs(data.d);
    auto it = bucket_poly.find(ad);
    if (it == bucket_poly.end()) {
      bucket_poly.emplace(ad, data.cp);
    } else if (!(it->second == data.cp)) {
      report.all_checks_passed = false;
      report.notes.push_back("flow difference " + std::to_string(data.d) +
                             " has more than one characteristic polynomial");
    }
  }
  // Count words per bucket: every word maps to its orientation's |d|.
  for (int i = 0; i < l; ++i) perm[i] = i;
  do {
    for (int k = 0; k < l; ++k) position[perm[k]] = k;
    int d = 0;
    for (int e = 0; e < l; ++e) d += position[e] < position[(e + 1) % l] ? 1 : -1;
    ++bucket_counts[std::abs(d)];
  } while (std::next_permutation(perm.begin(), perm.end()));

  double prev_root = 0;
  for (const auto& [ad, cp] : bucket_poly) {
    ConjugacyBucket bucket;
    bucket.abs_flow_difference = ad;
    bucket.word_count = bucket_counts[ad];
    bucket.char_poly = cp;
    bucket.largest_root = largest_real_root(cp, make_rational(1, 1000000000000L)).approx();
    if (bucket.largest_root <= prev_root + 1e-9) {
      report.all_checks_passed = false;
      report.notes.push_back("largest roots not strictly increasing in |d|");
    }
    prev_root = bucket.largest_root;
    report.buckets.push_back(std::move(bucket));
  }
  return report;
}

std::vector<ConjectureRow> conjecture_sweep(int k_max, bool certified, int jobs) {
  if (k_max < 2) throw std::invalid_argument("k_max must be >= 2");
  if (k_max > 150) throw ResourceLimitError("conjecture sweep limited to k_max <= 150");
  AlgebraicReal limit = conjectured_odd_limit();
  const double limit_mid = limit.approx();
  std::vector<ConjectureRow> rows(k_max - 1);

  auto compute = [&](int idx) {
    int k = idx + 2;
    int l = 2 * k - 1;
    ConjectureRow row;
    row.k = k;
    row.genus = 2 * k + 1;
    row.l = l;
    if (certified) {
      PFBounds b = mu_certified(l, make_rational(1, int_pow(BigInt(10), 17)));
      row.mu_value = b.midpoint();
      Rational gap_hi = std::max(b.hi - limit.lo(), limit.hi() - b.lo);
      row.gap = to_double(gap_hi);
    } else {
      row.mu_value = mu(l);
      row.gap = std::abs(row.mu_value - limit_mid);
    }
    rows[idx] = row;
  };

  int workers = std::max(1, jobs);
  if (workers == 1) {
    for (size_t i = 0; i < rows.size(); ++i) compute(static_cast<int>(i));
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&]() {
        for (size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1))
          compute(static_cast<int>(i));
      });
    }
    for (auto& th : pool) th.join();
  }

  for (size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].mu_value > rows[i - 1].mu_value + 1e-9)
      throw std::logic_error("mu sequence failed to be nonincreasing");
  }
  return rows;
}

LowerBoundReport lower_bound_report(const IntersectionGraph& g) {
  LowerBoundReport report;
  for (int i = 0; i < g.size(); ++i) {
    for (int j : g.neighbors(i)) {
      if (g.multiplicity(i, j) >= 2) {
        report.rule = BoundRule::kDoubleEdge;
        report.bound = tree_lower_bound(std::sqrt(5.0));
        report.detail =
            "double edge: tree with one double and one simple edge forces the "
            "sqrt(5) adjacency bound (odd genus 5 needs the larger subgraphs "
            "with documented bound 7)";
        return report;
      }
    }
  }
  auto odd = shortest_induced_odd_cycle(g);
  if (!odd) {
    report.rule = BoundRule::kBipartite;
    report.bound = 1.0;
    report.detail = "bipartite intersection graph cannot fill a nonorientable surface";
    return report;
  }
  report.rule = BoundRule::kInducedOddCycle;
  report.odd_cycle_length = *odd;
  report.genus_bound = *odd + 1;
  report.bound = dilatation_function(1.0, static_cast<double>(*odd));
  report.detail = "induced odd cycle of length " + std::to_string(*odd) +
                  " bounds the dilatation by f(1,l) and the genus by l+1";
  return report;
}

}  // namespace penner
