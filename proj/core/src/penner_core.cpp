#include "penner/penner_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace penner {

BigMatrix twist_matrix(const IntersectionGraph& g, int i) {
  if (i < 0 || i >= g.size()) throw std::invalid_argument("vertex index out of range");
  BigMatrix m = BigMatrix::identity(g.size());
  for (int j : g.neighbors(i)) m.at(i, j) = g.multiplicity(i, j);
  return m;
}

BigMatrix word_matrix(const TwistWord& w) {
  const auto& g = w.graph;
  BigMatrix a = BigMatrix::identity(g.size());
  // Left-multiplying by I + e_v w_v^T adds the omega-weighted neighbor rows
  // to row v; applying the twists in word order builds the whole product.
  for (int v : w.order) {
    for (int j : g.neighbors(v)) a.row_axpy(v, j, BigInt(g.multiplicity(v, j)));
  }
  return a;
}

namespace {

std::vector<std::vector<char>> support(const BigMatrix& m) {
  const int n = m.dim();
  std::vector<std::vector<char>> s(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] = sign_of(m.at(i, j)) > 0 ? 1 : 0;
  return s;
}

bool strongly_connected(const std::vector<std::vector<char>>& s) {
  const int n = static_cast<int>(s.size());
  auto reach_all = [&](bool transpose) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u) {
        char bit = transpose ? s[u][v] : s[v][u];
        if (bit && !seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
      }
    }
    return count == n;
  };
  return reach_all(false) && reach_all(true);
}

std::vector<std::vector<char>> bool_mul(const std::vector<std::vector<char>>& a,
                                        const std::vector<std::vector<char>>& b) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a[i][k])
        for (int j = 0; j < n; ++j)
          if (b[k][j]) r[i][j] = 1;
  return r;
}

}  // namespace

bool is_primitive(const BigMatrix& m) {
  const int n = m.dim();
  if (n == 0) return false;
  if (!m.is_nonnegative()) throw std::invalid_argument("matrix must be nonnegative");
  if (n == 1) return sign_of(m.at(0, 0)) > 0;
  auto s = support(m);
  if (!strongly_connected(s)) return false;
  bool positive_diagonal = true;
  for (int i = 0; i < n; ++i) positive_diagonal = positive_diagonal && s[i][i];
  if (positive_diagonal) return true;  // irreducible + loops at every vertex
  // General case: M is primitive iff M^w is positive at the Wielandt
  // exponent w = (n-1)^2 + 1. Boolean power by squaring.
  long w = static_cast<long>(n - 1) * (n - 1) + 1;
  auto acc = s;
  --w;  // acc = s^1 already
  auto sq = s;
  while (w > 0) {
    if (w & 1) acc = bool_mul(acc, sq);
    sq = bool_mul(sq, sq);
    w >>= 1;
  }
  for (const auto& row : acc)
    for (char bit : row)
      if (!bit) return false;
  return true;
}

double spectral_radius_float(const BigMatrix& m, double tol) {
  if (tol <= 0) throw std::invalid_argument("tol must be positive");
  if (!is_primitive(m))
    throw NotPerronFrobeniusError("matrix is not primitive; Perron-Frobenius theory unavailable");
  const int n = m.dim();
  std::vector<std::vector<long double>> a(n, std::vector<long double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = static_cast<long double>(to_double(m.at(i, j)));
  std::vector<long double> x(n, 1.0L), y(n);
  for (int iter = 0; iter < 2000000; ++iter) {
    long double lo = std::numeric_limits<long double>::infinity();
    long double hi = 0;
    for (int i = 0; i < n; ++i) {
      long double acc = 0;
      for (int j = 0; j < n; ++j) acc += a[i][j] * x[j];
      y[i] = acc;
      long double ratio = acc / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (hi - lo <= tol * lo) return static_cast<double>(0.5L * (lo + hi));
    long double norm = *std::max_element(y.begin(), y.end());
    for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  throw ConvergenceError("power iteration did not converge");
}

PFBounds exact_pf_bounds(const BigMatrix& m, const Rational& max_width, int max_iter) {
  if (sign_of(max_width) <= 0) throw std::invalid_argument("width must be positive");
  if (!is_primitive(m))
    throw NotPerronFrobeniusError("matrix is not primitive; Perron-Frobenius theory unavailable");
  const int n = m.dim();
  std::vector<BigInt> x(n, BigInt(1));
  PFBounds best;
  bool have_best = false;
  for (int iter = 1; iter <= max_iter; ++iter) {
    std::vector<BigInt> y = m.apply(x);
    // Extreme ratios y_i/x_i located by cross multiplication; rationals are
    // only materialized for the two winners.
    int lo_i = 0, hi_i = 0;
    for (int i = 1; i < n; ++i) {
      if (y[i] * x[lo_i] < y[lo_i] * x[i]) lo_i = i;
      if (y[i] * x[hi_i] > y[hi_i] * x[i]) hi_i = i;
    }
    Rational lo = make_rational(y[lo_i], x[lo_i]);
    Rational hi = make_rational(y[hi_i], x[hi_i]);
    // Every iterate yields valid bounds; keep the intersection.
    if (!have_best) {
      best.lo = std::move(lo);
      best.hi = std::move(hi);
      have_best = true;
    } else {
      if (lo > best.lo) best.lo = std::move(lo);
      if (hi < best.hi) best.hi = std::move(hi);
    }
    best.iterations = iter;
    if (best.hi - best.lo <= max_width) return best;
    // The bounds are scale invariant in x, so the iterate can be kept small:
    // flooring positive entries down to ~320 bits perturbs the direction by
    // at most 2^-319 per step, far below any requested width.
    size_t min_bits = SIZE_MAX;
    for (const auto& v : y) min_bits = std::min(min_bits, mpz_sizeinbase(v.get_mpz_t(), 2));
    if (min_bits > 320) {
      unsigned long shift = static_cast<unsigned long>(min_bits - 320);
      for (auto& v : y) mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), shift);
    }
    x = std::move(y);
  }
  throw ConvergenceError("exact Collatz-Wielandt bounds did not reach the requested width");
}

}  // namespace penner
