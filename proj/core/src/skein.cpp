#include "penner/skein.hpp"

#include "penner/orientations.hpp"

namespace penner {

SignedCurveSystem::SignedCurveSystem(std::vector<std::vector<int>> pairing_,
                                     std::vector<int> signs_, std::vector<int> order_)
    : n(static_cast<int>(pairing_.size())),
      pairing(std::move(pairing_)),
      signs(std::move(signs_)),
      order(std::move(order_)) {
  if (n < 1) throw std::invalid_argument("curve system needs at least one curve");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(pairing[i].size()) != n)
      throw std::invalid_argument("pairing is not square");
    for (int j = 0; j < n; ++j)
      if (pairing[i][j] != -pairing[j][i])
        throw std::invalid_argument("pairing must be antisymmetric");
  }
  if (static_cast<int>(signs.size()) != n) throw std::invalid_argument("one sign per curve");
  for (int s : signs)
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
  std::vector<char> seen(n, 0);
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("order length");
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("order is not a permutation");
    seen[v] = 1;
  }
}

BigMatrix homology_action(const SignedCurveSystem& sys) {
  const int n = sys.n;
  BigMatrix a = BigMatrix::identity(n);
  // Transvection along c_v maps x to x + sign_v <x, c_v> c_v; in the curve
  // basis it modifies row v. Applying the twists in word order, row v gains
  // sign_v * <c_j, c_v> * row_j = -sign_v * pairing[v][j] * row_j.
  for (int v : sys.order) {
    for (int j = 0; j < n; ++j) {
      int w = -sys.signs[v] * sys.pairing[v][j];
      if (w != 0) a.row_axpy(v, j, BigInt(w));
    }
  }
  return a;
}

namespace {

void check_cycle_params(int d, int l) {
  if (l < 4 || l % 2 != 0) throw std::invalid_argument("doubled cycle length must be even, >= 4");
  if (d < 0 || d > l - 2 || d % 2 != 0)
    throw std::invalid_argument("flow difference must be even with 0 <= d <= l-2");
}

std::vector<std::vector<int>> cycle_pairing(int l, int extra = 0) {
  std::vector<std::vector<int>> p(l + extra, std::vector<int>(l + extra, 0));
  for (int i = 0; i + 1 < l; ++i) {
    p[i][i + 1] = 1;
    p[i + 1][i] = -1;
  }
  // The product of the pairings around the cycle is an orientation invariant
  // of the plumbed curve system; (-1)^(l/2) is the value that reproduces the
  // Penner dilatations (wrong product parity yields a unit-circle spectrum).
  int closing = (l / 2) % 2 == 0 ? 1 : -1;
  p[l - 1][0] = closing;
  p[0][l - 1] = -closing;
  return p;
}

std::vector<int> cycle_word(int l, int d) {
  // Same canonical representative as the transition-matrix side.
  TwistWord w = canonical_word(l, d, false);
  return w.order;
}

}  // namespace

SignedCurveSystem doubled_cycle_system(int l, int d) {
  check_cycle_params(d, l);
  std::vector<int> signs(l);
  for (int i = 0; i < l; ++i) signs[i] = (i % 2 == 0) ? 1 : -1;
  return SignedCurveSystem(cycle_pairing(l), std::move(signs), cycle_word(l, d));
}

SignedCurveSystem doubled_enriched_system(int l, int d) {
  check_cycle_params(d, l);
  auto pairing = cycle_pairing(l, 2);
  const int pendant_a = l, pendant_b = l + 1;
  pairing[pendant_a][0] = 1;
  pairing[0][pendant_a] = -1;
  pairing[pendant_b][l / 2] = 1;
  pairing[l / 2][pendant_b] = -1;
  std::vector<int> signs(l + 2);
  for (int i = 0; i < l; ++i) signs[i] = (i % 2 == 0) ? 1 : -1;
  // Pendant twist signs are opposite to their attachment curves, matching
  // the bipartition of the doubled graph.
  signs[pendant_a] = -signs[0];
  signs[pendant_b] = -signs[l / 2];
  std::vector<int> order = cycle_word(l, d);
  order.push_back(pendant_a);
  order.push_back(pendant_b);
  return SignedCurveSystem(std::move(pairing), std::move(signs), std::move(order));
}

IntPoly cycle_char_poly(int d, int l) {
  return homology_action(doubled_cycle_system(l, d)).char_poly();
}

IntPoly enriched_cycle_char_poly(int d, int l) {
  return homology_action(doubled_enriched_system(l, d)).char_poly();
}

IntPoly cycle_char_diff_rhs(int d, int l) {
  check_cycle_params(d, l);
  IntPoly t_minus_1{-1, 1};
  IntPoly diff = IntPoly::monomial(BigInt(1), (l + d) / 2) - IntPoly::monomial(BigInt(1), (l - d - 2) / 2);
  return t_minus_1 * diff;
}

IntPoly enriched_diff_identity(int d, int l) {
  check_cycle_params(d, l);
  if (d + 2 > l - 2) throw std::invalid_argument("need d + 2 <= l - 2");
  IntPoly t_minus_1{-1, 1};
  IntPoly cube = t_minus_1 * t_minus_1 * t_minus_1;
  IntPoly diff = IntPoly::monomial(BigInt(1), (l + d) / 2) - IntPoly::monomial(BigInt(1), (l - d - 2) / 2);
  return cube * diff;
}

}  // namespace penner
