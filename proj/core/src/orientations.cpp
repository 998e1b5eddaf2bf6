#include "penner/orientations.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace penner {

TwistWord::TwistWord(IntersectionGraph g, std::vector<int> word_order)
    : graph(std::move(g)), order(std::move(word_order)) {
  const int n = graph.size();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("word length must equal vertex count");
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("word is not a permutation");
    seen[v] = 1;
  }
}

AcyclicOrientation::AcyclicOrientation(IntersectionGraph g, std::vector<std::vector<char>> to)
    : graph_(std::move(g)), to_(std::move(to)) {
  const int n = graph_.size();
  if (static_cast<int>(to_.size()) != n) throw std::invalid_argument("direction table size");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(to_[i].size()) != n) throw std::invalid_argument("direction table size");
    for (int j = 0; j < n; ++j) {
      bool edge = graph_.multiplicity(i, j) > 0;
      bool oriented = to_[i][j] || to_[j][i];
      if (edge && !(to_[i][j] ^ to_[j][i]))
        throw std::invalid_argument("every edge needs exactly one direction");
      if (!edge && oriented) throw std::invalid_argument("direction on a non-edge");
    }
  }
}

bool AcyclicOrientation::is_source(int v) const {
  for (int u : graph_.neighbors(v))
    if (to_[u][v]) return false;
  return !graph_.neighbors(v).empty();
}

bool AcyclicOrientation::is_sink(int v) const {
  for (int u : graph_.neighbors(v))
    if (to_[v][u]) return false;
  return !graph_.neighbors(v).empty();
}

bool AcyclicOrientation::is_acyclic() const {
  // Kahn peeling.
  const int n = graph_.size();
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j : graph_.neighbors(i))
      if (to_[j][i]) ++indeg[i];
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  int removed = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++removed;
    for (int u : graph_.neighbors(v)) {
      if (to_[v][u] && --indeg[u] == 0) stack.push_back(u);
    }
  }
  return removed == n;
}

std::vector<int> AcyclicOrientation::lex_min_topological_order() const {
  const int n = graph_.size();
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j : graph_.neighbors(i))
      if (to_[j][i]) ++indeg[i];
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push(i);
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int u : graph_.neighbors(v)) {
      if (to_[v][u] && --indeg[u] == 0) ready.push(u);
    }
  }
  if (static_cast<int>(order.size()) != n)
    throw std::logic_error("orientation is not acyclic");
  return order;
}

AcyclicOrientation orientation_from_word(const TwistWord& w) {
  const int n = w.graph.size();
  std::vector<int> position(n);
  for (int k = 0; k < n; ++k) position[w.order[k]] = k;
  std::vector<std::vector<char>> to(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j : w.graph.neighbors(i)) {
      if (position[i] < position[j]) to[i][j] = 1;
    }
  }
  return AcyclicOrientation(w.graph, std::move(to));
}

namespace {

int cycle_length_of(const IntersectionGraph& g) {
  if (is_cycle_graph(g)) return g.size();
  if (is_enriched_cycle_graph(g)) return g.size() - 1;
  throw std::invalid_argument("flow difference needs a cycle or enriched cycle");
}

}  // namespace

std::vector<char> clockwise_bits(const AcyclicOrientation& o) {
  int l = cycle_length_of(o.graph());
  std::vector<char> cw(l, 0);
  for (int i = 0; i < l; ++i) cw[i] = o.directed(i, (i + 1) % l) ? 1 : 0;
  return cw;
}

int flow_difference(const AcyclicOrientation& o) {
  auto cw = clockwise_bits(o);
  int d = 0;
  for (char bit : cw) d += bit ? 1 : -1;
  return d;
}

int flow_difference(const TwistWord& w) { return flow_difference(orientation_from_word(w)); }

AcyclicOrientation source_to_sink(const AcyclicOrientation& o, int v) {
  if (!o.is_source(v)) throw std::domain_error("vertex is not a source");
  const int n = o.graph().size();
  std::vector<std::vector<char>> to(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j : o.graph().neighbors(i))
      if (o.directed(i, j)) to[i][j] = 1;
  for (int u : o.graph().neighbors(v)) {
    to[v][u] = 0;
    to[u][v] = 1;
  }
  return AcyclicOrientation(o.graph(), std::move(to));
}

TwistWord word_from_clockwise_bits(int l, const std::vector<char>& cw, bool enriched,
                                   bool pendant_outward) {
  if (static_cast<int>(cw.size()) != l) throw std::invalid_argument("need one bit per cycle edge");
  bool all_same = std::all_of(cw.begin(), cw.end(), [](char b) { return b; }) ||
                  std::all_of(cw.begin(), cw.end(), [](char b) { return !b; });
  if (all_same) throw std::invalid_argument("cyclic orientation is not acyclic");
  IntersectionGraph g = enriched ? enriched_cycle_graph(l) : cycle_graph(l);
  const int n = g.size();
  std::vector<std::vector<char>> to(n, std::vector<char>(n, 0));
  for (int i = 0; i < l; ++i) {
    int j = (i + 1) % l;
    if (cw[i])
      to[i][j] = 1;
    else
      to[j][i] = 1;
  }
  if (enriched) {
    // pendant_outward: attachment twisted before the pendant.
    if (pendant_outward)
      to[0][l] = 1;
    else
      to[l][0] = 1;
  }
  AcyclicOrientation o(std::move(g), std::move(to));
  std::vector<int> order;
  if (enriched && pendant_outward) {
    // Pendant last: linear extension of the cycle part, pendant appended.
    order = o.lex_min_topological_order();
    order.erase(std::remove(order.begin(), order.end(), l), order.end());
    order.push_back(l);
  } else {
    order = o.lex_min_topological_order();
  }
  return TwistWord(o.graph(), std::move(order));
}

AcyclicOrientation canonical_orientation(int l, int d, bool enriched) {
  if (l < 3) throw std::invalid_argument("cycle length must be >= 3");
  if (std::abs(d) > l - 2 || ((d - l) % 2) != 0)
    throw std::invalid_argument("flow difference must satisfy |d| <= l-2, d = l (mod 2)");
  int p = (l + d) / 2;
  std::vector<char> cw(l, 0);
  for (int i = 0; i < p; ++i) cw[i] = 1;
  return orientation_from_word(word_from_clockwise_bits(l, cw, enriched));
}

TwistWord canonical_word(int l, int d, bool enriched) {
  if (l < 3) throw std::invalid_argument("cycle length must be >= 3");
  if (std::abs(d) > l - 2 || ((d - l) % 2) != 0)
    throw std::invalid_argument("flow difference must satisfy |d| <= l-2, d = l (mod 2)");
  int p = (l + d) / 2;
  std::vector<char> cw(l, 0);
  for (int i = 0; i < p; ++i) cw[i] = 1;
  return word_from_clockwise_bits(l, cw, enriched);
}

std::vector<AcyclicOrientation> enumerate_orientations(int l) {
  if (l < 3) throw std::invalid_argument("cycle length must be >= 3");
  if (l > 20) throw ResourceLimitError("enumerate_orientations limited to l <= 20");
  IntersectionGraph g = cycle_graph(l);
  std::vector<AcyclicOrientation> all;
  all.reserve((size_t{1} << l) - 2);
  for (unsigned long mask = 0; mask < (1ul << l); ++mask) {
    if (mask == 0 || mask + 1 == (1ul << l)) continue;  // the two cyclic ones
    std::vector<std::vector<char>> to(l, std::vector<char>(l, 0));
    for (int i = 0; i < l; ++i) {
      int j = (i + 1) % l;
      if (mask & (1ul << i))
        to[i][j] = 1;
      else
        to[j][i] = 1;
    }
    all.emplace_back(g, std::move(to));
  }
  return all;
}

std::pair<int, int> twist_and_click_params(int l, int c) {
  if (l < 3 || l % 2 == 0) throw std::invalid_argument("l must be odd and >= 3");
  if (c < 1 || c >= l) throw std::invalid_argument("need 1 <= c < l");
  if (std::gcd(c, l) != 1) throw std::invalid_argument("c must be a unit mod l");
  int a = 1;
  while ((static_cast<long>(a) * c) % l != 1) ++a;
  return {a, l - 2 * a};
}

}  // namespace penner
