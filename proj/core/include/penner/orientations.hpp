#pragma once

#include <utility>
#include <vector>

#include "penner/graphs.hpp"

namespace penner {

// Order of twisting: order[k] is the curve twisted k-th; every curve
// exactly once.
struct TwistWord {
  IntersectionGraph graph;
  std::vector<int> order;

  TwistWord(IntersectionGraph g, std::vector<int> word_order);
};

// Orientation of the edges of the underlying simple graph. Edge {i,j} is
// directed i -> j when i is twisted before j, so orientations coming from
// words are acyclic by construction.
class AcyclicOrientation {
 public:
  AcyclicOrientation(IntersectionGraph g, std::vector<std::vector<char>> to);

  const IntersectionGraph& graph() const { return graph_; }
  bool directed(int i, int j) const { return to_[i][j] != 0; }
  bool is_source(int v) const;
  bool is_sink(int v) const;
  bool is_acyclic() const;
  // Linear extension choosing the smallest available vertex first.
  std::vector<int> lex_min_topological_order() const;

 private:
  IntersectionGraph graph_;
  std::vector<std::vector<char>> to_;
};

AcyclicOrientation orientation_from_word(const TwistWord& w);

// Cycle-edge orientation bits for C_l / P_l: bit i set when edge
// {i, (i+1) mod l} is directed clockwise, i.e. i -> i+1.
std::vector<char> clockwise_bits(const AcyclicOrientation& o);

// (#clockwise) - (#anticlockwise) over the cycle edges of C_l or P_l.
int flow_difference(const AcyclicOrientation& o);
int flow_difference(const TwistWord& w);

// Reverse all edges at a source; acyclicity and flow difference are
// preserved (Pretzel moves).
AcyclicOrientation source_to_sink(const AcyclicOrientation& o, int v);

// Orientation on C_l with edges i -> i+1 for i < p = (l+d)/2 and reversed
// after; for the enriched family the pendant is twisted last. The word is
// the lexicographically least linear extension.
AcyclicOrientation canonical_orientation(int l, int d, bool enriched = false);
TwistWord canonical_word(int l, int d, bool enriched = false);

// Cycle word for an arbitrary clockwise bit pattern, pendant (if any)
// twisted last.
TwistWord word_from_clockwise_bits(int l, const std::vector<char>& cw, bool enriched = false,
                                   bool pendant_outward = true);

// All 2^l - 2 acyclic orientations of C_l.
std::vector<AcyclicOrientation> enumerate_orientations(int l);

// Twist-and-click parameters: a is the least positive solution of
// a c = 1 (mod l), and d = l - 2a is the flow difference of the l-th power.
std::pair<int, int> twist_and_click_params(int l, int c);

}  // namespace penner
