#pragma once

#include <optional>
#include <vector>

#include "penner/bigint.hpp"

namespace penner {

// Intersection graph of a curve system: vertices are curves, omega[i][j]
// the geometric intersection multiplicity. Symmetric, zero diagonal.
// Immutable after construction.
class IntersectionGraph {
 public:
  explicit IntersectionGraph(std::vector<std::vector<int>> omega);

  int size() const { return n_; }
  int multiplicity(int i, int j) const { return omega_[i][j]; }
  const std::vector<std::vector<int>>& omega() const { return omega_; }
  // Vertices adjacent to i in the underlying simple graph.
  const std::vector<int>& neighbors(int i) const { return adj_[i]; }
  int edge_count() const;
  bool connected() const;

  bool operator==(const IntersectionGraph& o) const { return omega_ == o.omega_; }

 private:
  int n_;
  std::vector<std::vector<int>> omega_;
  std::vector<std::vector<int>> adj_;
};

// Cycle C_l: vertices 0..l-1, simple edges i -- (i+1 mod l).
IntersectionGraph cycle_graph(int l);

// Enriched cycle P_l: C_l plus a pendant vertex l attached to vertex 0.
IntersectionGraph enriched_cycle_graph(int l);

bool is_cycle_graph(const IntersectionGraph& g);
bool is_enriched_cycle_graph(const IntersectionGraph& g);

bool is_bipartite(const IntersectionGraph& g);

// Length of a minimum-length induced odd cycle of the underlying simple
// graph; empty for bipartite graphs. A shortest odd cycle is chordless,
// which is verified on the extracted cycle.
std::optional<int> shortest_induced_odd_cycle(const IntersectionGraph& g);

// l+1 for the induced odd cycle length l; empty when bipartite (such a
// family cannot fill a nonorientable surface).
std::optional<int> genus_lower_bound(const IntersectionGraph& g);

// Largest eigenvalue of omega, to absolute error <= eps. Power iteration
// on omega + I with Collatz-Wielandt bracketing; requires connectivity.
double adjacency_spectral_radius(const IntersectionGraph& g, double eps);

// (2 + a^2 + sqrt(4a^2 + a^4)) / 2, the larger root of x + 1/x - 2 = a^2.
double tree_lower_bound(double alpha);

}  // namespace penner
