#pragma once

#include <string>

#include "penner/algebraic_real.hpp"
#include "penner/graphs.hpp"
#include "penner/laurent.hpp"
#include "penner/minimizer.hpp"

namespace penner {

// Graph exchange format: { "n": int, "edges": [[i, j, multiplicity], ...] };
// undirected edges, symmetry implicit.
std::string graph_to_json(const IntersectionGraph& g);
IntersectionGraph graph_from_json(const std::string& text);

// Array of decimal coefficient strings, constant term first.
std::string poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const std::string& text);

// { "poly": [...], "lo": "p/q", "hi": "p/q", "approx": float }
std::string algebraic_to_json(const AlgebraicReal& a);

// Map from u-exponent (as decimal string key) to coefficient string.
std::string laurent_to_json(const HalfLaurent& p);
HalfLaurent laurent_from_json(const std::string& text);

std::string word_to_json(const std::vector<int>& order);
std::vector<int> word_from_json(const std::string& text);

std::string certificate_to_json(const MinimizerCertificate& cert, int digits = 15);

}  // namespace penner
