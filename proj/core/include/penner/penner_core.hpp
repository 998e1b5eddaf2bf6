#pragma once

#include "penner/algebraic_real.hpp"
#include "penner/big_matrix.hpp"
#include "penner/orientations.hpp"

namespace penner {

// I + R_i, where R_i carries row i of omega and zeros elsewhere.
BigMatrix twist_matrix(const IntersectionGraph& g, int i);

// Product of the twist matrices over the word; the first-twisted curve's
// matrix is the rightmost factor. Computed by successive row updates.
BigMatrix word_matrix(const TwistWord& w);

// Primitivity of a nonnegative matrix: strong connectivity of the support
// digraph plus aperiodicity. Positive diagonal entries short-circuit the
// aperiodicity test; otherwise boolean powers up to the Wielandt exponent
// are checked.
bool is_primitive(const BigMatrix& m);

// Perron-Frobenius eigenvalue to relative error <= tol. Power iteration
// with Collatz-Wielandt bracketing; all-ones start vector.
double spectral_radius_float(const BigMatrix& m, double tol);

struct PFBounds {
  Rational lo, hi;
  int iterations = 0;
  double midpoint() const { return to_double((lo + hi) / 2); }
};

// Rigorous enclosure of the Perron-Frobenius eigenvalue by exact integer
// power iteration: for x > 0, min_i (Mx)_i/x_i <= lambda <= max_i (Mx)_i/x_i,
// and the iterates' bounds close in on lambda for primitive M.
PFBounds exact_pf_bounds(const BigMatrix& m, const Rational& max_width, int max_iter = 20000);

}  // namespace penner
